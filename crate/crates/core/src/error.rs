use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not 0 or a prime")]
    InvalidField(u32),

    #[error("objects live over different fields")]
    FieldMismatch,

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("matrix with {rows} rows has rank {rank}, not surjective")]
    NotSurjective { rows: usize, rank: usize },

    #[error("objects are truncated at different degrees ({0} vs {1})")]
    MaxdegMismatch(usize, usize),

    #[error("comodules are over different coalgebras")]
    CoalgebraMismatch,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("axiom violated: {0}")]
    Axiom(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cannot resolve reference: {0}")]
    Resolution(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }

    pub fn axiom(msg: impl Into<String>) -> Self {
        Error::Axiom(msg.into())
    }
}

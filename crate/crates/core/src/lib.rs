//! Exact chain-level homological algebra of dg-coalgebras and their comodules
//! over a field.

pub mod coalgebra;
pub mod comodule;
pub mod complex;
pub mod cotensor;
pub mod emss;
pub mod error;
pub mod fixtures;
pub mod gen;
pub mod io;
pub mod linalg;
pub mod postnikov;
pub mod report;

pub use coalgebra::{CoalgebraFlags, CoalgebraMap, DGCoalgebra, UnitCoideal};
pub use comodule::{is_fibrant, is_fibration, ComoduleMap, DGComodule, Fibrancy, FibrationVerdict, HomSpace, Pullback};
pub use complex::{ChainComplex, ChainMap, Homology, Splitting};
pub use emss::{e2_page, run_to_einfty, total_homology, SpectralSequencePage};
pub use error::{Error, Result};
pub use linalg::{Field, Matrix, Scalar};
pub use postnikov::{
    factorize, postnikov_tower, stabilized_limit, verify_tower, Factorization, PostnikovTower, StabilizedLimit,
};
pub use report::{Check, Report};

//! Command-line front end: file loading, fixture lookup, command dispatch and
//! report rendering.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use cotensor_core::cotensor::{cotensor, cotor, cotor_by_resolution, ext};
use cotensor_core::emss::{e2_page, emss_check, run_to_einfty};
use cotensor_core::io::{self, BuiltinResolver, Document, LoadOptions, Object, Resolver};
use cotensor_core::{
    factorize, fixtures, is_fibrant, is_fibration, postnikov_tower, stabilized_limit, verify_tower, ChainComplex,
    ComoduleMap, DGCoalgebra, DGComodule, Error, FibrationVerdict, Field, Report, Result,
};

pub const FIXTURES_ENV: &str = "COTENSOR_FIXTURES";

/// Window in which the shipped fixture files are written; every fixture
/// vanishes above degree 5.
pub const FIXTURE_FILE_MAXDEG: usize = 8;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Human,
    Machine,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SessionConfig {
    /// Overrides the field named in input files.
    pub field: Option<Field>,
    pub maxdeg: usize,
    pub qmax: usize,
    pub fixture_root: Option<PathBuf>,
    pub format: Format,
    pub verify: bool,
}

impl Default for SessionConfig {
    fn default() -> Self {
        Self { field: None, maxdeg: 8, qmax: 3, fixture_root: None, format: Format::Human, verify: false }
    }
}

impl SessionConfig {
    pub fn check(&self) -> Result<()> {
        if self.maxdeg < 2 {
            return Err(Error::precondition(format!("maxdeg must be at least 2, found {}", self.maxdeg)));
        }
        Ok(())
    }

    fn load_options(&self) -> LoadOptions {
        LoadOptions { field: self.field, maxdeg: self.maxdeg }
    }
}

fn parse_field(s: &str) -> std::result::Result<Field, String> {
    if s.eq_ignore_ascii_case("q") {
        return Ok(Field::rationals());
    }
    let p: u32 = s.parse().map_err(|_| format!("expected a prime, 0 or Q, found {s:?}"))?;
    Field::new(p).map_err(|e| e.to_string())
}

#[derive(Debug, Parser)]
#[command(name = "cotensor", version, about = "Exact computations with dg-coalgebras and comodules")]
pub struct Cli {
    /// Field characteristic (a prime, or 0 / Q for the rationals); overrides input files.
    #[arg(long, global = true, value_parser = parse_field)]
    pub field: Option<Field>,
    /// Truncation degree for every object.
    #[arg(long, global = true, default_value_t = 8)]
    pub maxdeg: usize,
    /// Highest cobar degree for spectral sequences.
    #[arg(long, global = true, default_value_t = 3)]
    pub qmax: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    /// Run the self-checks of the command and fail if any breaks.
    #[arg(long, global = true)]
    pub verify: bool,
    /// Directory searched for inputs and references not found relative to the referencing file.
    #[arg(long, global = true, env = FIXTURES_ENV)]
    pub fixture_root: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

impl Cli {
    pub fn config(&self) -> SessionConfig {
        SessionConfig {
            field: self.field,
            maxdeg: self.maxdeg,
            qmax: self.qmax,
            fixture_root: self.fixture_root.clone(),
            format: self.format,
            verify: self.verify,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Check the axioms of any input file.
    Validate { input: String },
    /// Homology dims of a complex, or of the carrier of a coalgebra or comodule.
    Homology { input: String },
    /// Split a complex into spheres and disks.
    Split { input: String },
    /// The cotensor product of two comodules.
    Cotensor {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// CoTor^q of two comodules per chain degree.
    Cotor {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        q: usize,
    },
    /// Ext^i between two comodules per internal degree.
    Ext {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        i: usize,
    },
    /// Whether a comodule is fibrant (coflat).
    Fibrant { input: String },
    /// Whether a comodule map is a fibration.
    Fibration { input: String },
    /// The Postnikov tower of a comodule.
    Postnikov {
        input: String,
        #[arg(long, default_value_t = 5)]
        stages: usize,
    },
    /// Factor a comodule map into a cofibration and a tower of fibrations.
    Factorize {
        input: String,
        #[arg(long, default_value_t = 5)]
        stages: usize,
    },
    /// The Eilenberg-Moore spectral sequence of a pair of comodules.
    Emss {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// List the built-in fixtures, or write them as files.
    Fixtures {
        #[arg(long)]
        write: Option<PathBuf>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Homology { .. } => "homology",
            Command::Split { .. } => "split",
            Command::Cotensor { .. } => "cotensor",
            Command::Cotor { .. } => "cotor",
            Command::Ext { .. } => "ext",
            Command::Fibrant { .. } => "fibrant",
            Command::Fibration { .. } => "fibration",
            Command::Postnikov { .. } => "postnikov",
            Command::Factorize { .. } => "factorize",
            Command::Emss { .. } => "emss",
            Command::Fixtures { .. } => "fixtures",
        }
    }
}

/// How a command ended when it produced a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    /// The input violates an axiom or precondition.
    Failed,
    /// A self-check requested with `--verify` broke.
    Breach,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Failed => 1,
            Status::Breach => 3,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub command: &'static str,
    pub status: Status,
    pub summary: Vec<String>,
    pub data: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<Report>,
}

impl Outcome {
    fn new(command: &'static str) -> Self {
        Self { command, status: Status::Ok, summary: Vec::new(), data: Value::Null, report: None }
    }

    fn line(&mut self, s: impl Into<String>) {
        self.summary.push(s.into());
    }

    /// Attaches a report; a failure gives `on_failure`.
    fn attach(&mut self, report: Report, on_failure: Status) {
        if !report.passed() {
            self.status = on_failure;
        }
        self.report = Some(report);
    }
}

/// Exit status for an error: 1 precondition, 2 parse, 3 internal invariant.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Resolution(_) | Error::Io(_) | Error::Json(_) => 2,
        Error::Invariant(_) => 3,
        _ => 1,
    }
}

/// A parsed input together with the validation of its axioms.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub path: String,
    pub document: Document,
    pub report: Report,
}

impl Loaded {
    pub fn comodule(&self) -> Result<&DGComodule> {
        match &self.document.object {
            Object::Comodule { comodule, .. } => Ok(comodule),
            other => Err(Error::precondition(format!("{} is a {}, expected a comodule", self.path, other.kind()))),
        }
    }

    pub fn comodule_map(&self) -> Result<&ComoduleMap> {
        match &self.document.object {
            Object::ComoduleMap { map, .. } => Ok(map),
            other => Err(Error::precondition(format!("{} is a {}, expected a comodule map", self.path, other.kind()))),
        }
    }

    pub fn carrier(&self) -> Result<&ChainComplex> {
        match &self.document.object {
            Object::Complex(x) => Ok(x),
            Object::Coalgebra(c) => Ok(c.carrier()),
            Object::Comodule { comodule, .. } => Ok(comodule.carrier()),
            other => Err(Error::precondition(format!("{} is a {}, expected a complex", self.path, other.kind()))),
        }
    }

    /// Errors out unless the axioms hold.
    pub fn require_valid(&self) -> Result<()> {
        match self.report.first_failure() {
            None => Ok(()),
            Some(c) => Err(Error::precondition(format!(
                "{} is invalid: {}{}",
                self.path,
                c.name,
                c.degree.map(|d| format!(" (degree {d})")).unwrap_or_default()
            ))),
        }
    }
}

fn validate(object: &Object) -> Report {
    match object {
        Object::Complex(x) => x.validate(),
        Object::Coalgebra(c) => c.validate(),
        Object::Comodule { comodule, .. } => comodule.validate(),
        Object::ComoduleMap { map, .. } => map.validate(),
        Object::CoalgebraMap { map, .. } => map.validate(),
    }
}

/// Resolves references first relative to the referencing file, then in the
/// fixture root, then among the built-in fixture names.
struct FileResolver<'a> {
    base: Option<PathBuf>,
    root: Option<&'a Path>,
}

impl FileResolver<'_> {
    fn locate(&self, reference: &str) -> Option<PathBuf> {
        let direct = Path::new(reference);
        let candidates = [self.base.as_ref().map(|b| b.join(reference)), self.root.map(|r| r.join(reference))];
        if direct.is_absolute() {
            return direct.is_file().then(|| direct.to_path_buf());
        }
        candidates.into_iter().flatten().find(|p| p.is_file())
    }

    fn load(&self, path: &Path, opts: &LoadOptions) -> Result<Document> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Resolution(format!("{}: {e}", path.display())))?;
        let mut nested = FileResolver { base: path.parent().map(Path::to_path_buf), root: self.root };
        io::parse(&text, opts, &mut nested).map_err(|e| match e {
            Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
            other => other,
        })
    }
}

impl Resolver for FileResolver<'_> {
    fn coalgebra(&mut self, reference: &str, opts: &LoadOptions) -> Result<Arc<DGCoalgebra>> {
        let Some(path) = self.locate(reference) else {
            return BuiltinResolver.coalgebra(reference, opts);
        };
        match self.load(&path, opts)?.object {
            Object::Coalgebra(c) => Ok(Arc::new(c)),
            other => Err(Error::Resolution(format!("{reference} is a {}, not a coalgebra", other.kind()))),
        }
    }

    fn comodule(&mut self, reference: &str, opts: &LoadOptions) -> Result<DGComodule> {
        let Some(path) = self.locate(reference) else {
            return BuiltinResolver.comodule(reference, opts);
        };
        match self.load(&path, opts)?.object {
            Object::Comodule { comodule, .. } => Ok(comodule),
            other => Err(Error::Resolution(format!("{reference} is a {}, not a comodule", other.kind()))),
        }
    }
}

fn builtin_document(name: &str, opts: &LoadOptions) -> Result<Option<Document>> {
    let field = opts.field.unwrap_or(Field::gf(2));
    if let Some(c) = fixtures::coalgebra_by_name(name, field, opts.maxdeg) {
        let doc = Document::new(Object::Coalgebra(c)).with_comment(&[fixtures::coalgebra_description(name)]);
        return Ok(Some(doc));
    }
    if name == "f3-f2" {
        let map = fixtures::f3_to_f2(field, opts.maxdeg)?;
        return Ok(Some(Document::new(Object::CoalgebraMap { source: "f3".into(), target: "f2".into(), map })));
    }
    Ok(fixtures::comodule_by_name(name, field, opts.maxdeg)?.map(|f| {
        Document::new(Object::Comodule { coalgebra: f.coalgebra.to_string(), comodule: f.comodule })
            .with_comment(&[f.description])
    }))
}

/// Loads a file (or a built-in fixture name) and validates it.
pub fn parse_input(input: &str, config: &SessionConfig) -> Result<Loaded> {
    let opts = config.load_options();
    let resolver = FileResolver { base: Some(PathBuf::from(".")), root: config.fixture_root.as_deref() };
    let document = match resolver.locate(input) {
        Some(path) => resolver.load(&path, &opts)?,
        None => builtin_document(input, &opts)?
            .ok_or_else(|| Error::Resolution(format!("{input}: no such file or fixture")))?,
    };
    let report = validate(&document.object);
    Ok(Loaded { path: input.to_string(), document, report })
}

fn load_comodule(input: &str, config: &SessionConfig) -> Result<DGComodule> {
    let loaded = parse_input(input, config)?;
    loaded.require_valid()?;
    Ok(loaded.comodule()?.clone())
}

fn load_map(input: &str, config: &SessionConfig) -> Result<ComoduleMap> {
    let loaded = parse_input(input, config)?;
    loaded.require_valid()?;
    Ok(loaded.comodule_map()?.clone())
}

fn same_coalgebra(x: &DGComodule, y: &DGComodule) -> Result<()> {
    if x.coalgebra() != y.coalgebra() {
        return Err(Error::CoalgebraMismatch);
    }
    Ok(())
}

fn fmt_dims(d: &[usize]) -> String {
    format!("{d:?}")
}

fn top_degree(dims: &[usize]) -> usize {
    dims.iter().rposition(|&d| d > 0).unwrap_or(0)
}

/// Runs one command; errors are returned, report failures set the status.
pub fn run_command(cmd: &Command, config: &SessionConfig) -> Result<Outcome> {
    config.check()?;
    let n = config.maxdeg;
    let exact = n - 1;
    let mut out = Outcome::new(cmd.name());
    match cmd {
        Command::Validate { input } => {
            let loaded = parse_input(input, config)?;
            let object = &loaded.document.object;
            out.line(format!("{input}: {} over {}", object.kind(), object.field()));
            let mut data = json!({ "kind": object.kind(), "field": object.field().characteristic() });
            match object {
                Object::Coalgebra(c) => {
                    let flags = c.flags();
                    out.line(format!(
                        "flags: coassociative={} counital={} cocommutative={} simply_connected={}",
                        flags.coassociative, flags.counital, flags.cocommutative, flags.simply_connected
                    ));
                    data["dims"] = json!(c.dims());
                    data["flags"] = serde_json::to_value(flags)?;
                }
                Object::Complex(x) => data["dims"] = json!(x.dims()),
                Object::Comodule { comodule, .. } => data["dims"] = json!(comodule.dims()),
                _ => {}
            }
            out.data = data;
            out.attach(loaded.report, Status::Failed);
        }
        Command::Homology { input } => {
            let loaded = parse_input(input, config)?;
            loaded.require_valid()?;
            let x = loaded.carrier()?;
            let h: Vec<usize> = x.homology_dims()[..=exact].to_vec();
            out.line(format!("dims {}", fmt_dims(x.dims())));
            out.line(format!("homology through degree {exact}: {}", fmt_dims(&h)));
            out.data = json!({ "dims": x.dims(), "homology": h, "exact_through": exact });
        }
        Command::Split { input } => {
            let loaded = parse_input(input, config)?;
            loaded.require_valid()?;
            let x = loaded.carrier()?;
            let s = x.split();
            out.line(format!("spheres V_n: {}", fmt_dims(&s.homology_dims)));
            out.line(format!("disks W_n:   {}", fmt_dims(&s.boundary_dims)));
            out.data = json!({ "spheres": s.homology_dims, "disks": s.boundary_dims });
            if config.verify {
                out.attach(s.check(x), Status::Breach);
            }
        }
        Command::Cotensor { left, right } => {
            let x = load_comodule(left, config)?;
            let y = load_comodule(right, config)?;
            same_coalgebra(&x, &y)?;
            let t = cotensor(&x, &y)?;
            let h: Vec<usize> = t.complex.homology_dims()[..=exact].to_vec();
            out.line(format!("dims {}", fmt_dims(t.dims())));
            out.line(format!("homology through degree {exact}: {}", fmt_dims(&h)));
            out.data = json!({ "dims": t.dims(), "homology": h, "exact_through": exact });
        }
        Command::Cotor { left, right, q } => {
            let x = load_comodule(left, config)?;
            let y = load_comodule(right, config)?;
            same_coalgebra(&x, &y)?;
            let dims = cotor(&x, &y, *q)?;
            let mut any = false;
            for (p, &d) in dims.iter().enumerate() {
                if d > 0 {
                    any = true;
                    out.line(format!("CoTor^{q}: dim {d} at chain degree {p}"));
                }
            }
            if !any {
                out.line(format!("CoTor^{q}: zero through chain degree {n}"));
            }
            out.data = json!({ "q": q, "dims": dims });
            if config.verify {
                let mut r = Report::new();
                let other = cotor_by_resolution(&x, &y, *q)?;
                match (0..=n).find(|&p| dims[p] != other[p]) {
                    None => r.pass("cobar route = resolution route"),
                    Some(p) => {
                        r.fail("cobar route = resolution route", Some(p), format!("{} vs {}", dims[p], other[p]))
                    }
                }
                out.attach(r, Status::Breach);
            }
        }
        Command::Ext { left, right, i } => {
            let x = load_comodule(left, config)?;
            let y = load_comodule(right, config)?;
            same_coalgebra(&x, &y)?;
            let dims = ext(&x, &y, *i, n)?;
            let xtop = top_degree(x.dims());
            let exact_m: Vec<bool> = (0..dims.len()).map(|m| xtop + m <= n).collect();
            for (m, &d) in dims.iter().enumerate() {
                if d > 0 {
                    let note = if exact_m[m] { "" } else { " (truncated)" };
                    out.line(format!("Ext^{i}: dim {d} in internal degree {m}{note}"));
                }
            }
            if dims.iter().all(|&d| d == 0) {
                out.line(format!("Ext^{i}: zero through internal degree {n}"));
            }
            out.data = json!({ "i": i, "dims": dims, "exact": exact_m });
        }
        Command::Fibrant { input } => {
            let x = load_comodule(input, config)?;
            let f = is_fibrant(&x, n)?;
            match f.obstruction {
                None => out.line(format!("fibrant through degree {}", f.through)),
                Some(d) => out.line(format!("not fibrant: CoTor^1(k, X) is nonzero in chain degree {d}")),
            }
            out.data =
                json!({ "fibrant": f.fibrant, "through": f.through, "obstruction": f.obstruction, "cotor1": f.cotor1 });
        }
        Command::Fibration { input } => {
            let f = load_map(input, config)?;
            let v = is_fibration(&f, n)?;
            let (line, verdict, degree) = match v {
                FibrationVerdict::Fibration => (format!("fibration through degree {n}"), "fibration", None),
                FibrationVerdict::KernelNotFibrant { degree } => {
                    (format!("not a fibration: kernel is not fibrant (degree {degree})"), "not_fibration", Some(degree))
                }
                FibrationVerdict::Inconclusive { degree } => (
                    format!("inconclusive: kernel fibrant, image not a degree-zero pullback (degree {degree})"),
                    "inconclusive",
                    Some(degree),
                ),
            };
            out.line(line);
            out.data = json!({ "verdict": verdict, "degree": degree });
        }
        Command::Postnikov { input, stages } => {
            let x = load_comodule(input, config)?;
            let t = postnikov_tower(&x, *stages)?;
            let ranks = t.attaching_ranks();
            let mut rows = Vec::new();
            for (k, s) in t.stages.iter().enumerate() {
                let h: Vec<usize> = s.object.carrier().homology_dims()[..=exact].to_vec();
                out.line(format!(
                    "X({k}): dims {}, homology {}, attached rank {}",
                    fmt_dims(s.object.dims()),
                    fmt_dims(&h),
                    ranks[k]
                ));
                rows.push(json!({ "stage": k, "dims": s.object.dims(), "homology": h, "attached": ranks[k] }));
            }
            let mut data = json!({ "stages": rows, "attaching_ranks": ranks });
            let mut report = config.verify.then(|| verify_tower(&t));
            if *stages >= 1 {
                let limit = stabilized_limit(&t)?;
                let fib = is_fibrant(&limit.comodule, limit.window)?;
                out.line(format!(
                    "limit through degree {}: dims {}, {}",
                    limit.window,
                    fmt_dims(&limit.comodule.dims()[..=limit.window]),
                    if fib.fibrant { "fibrant" } else { "not fibrant" }
                ));
                data["limit"] = json!({
                    "window": limit.window,
                    "dims": &limit.comodule.dims()[..=limit.window],
                    "fibrant": fib.fibrant,
                });
                if let Some(r) = report.as_mut() {
                    r.record("limit is fibrant", fib.obstruction, fib.fibrant, "");
                    let qi = limit.inclusion.is_quasi_iso(limit.window.saturating_sub(1));
                    r.record("X -> limit is a quasi-isomorphism", None, qi, "");
                }
            }
            out.data = data;
            if let Some(r) = report {
                out.attach(r, Status::Breach);
            }
        }
        Command::Factorize { input, stages } => {
            let f = load_map(input, config)?;
            let fact = factorize(&f, *stages)?;
            let g = fact.cofibration.target();
            out.line(format!("cover W: dims {}", fmt_dims(fact.cover.dims())));
            let ranks: Vec<usize> = fact.stages.iter().map(|s| s.attachment.as_ref().map_or(0, |a| a.rank)).collect();
            out.line(format!("G_{}: dims {}, attached ranks {}", fact.top(), fmt_dims(g.dims()), fmt_dims(&ranks)));
            out.data =
                json!({ "cover": fact.cover.dims(), "top": fact.top(), "dims": g.dims(), "attaching_ranks": ranks });
            if config.verify {
                out.attach(fact.verify(), Status::Breach);
            }
        }
        Command::Emss { left, right } => {
            let x = load_comodule(left, config)?;
            let y = load_comodule(right, config)?;
            same_coalgebra(&x, &y)?;
            let e2 = e2_page(&x, &y, config.qmax)?;
            let inf = run_to_einfty(&e2);
            out.line(format!("exact in total degrees 0..={}", e2.window));
            for c in e2.cells.iter().filter(|c| c.dim > 0) {
                out.line(format!("E2 (q={}, p={}): dim {}", c.q, c.p, c.dim));
            }
            out.line(format!("E-infinity reached at page {}", inf.page));
            for c in inf.cells.iter().filter(|c| c.dim > 0) {
                out.line(format!("E-infinity (q={}, p={}): dim {}", c.q, c.p, c.dim));
            }
            let sums = inf.antidiagonal_sums();
            out.line(format!("total homology: {}", fmt_dims(&sums)));
            out.data = json!({ "e2": e2.dump(), "einfty": inf.dump(), "total": sums });
            if config.verify {
                out.attach(emss_check(&x, &y, config.qmax)?, Status::Breach);
            }
        }
        Command::Fixtures { write } => {
            let field = config.field.unwrap_or(Field::gf(2));
            let files = io::fixture_files(field, FIXTURE_FILE_MAXDEG)?;
            let mut names = Vec::new();
            for (name, text) in &files {
                if let Some(dir) = write {
                    std::fs::create_dir_all(dir)?;
                    std::fs::write(dir.join(name), text)?;
                }
                names.push(name.clone());
            }
            for f in fixtures::comodule_fixtures(field, n)? {
                out.line(format!(
                    "{:<14} over {}: dims {}",
                    f.name,
                    f.coalgebra,
                    fmt_dims(&f.comodule.dims()[..=top_degree(f.comodule.dims())])
                ));
            }
            if let Some(dir) = write {
                out.line(format!("wrote {} files to {}", files.len(), dir.display()));
            }
            out.data = json!({ "files": names });
        }
    }
    Ok(out)
}

/// Renders an outcome for the terminal or as stable JSON.
pub fn render(outcome: &Outcome, config: &SessionConfig) -> String {
    match config.format {
        Format::Human => {
            let mut s = String::new();
            for l in &outcome.summary {
                s.push_str(l);
                s.push('\n');
            }
            if let Some(r) = &outcome.report {
                s.push_str(&r.to_string());
                let status = if r.passed() { "pass" } else { "FAIL" };
                s.push_str(&format!(
                    "{status}: {} of {} checks passed\n",
                    r.checks.iter().filter(|c| c.passed).count(),
                    r.checks.len()
                ));
            }
            s
        }
        Format::Machine => {
            let doc = json!({
                "config": {
                    "field": config.field.map(|f| f.characteristic()),
                    "maxdeg": config.maxdeg,
                    "qmax": config.qmax,
                    "verify": config.verify,
                },
                "outcome": outcome,
            });
            let mut s = serde_json::to_string_pretty(&doc).expect("outcomes serialize");
            s.push('\n');
            s
        }
    }
}

/// Renders an error the same way as an outcome.
pub fn render_error(command: &str, e: &Error, config: &SessionConfig) -> String {
    match config.format {
        Format::Human => format!("error: {e}\n"),
        Format::Machine => {
            let doc = json!({ "command": command, "error": e.to_string(), "exit_code": exit_code(e) });
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("errors serialize"))
        }
    }
}

//! The JSON text format for complexes, coalgebras, comodules and maps.
//!
//! Every document is an object with a `"kind"` and an optional `"comment"`
//! array of lines. Matrices are keyed by degree and written row-major; entries
//! are integers over GF(p) and `"a/b"` strings over ℚ. Degrees whose matrix is
//! zero are omitted, so a missing key means the zero matrix.
//!
//! [`to_canonical`] writes the unique canonical text of a document, and
//! parsing a canonical file then writing it back reproduces it byte for byte.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{Map, Value};

use crate::coalgebra::{CoalgebraMap, DGCoalgebra};
use crate::comodule::{ComoduleMap, DGComodule};
use crate::complex::{tensor_dims, ChainComplex, ChainMap};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::linalg::{parse_rational, rational_to_string, Field, Matrix, Scalar};

/// Field and truncation applied while loading.
///
/// `field` overrides the file's `"field"`; every object is built with
/// degrees `0..=maxdeg`, padding with zeros or dropping higher degrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LoadOptions {
    pub field: Option<Field>,
    pub maxdeg: usize,
}

/// Resolves the references a comodule or map document makes to other objects.
pub trait Resolver {
    fn coalgebra(&mut self, reference: &str, opts: &LoadOptions) -> Result<Arc<DGCoalgebra>>;
    fn comodule(&mut self, reference: &str, opts: &LoadOptions) -> Result<DGComodule>;
}

/// Resolves only the names of the built-in fixtures.
#[derive(Clone, Copy, Debug, Default)]
pub struct BuiltinResolver;

impl Resolver for BuiltinResolver {
    fn coalgebra(&mut self, reference: &str, opts: &LoadOptions) -> Result<Arc<DGCoalgebra>> {
        let field = opts.field.unwrap_or(Field::gf(2));
        fixtures::coalgebra_by_name(reference, field, opts.maxdeg)
            .map(Arc::new)
            .ok_or_else(|| Error::Resolution(format!("no coalgebra named {reference:?}")))
    }

    fn comodule(&mut self, reference: &str, opts: &LoadOptions) -> Result<DGComodule> {
        let field = opts.field.unwrap_or(Field::gf(2));
        fixtures::comodule_by_name(reference, field, opts.maxdeg)?
            .map(|f| f.comodule)
            .ok_or_else(|| Error::Resolution(format!("no comodule named {reference:?}")))
    }
}

#[derive(Clone, Debug)]
pub enum Object {
    Complex(ChainComplex),
    Coalgebra(DGCoalgebra),
    Comodule { coalgebra: String, comodule: DGComodule },
    ComoduleMap { source: String, target: String, map: ComoduleMap },
    CoalgebraMap { source: String, target: String, map: CoalgebraMap },
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Complex(_) => "complex",
            Object::Coalgebra(_) => "coalgebra",
            Object::Comodule { .. } => "comodule",
            Object::ComoduleMap { .. } => "comodule_map",
            Object::CoalgebraMap { .. } => "coalgebra_map",
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Object::Complex(x) => x.field(),
            Object::Coalgebra(c) => c.field(),
            Object::Comodule { comodule, .. } => comodule.field(),
            Object::ComoduleMap { map, .. } => map.source().field(),
            Object::CoalgebraMap { map, .. } => map.source().field(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Document {
    pub comment: Vec<String>,
    pub object: Object,
}

impl Document {
    pub fn new(object: Object) -> Self {
        Self { comment: Vec::new(), object }
    }

    pub fn with_comment(mut self, lines: &[&str]) -> Self {
        self.comment = lines.iter().map(|s| s.to_string()).collect();
        self
    }
}

fn parse_error(path: &str, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("{path}: {msg}"))
}

/// Reads the document's `"kind"` without building anything.
pub fn peek_kind(text: &str) -> Result<String> {
    let root = parse_json(text)?;
    Ok(str_field(&root, "kind")?.to_string())
}

fn parse_json(text: &str) -> Result<Map<String, Value>> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    match v {
        Value::Object(m) => Ok(m),
        _ => Err(parse_error("document", "expected a JSON object")),
    }
}

fn str_field<'a>(root: &'a Map<String, Value>, key: &str) -> Result<&'a str> {
    root.get(key)
        .ok_or_else(|| parse_error(key, "missing"))?
        .as_str()
        .ok_or_else(|| parse_error(key, "expected a string"))
}

fn check_keys(root: &Map<String, Value>, allowed: &[&str]) -> Result<()> {
    match root.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(parse_error(k, "unknown key")),
        None => Ok(()),
    }
}

fn read_field(root: &Map<String, Value>, opts: &LoadOptions) -> Result<Field> {
    let v = root.get("field").ok_or_else(|| parse_error("field", "missing"))?;
    let p =
        v.as_u64().and_then(|p| u32::try_from(p).ok()).ok_or_else(|| parse_error("field", "expected 0 or a prime"))?;
    let file_field = Field::new(p).map_err(|e| parse_error("field", e))?;
    Ok(opts.field.unwrap_or(file_field))
}

fn read_comment(root: &Map<String, Value>) -> Result<Vec<String>> {
    match root.get("comment") {
        None => Ok(Vec::new()),
        Some(Value::Array(lines)) => lines
            .iter()
            .map(|l| l.as_str().map(str::to_string).ok_or_else(|| parse_error("comment", "expected strings")))
            .collect(),
        Some(_) => Err(parse_error("comment", "expected an array of strings")),
    }
}

/// Returns the padded dims and the file's own top degree.
fn read_dims(root: &Map<String, Value>, maxdeg: usize) -> Result<(Vec<usize>, usize)> {
    let arr = root
        .get("dims")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_error("dims", "expected an array of dimensions"))?;
    if arr.is_empty() {
        return Err(parse_error("dims", "needs at least degree 0"));
    }
    let mut file = Vec::with_capacity(arr.len());
    for (n, v) in arr.iter().enumerate() {
        let d = v.as_u64().ok_or_else(|| parse_error(&format!("dims[{n}]"), "expected a non-negative integer"))?;
        file.push(d as usize);
    }
    let dims = (0..=maxdeg).map(|n| file.get(n).copied().unwrap_or(0)).collect();
    Ok((dims, file.len() - 1))
}

fn reduce(field: Field, q: &BigRational) -> Result<Scalar> {
    if field.is_rational() {
        return Ok(Scalar::Rational(q.clone()));
    }
    let p = BigInt::from(field.characteristic());
    let residue = |x: &BigInt| -> i64 {
        let r = ((x % &p) + &p) % &p;
        r.to_i64().expect("residue fits")
    };
    Scalar::from_ratio(field, residue(q.numer()), residue(q.denom()))
}

fn read_entry(v: &Value, field: Field, path: &str) -> Result<Scalar> {
    let q = match v {
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(&n.to_string()),
        Value::String(s) => parse_rational(s),
        _ => None,
    }
    .ok_or_else(|| parse_error(path, format!("bad matrix entry {v}")))?;
    reduce(field, &q).map_err(|e| parse_error(path, e))
}

fn read_matrix(v: &Value, field: Field, rows: usize, cols: usize, path: &str) -> Result<Matrix> {
    let arr = v.as_array().ok_or_else(|| parse_error(path, "expected an array of rows"))?;
    if arr.len() != rows {
        return Err(parse_error(path, format!("expected {rows} rows, found {}", arr.len())));
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for (i, row) in arr.iter().enumerate() {
        let row = row.as_array().ok_or_else(|| parse_error(path, format!("row {i} is not an array")))?;
        if row.len() != cols {
            return Err(parse_error(path, format!("row {i} has {} entries, expected {cols}", row.len())));
        }
        for (j, e) in row.iter().enumerate() {
            entries.push(read_entry(e, field, &format!("{path}[{i}][{j}]"))?);
        }
    }
    Matrix::from_scalars(field, rows, cols, entries)
}

/// Reads a degree-keyed family of matrices; `shape(n)` gives the expected shape
/// and degrees outside `lo..=file_top` are rejected.
fn read_graded(
    root: &Map<String, Value>,
    key: &str,
    field: Field,
    range: (usize, usize),
    maxdeg: usize,
    shape: impl Fn(usize) -> (usize, usize),
) -> Result<Vec<Matrix>> {
    let (lo, file_top) = range;
    let mut out: Vec<Matrix> = (0..=maxdeg)
        .map(|n| {
            let (r, c) = shape(n);
            Matrix::zeros(field, r, c)
        })
        .collect();
    let Some(v) = root.get(key) else {
        return Ok(out);
    };
    let obj = v.as_object().ok_or_else(|| parse_error(key, "expected an object keyed by degree"))?;
    for (k, m) in obj {
        let path = format!("{key}.{k}");
        let n: usize = k.parse().map_err(|_| parse_error(&path, "degree keys are non-negative integers"))?;
        if n < lo || n > file_top {
            return Err(parse_error(&path, format!("degree outside {lo}..={file_top}")));
        }
        if n > maxdeg {
            continue;
        }
        let (r, c) = shape(n);
        out[n] = read_matrix(m, field, r, c, &path)?;
    }
    Ok(out)
}

fn read_complex(root: &Map<String, Value>, field: Field, maxdeg: usize) -> Result<(ChainComplex, usize)> {
    let (dims, top) = read_dims(root, maxdeg)?;
    let diffs =
        read_graded(
            root,
            "diff",
            field,
            (1, top),
            maxdeg,
            |n| {
                if n == 0 {
                    (0, dims[0])
                } else {
                    (dims[n - 1], dims[n])
                }
            },
        )?;
    let complex = ChainComplex::new(field, dims, diffs.into_iter().skip(1).collect())?;
    Ok((complex, top))
}

fn parse_coalgebra(root: &Map<String, Value>, field: Field, maxdeg: usize) -> Result<DGCoalgebra> {
    let (carrier, top) = read_complex(root, field, maxdeg)?;
    let dims = carrier.dims().to_vec();
    let cc = tensor_dims(&dims, &dims, maxdeg);
    let comult = read_graded(root, "comult", field, (0, top), maxdeg, |n| (cc[n], dims[n]))?;
    let counit_row = root.get("counit").ok_or_else(|| parse_error("counit", "missing"))?;
    let counit = read_matrix(&Value::Array(vec![counit_row.clone()]), field, 1, dims[0], "counit")?;
    DGCoalgebra::new(carrier, comult, counit)
}

/// Parses one document, resolving references through `resolver`.
pub fn parse(text: &str, opts: &LoadOptions, resolver: &mut dyn Resolver) -> Result<Document> {
    let root = parse_json(text)?;
    let kind = str_field(&root, "kind")?;
    let comment = read_comment(&root)?;
    let field = read_field(&root, opts)?;
    let maxdeg = opts.maxdeg;
    let nested = LoadOptions { field: Some(field), maxdeg };
    let object = match kind {
        "complex" => {
            check_keys(&root, &["kind", "comment", "field", "dims", "diff"])?;
            Object::Complex(read_complex(&root, field, maxdeg)?.0)
        }
        "coalgebra" => {
            check_keys(&root, &["kind", "comment", "field", "dims", "diff", "comult", "counit"])?;
            Object::Coalgebra(parse_coalgebra(&root, field, maxdeg)?)
        }
        "comodule" => {
            check_keys(&root, &["kind", "comment", "field", "coalgebra", "dims", "diff", "coaction"])?;
            let reference = str_field(&root, "coalgebra")?.to_string();
            let c = resolver.coalgebra(&reference, &nested)?;
            let (carrier, top) = read_complex(&root, field, maxdeg)?;
            let xc = tensor_dims(carrier.dims(), c.dims(), maxdeg);
            let dims = carrier.dims().to_vec();
            let coaction = read_graded(&root, "coaction", field, (0, top), maxdeg, |n| (xc[n], dims[n]))?;
            Object::Comodule { coalgebra: reference, comodule: DGComodule::new(c, carrier, coaction)? }
        }
        "comodule_map" => {
            check_keys(&root, &["kind", "comment", "field", "source", "target", "map"])?;
            let (source, target) = (str_field(&root, "source")?.to_string(), str_field(&root, "target")?.to_string());
            let x = resolver.comodule(&source, &nested)?;
            let y = resolver.comodule(&target, &nested)?;
            if x.coalgebra() != y.coalgebra() {
                return Err(Error::CoalgebraMismatch);
            }
            let maps = read_graded(&root, "map", field, (0, usize::MAX), maxdeg, |n| {
                (y.carrier().dim(n), x.carrier().dim(n))
            })?;
            let map = ComoduleMap::unchecked(x, y, ChainMap::new(maps));
            Object::ComoduleMap { source, target, map }
        }
        "coalgebra_map" => {
            check_keys(&root, &["kind", "comment", "field", "source", "target", "map"])?;
            let (source, target) = (str_field(&root, "source")?.to_string(), str_field(&root, "target")?.to_string());
            let c = resolver.coalgebra(&source, &nested)?;
            let d = resolver.coalgebra(&target, &nested)?;
            let maps = read_graded(&root, "map", field, (0, usize::MAX), maxdeg, |n| {
                (d.carrier().dim(n), c.carrier().dim(n))
            })?;
            Object::CoalgebraMap { source, target, map: CoalgebraMap::unchecked(c, d, ChainMap::new(maps)) }
        }
        other => return Err(parse_error("kind", format!("unknown kind {other:?}"))),
    };
    Ok(Document { comment, object })
}

fn write_entry(out: &mut String, s: &Scalar) {
    match s {
        Scalar::Mod(v) => write!(out, "{v}").unwrap(),
        Scalar::Rational(q) => write!(out, "\"{}\"", rational_to_string(q)).unwrap(),
    }
}

fn write_matrix(out: &mut String, m: &Matrix) {
    out.push('[');
    for i in 0..m.rows() {
        if i > 0 {
            out.push_str(", ");
        }
        out.push('[');
        for j in 0..m.cols() {
            if j > 0 {
                out.push_str(", ");
            }
            write_entry(out, &m.get(i, j));
        }
        out.push(']');
    }
    out.push(']');
}

fn write_graded(out: &mut String, mats: &BTreeMap<usize, &Matrix>) {
    if mats.is_empty() {
        out.push_str("{}");
        return;
    }
    out.push_str("{\n");
    for (i, (n, m)) in mats.iter().enumerate() {
        write!(out, "    \"{n}\": ").unwrap();
        write_matrix(out, m);
        out.push_str(if i + 1 < mats.len() { ",\n" } else { "\n" });
    }
    out.push_str("  }");
}

fn nonzero<'a>(mats: impl IntoIterator<Item = (usize, &'a Matrix)>, top: usize) -> BTreeMap<usize, &'a Matrix> {
    mats.into_iter().filter(|(n, m)| *n <= top && !m.is_zero()).collect()
}

fn top_degree(dims: &[usize]) -> usize {
    dims.iter().rposition(|&d| d > 0).unwrap_or(0)
}

struct Writer {
    out: String,
    first: bool,
}

impl Writer {
    fn new() -> Self {
        Self { out: String::from("{\n"), first: true }
    }

    fn key(&mut self, k: &str) -> &mut String {
        if !self.first {
            self.out.push_str(",\n");
        }
        self.first = false;
        write!(self.out, "  \"{k}\": ").unwrap();
        &mut self.out
    }

    fn string(&mut self, k: &str, v: &str) {
        let quoted = Value::String(v.to_string()).to_string();
        self.key(k).push_str(&quoted);
    }

    fn comment(&mut self, lines: &[String]) {
        if lines.is_empty() {
            return;
        }
        let out = self.key("comment");
        out.push_str("[\n");
        for (i, l) in lines.iter().enumerate() {
            write!(out, "    {}", Value::String(l.clone())).unwrap();
            out.push_str(if i + 1 < lines.len() { ",\n" } else { "\n" });
        }
        out.push_str("  ]");
    }

    fn field(&mut self, f: Field) {
        let p = f.characteristic();
        write!(self.key("field"), "{p}").unwrap();
    }

    fn complex(&mut self, x: &ChainComplex) -> usize {
        let top = top_degree(x.dims());
        let dims: Vec<String> = x.dims()[..=top].iter().map(|d| d.to_string()).collect();
        write!(self.key("dims"), "[{}]", dims.join(", ")).unwrap();
        let diffs = nonzero((1..=x.maxdeg()).map(|n| (n, x.d_ref(n))), top);
        write_graded(self.key("diff"), &diffs);
        top
    }

    fn graded(&mut self, k: &str, mats: &BTreeMap<usize, &Matrix>) {
        write_graded(self.key(k), mats);
    }

    fn finish(mut self) -> String {
        self.out.push_str("\n}\n");
        self.out
    }
}

/// The canonical text of a document.
pub fn to_canonical(doc: &Document) -> String {
    let mut w = Writer::new();
    w.string("kind", doc.object.kind());
    w.comment(&doc.comment);
    w.field(doc.object.field());
    match &doc.object {
        Object::Complex(x) => {
            w.complex(x);
        }
        Object::Coalgebra(c) => {
            let top = w.complex(c.carrier());
            w.graded("comult", &nonzero((0..=c.maxdeg()).map(|n| (n, c.comult(n))), top));
            let counit = w.key("counit");
            let row = c.counit();
            counit.push('[');
            for j in 0..row.cols() {
                if j > 0 {
                    counit.push_str(", ");
                }
                write_entry(counit, &row.get(0, j));
            }
            counit.push(']');
        }
        Object::Comodule { coalgebra, comodule } => {
            w.string("coalgebra", coalgebra);
            let top = w.complex(comodule.carrier());
            w.graded("coaction", &nonzero((0..=comodule.maxdeg()).map(|n| (n, comodule.coaction(n))), top));
        }
        Object::ComoduleMap { source, target, map } => {
            w.string("source", source);
            w.string("target", target);
            w.graded("map", &nonzero(map.map().maps().iter().enumerate(), usize::MAX));
        }
        Object::CoalgebraMap { source, target, map } => {
            w.string("source", source);
            w.string("target", target);
            w.graded("map", &nonzero(map.map().maps().iter().enumerate(), usize::MAX));
        }
    }
    w.finish()
}

/// The canonical files of the shipped fixtures, as `(file name, text)` pairs.
///
/// Comodule files refer to their coalgebra by the relative path `fN.coalg`.
pub fn fixture_files(field: Field, maxdeg: usize) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for name in fixtures::COALGEBRA_NAMES {
        let c = fixtures::coalgebra_by_name(name, field, maxdeg).expect("known fixture name");
        let doc = Document::new(Object::Coalgebra(c)).with_comment(&[fixtures::coalgebra_description(name)]);
        out.push((format!("{name}.coalg"), to_canonical(&doc)));
    }
    let map = fixtures::f3_to_f2(field, maxdeg)?;
    let doc = Document::new(Object::CoalgebraMap { source: "f3.coalg".into(), target: "f2.coalg".into(), map })
        .with_comment(&["The quasi-isomorphism f3 -> f2: 1 -> 1, x -> x, a -> 0, b -> 0."]);
    out.push(("f3-f2.cmap".into(), to_canonical(&doc)));
    let map = fixtures::coaugmentation_f2(field, maxdeg)?;
    let doc = Document::new(Object::ComoduleMap { source: "triv-k.cm".into(), target: "regular.cm".into(), map })
        .with_comment(&["The coaugmentation k -> C of f2 as a map triv-k -> regular."]);
    out.push(("coaug.cmm".into(), to_canonical(&doc)));
    for f in fixtures::comodule_fixtures(field, maxdeg)? {
        let doc = Document::new(Object::Comodule { coalgebra: format!("{}.coalg", f.coalgebra), comodule: f.comodule })
            .with_comment(&[f.description, fixtures::coalgebra_description(f.coalgebra)]);
        out.push((format!("{}.cm", f.name), to_canonical(&doc)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(maxdeg: usize) -> LoadOptions {
        LoadOptions { field: None, maxdeg }
    }

    const SPHERE_COMPLEX: &str = r#"{
  "kind": "complex",
  "field": 3,
  "dims": [1, 2, 1],
  "diff": {
    "2": [[0], [2]]
  }
}
"#;

    #[test]
    fn complex_round_trip() {
        let doc = parse(SPHERE_COMPLEX, &opts(4), &mut BuiltinResolver).unwrap();
        let Object::Complex(x) = &doc.object else { panic!() };
        assert_eq!(x.dims(), &[1, 2, 1, 0, 0]);
        assert_eq!(x.homology_dims(), vec![1, 1, 0, 0, 0]);
        assert_eq!(to_canonical(&doc), SPHERE_COMPLEX);
    }

    #[test]
    fn entries_reduce_mod_p() {
        let text = SPHERE_COMPLEX.replace("[2]", "[-1]");
        let doc = parse(&text, &opts(2), &mut BuiltinResolver).unwrap();
        assert_eq!(to_canonical(&doc), SPHERE_COMPLEX);
    }

    #[test]
    fn rationals_are_strings() {
        let text = r#"{
  "kind": "complex",
  "field": 0,
  "dims": [1, 1],
  "diff": {
    "1": [["-3/4"]]
  }
}
"#;
        let doc = parse(text, &opts(1), &mut BuiltinResolver).unwrap();
        assert_eq!(to_canonical(&doc), text);
        let over_f5 = parse(text, &LoadOptions { field: Some(Field::gf(5)), maxdeg: 1 }, &mut BuiltinResolver).unwrap();
        // -3/4 = -3 * 4 = 3 mod 5
        let Object::Complex(x) = over_f5.object else { panic!() };
        assert_eq!(x.d_ref(1).get(0, 0), Scalar::Mod(3));
    }

    #[test]
    fn nonzero_square_is_reported_at_degree_two() {
        let text = r#"{"kind": "complex", "field": 2, "dims": [1, 1, 1], "diff": {"1": [[1]], "2": [[1]]}}"#;
        let doc = parse(text, &opts(2), &mut BuiltinResolver).unwrap();
        let Object::Complex(x) = doc.object else { panic!() };
        assert_eq!(x.validate().first_failure().unwrap().degree, Some(2));
    }

    #[test]
    fn diagnostics_name_the_field() {
        let err = parse(
            r#"{"kind": "complex", "field": 2, "dims": [1, 1], "diff": {"1": [[1, 0]]}}"#,
            &opts(1),
            &mut BuiltinResolver,
        )
        .unwrap_err();
        assert!(err.to_string().contains("diff.1"), "{err}");
        let err = parse("{\n  \"kind\": \"complex\",\n  oops\n}", &opts(1), &mut BuiltinResolver).unwrap_err();
        assert!(err.to_string().contains("line 3"), "{err}");
        let err = parse(r#"{"kind": "complex", "field": 4, "dims": [1]}"#, &opts(1), &mut BuiltinResolver).unwrap_err();
        assert!(err.to_string().contains("field"), "{err}");
        let err = parse(r#"{"kind": "complex", "field": 2, "dims": [1], "dif": {}}"#, &opts(1), &mut BuiltinResolver)
            .unwrap_err();
        assert!(err.to_string().contains("unknown key"), "{err}");
    }

    #[test]
    fn missing_coalgebra_is_a_resolution_error() {
        let text = r#"{"kind": "comodule", "field": 2, "coalgebra": "f9", "dims": [1], "diff": {}, "coaction": {}}"#;
        assert!(matches!(parse(text, &opts(2), &mut BuiltinResolver), Err(Error::Resolution(_))));
    }

    #[test]
    fn fixture_files_round_trip() {
        let files = fixture_files(Field::gf(2), 8).unwrap();
        assert_eq!(files.len(), 4 + 2 + 21);
        struct Named;
        impl Resolver for Named {
            fn coalgebra(&mut self, reference: &str, opts: &LoadOptions) -> Result<Arc<DGCoalgebra>> {
                BuiltinResolver.coalgebra(reference.trim_end_matches(".coalg"), opts)
            }
            fn comodule(&mut self, reference: &str, opts: &LoadOptions) -> Result<DGComodule> {
                BuiltinResolver.comodule(reference.trim_end_matches(".cm"), opts)
            }
        }
        for (name, text) in &files {
            let doc = parse(text, &opts(8), &mut Named).unwrap();
            assert_eq!(&to_canonical(&doc), text, "{name}");
        }
        let (_, f2) = files.iter().find(|(n, _)| n == "f2.coalg").unwrap();
        let doc = parse(f2, &opts(8), &mut Named).unwrap();
        let Object::Coalgebra(c) = doc.object else { panic!() };
        assert_eq!(c, fixtures::f2(Field::gf(2), 8));
        let flags = c.flags();
        assert!(flags.coassociative && flags.cocommutative && flags.simply_connected);
    }

    #[test]
    fn loading_at_a_smaller_window_truncates() {
        let files = fixture_files(Field::gf(2), 8).unwrap();
        let (_, f4) = files.iter().find(|(n, _)| n == "f4.coalg").unwrap();
        let doc = parse(f4, &opts(2), &mut BuiltinResolver).unwrap();
        let Object::Coalgebra(c) = doc.object else { panic!() };
        assert_eq!(c, fixtures::f4(Field::gf(2), 2));
    }
}

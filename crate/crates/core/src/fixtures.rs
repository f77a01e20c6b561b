//! The coalgebras and comodules used throughout the tests, benches and CLI.
//!
//! All structure constants are integers, so every fixture exists over any field.

use std::sync::Arc;

use crate::coalgebra::{primitive_comult, CoalgebraMap, DGCoalgebra};
use crate::comodule::{ComoduleMap, DGComodule};
use crate::complex::{ChainComplex, ChainMap, TensorBlocks};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};

fn pad(dims: &[usize], maxdeg: usize) -> Vec<usize> {
    (0..=maxdeg).map(|n| dims.get(n).copied().unwrap_or(0)).collect()
}

fn connected(field: Field, carrier: ChainComplex) -> DGCoalgebra {
    let comult = primitive_comult(field, carrier.dims());
    DGCoalgebra::new(carrier, comult, Matrix::identity(field, 1)).expect("fixture shapes are consistent")
}

/// The ground field as a coalgebra.
pub fn f1(field: Field, maxdeg: usize) -> DGCoalgebra {
    DGCoalgebra::trivial(field, maxdeg)
}

/// `H_*(S^2)`: unit in degree 0, one primitive class in degree 2.
pub fn f2(field: Field, maxdeg: usize) -> DGCoalgebra {
    connected(field, ChainComplex::from_dims(field, pad(&[1, 0, 1], maxdeg)))
}

/// `f2` plus a primitive acyclic summand `a` (degree 2), `b` (degree 3) with `db = a`.
///
/// Degree 2 basis is `[x, a]`.
pub fn f3(field: Field, maxdeg: usize) -> DGCoalgebra {
    let dims = pad(&[1, 0, 2, 1], maxdeg);
    let diffs = (1..=maxdeg)
        .map(|n| {
            if n == 3 {
                Matrix::from_rows(field, &[vec![0], vec![1]])
            } else {
                Matrix::zeros(field, dims[n - 1], dims[n])
            }
        })
        .collect();
    connected(field, ChainComplex::new(field, dims, diffs).expect("fixture shapes are consistent"))
}

/// `H_*(CP^2)` with `Δ(x4) = x4⊗1 + x2⊗x2 + 1⊗x4`.
pub fn f4(field: Field, maxdeg: usize) -> DGCoalgebra {
    let dims = pad(&[1, 0, 1, 0, 1], maxdeg);
    let carrier = ChainComplex::from_dims(field, dims.clone());
    let mut comult = primitive_comult(field, &dims);
    if maxdeg >= 4 {
        let blocks = TensorBlocks::new(&dims, &dims, 4);
        comult[4].add_i64(blocks.index(2, 0, 0), 0, 1);
    }
    DGCoalgebra::new(carrier, comult, Matrix::identity(field, 1)).expect("fixture shapes are consistent")
}

/// The quasi-isomorphism `f3 -> f2` sending `x ↦ x` and killing `a`, `b`.
pub fn f3_to_f2(field: Field, maxdeg: usize) -> Result<CoalgebraMap> {
    let c = Arc::new(f3(field, maxdeg));
    let d = Arc::new(f2(field, maxdeg));
    let maps = (0..=maxdeg)
        .map(|n| match n {
            0 => Matrix::identity(field, 1),
            2 => Matrix::from_rows(field, &[vec![1, 0]]),
            _ => Matrix::zeros(field, d.carrier().dim(n), c.carrier().dim(n)),
        })
        .collect();
    CoalgebraMap::new(c, d, ChainMap::new(maps))
}

/// Looks up a coalgebra fixture by name (`f1`..`f4`).
pub fn coalgebra_by_name(name: &str, field: Field, maxdeg: usize) -> Option<DGCoalgebra> {
    match name {
        "f1" => Some(f1(field, maxdeg)),
        "f2" => Some(f2(field, maxdeg)),
        "f3" => Some(f3(field, maxdeg)),
        "f4" => Some(f4(field, maxdeg)),
        _ => None,
    }
}

pub const COALGEBRA_NAMES: [&str; 4] = ["f1", "f2", "f3", "f4"];

/// One-line descriptions used as comment blocks in the shipped files.
pub fn coalgebra_description(name: &str) -> &'static str {
    match name {
        "f1" => "The ground field k as a coalgebra (homology of a point).",
        "f2" => "H_*(S^2): unit 1 in degree 0 and a primitive class x in degree 2.",
        "f3" => "f2 plus a primitive acyclic summand: a in degree 2, b in degree 3, db = a. Degree 2 basis is [x, a].",
        "f4" => "H_*(CP^2): classes 1, x2, x4 with x2 primitive and D(x4) = x4(x)1 + x2(x)x2 + 1(x)x4.",
        _ => "",
    }
}

#[derive(Clone, Debug)]
pub struct ComoduleFixture {
    pub name: String,
    pub coalgebra: &'static str,
    pub description: &'static str,
    pub comodule: DGComodule,
}

fn fixture_name(stem: &str, coalgebra: &str) -> String {
    if coalgebra == "f2" {
        stem.to_string()
    } else {
        format!("{stem}-{coalgebra}")
    }
}

/// The comodule fixtures over one coalgebra: trivial `S^0`, the regular
/// comodule, cofree on `S^1` and `D^1`, trivial `D^2`, and over `f4` the
/// subcomodule `C_{<=2}`.
///
/// Names carry a `-fN` suffix except over `f2`.
pub fn comodule_fixtures_over(coalgebra: &'static str, field: Field, maxdeg: usize) -> Result<Vec<ComoduleFixture>> {
    let c = Arc::new(
        coalgebra_by_name(coalgebra, field, maxdeg)
            .ok_or_else(|| Error::precondition(format!("unknown coalgebra {coalgebra}")))?,
    );
    let entry = |stem: &str, description: &'static str, comodule: DGComodule| ComoduleFixture {
        name: fixture_name(stem, coalgebra),
        coalgebra,
        description,
        comodule,
    };
    let s0 = ChainComplex::sphere(field, 0, 1, maxdeg);
    let s1 = ChainComplex::sphere(field, 1, 1, maxdeg);
    let d1 = ChainComplex::disk(field, 1, 1, maxdeg)?;
    let d2 = ChainComplex::disk(field, 2, 1, maxdeg)?;
    let mut out = vec![
        entry("triv-k", "The trivial comodule k = S^0 with coaction x -> x(x)1.", DGComodule::trivial(&s0, c.clone())?),
        entry("regular", "The coalgebra over itself via its comultiplication.", DGComodule::regular(c.clone())),
        entry("cofree-s1", "The cofree comodule S^1(x)C.", DGComodule::cofree(&s1, c.clone())?),
        entry("cofree-d1", "The cofree comodule D^1(x)C on the 1-disk.", DGComodule::cofree(&d1, c.clone())?),
        entry("triv-d2", "The 2-disk D^2 with trivial coaction.", DGComodule::trivial(&d2, c.clone())?),
    ];
    if coalgebra == "f4" {
        let regular = DGComodule::regular(c.clone());
        let basis: Vec<Matrix> = (0..=maxdeg)
            .map(|n| {
                if n <= 2 {
                    Matrix::identity(field, c.carrier().dim(n))
                } else {
                    Matrix::zeros(field, c.carrier().dim(n), 0)
                }
            })
            .collect();
        let (sub, _) = regular.subcomodule(&basis)?;
        out.push(entry("trunc2", "The subcomodule C_{<=2} = span(1, x2) of the regular comodule.", sub));
    }
    Ok(out)
}

/// Every comodule fixture over every coalgebra fixture.
pub fn comodule_fixtures(field: Field, maxdeg: usize) -> Result<Vec<ComoduleFixture>> {
    let mut out = Vec::new();
    for name in COALGEBRA_NAMES {
        out.extend(comodule_fixtures_over(name, field, maxdeg)?);
    }
    Ok(out)
}

pub fn comodule_by_name(name: &str, field: Field, maxdeg: usize) -> Result<Option<ComoduleFixture>> {
    Ok(comodule_fixtures(field, maxdeg)?.into_iter().find(|f| f.name == name))
}

/// The coaugmentation `k -> C` of `f2` as a map from `triv-k` to `regular`.
pub fn coaugmentation_f2(field: Field, maxdeg: usize) -> Result<ComoduleMap> {
    let c = Arc::new(f2(field, maxdeg));
    let k = DGComodule::trivial(&ChainComplex::sphere(field, 0, 1, maxdeg), c.clone())?;
    let regular = DGComodule::regular(c.clone());
    let maps = (0..=maxdeg)
        .map(|n| if n == 0 { Matrix::identity(field, 1) } else { Matrix::zeros(field, c.carrier().dim(n), 0) })
        .collect();
    ComoduleMap::new(k, regular, ChainMap::new(maps))
}

//! Seeded random complexes, comodules and comodule maps for property tests,
//! benches and the acceptance suite.

use std::sync::Arc;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coalgebra::DGCoalgebra;
use crate::comodule::{ComoduleMap, DGComodule};
use crate::complex::{ChainComplex, ChainMap};
use crate::error::Result;
use crate::linalg::{Field, Matrix};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A direct sum of spheres and disks with at most `max_dim` basis vectors per
/// degree, conjugated by random invertible matrices.
pub fn random_complex<R: Rng + ?Sized>(field: Field, maxdeg: usize, max_dim: usize, rng: &mut R) -> ChainComplex {
    // w[n] = rank of d_n, v[n] = homology
    let mut w = vec![0usize; maxdeg + 2];
    let mut v = vec![0usize; maxdeg + 1];
    for n in 0..=maxdeg {
        let used = w[n];
        let room = max_dim.saturating_sub(used);
        if n < maxdeg {
            w[n + 1] = rng.gen_range(0..=room);
        }
        v[n] = rng.gen_range(0..=room - w[n + 1]);
    }
    let dims: Vec<usize> = (0..=maxdeg).map(|n| v[n] + w[n + 1] + w[n]).collect();
    let model_diffs: Vec<Matrix> = (1..=maxdeg)
        .map(|n| {
            let mut d = Matrix::zeros(field, dims[n - 1], dims[n]);
            d.set_block(v[n - 1], v[n] + w[n + 1], &Matrix::identity(field, w[n]));
            d
        })
        .collect();
    let change: Vec<Matrix> = dims.iter().map(|&d| Matrix::random_invertible(field, d, rng)).collect();
    let diffs = (1..=maxdeg)
        .map(|n| {
            let inv = change[n].inverse().expect("invertible by construction");
            change[n - 1].mul(&model_diffs[n - 1]).mul(&inv)
        })
        .collect();
    ChainComplex::new(field, dims, diffs).expect("random complex shapes are consistent")
}

/// A cofree, trivial, or mixed comodule on small random complexes.
pub fn random_comodule<R: Rng + ?Sized>(c: &Arc<DGCoalgebra>, max_dim: usize, rng: &mut R) -> Result<DGComodule> {
    let f = c.field();
    let top = c.maxdeg();
    // keep the cofree factor low so that M⊗C stays small
    let low = top.min(3);
    let small = |rng: &mut R| random_complex(f, low, max_dim, rng).with_maxdeg(top);
    match rng.gen_range(0..4) {
        0 => DGComodule::cofree(&small(rng), c.clone()),
        1 => DGComodule::trivial(&random_complex(f, top, max_dim, rng), c.clone()),
        2 => {
            let a = DGComodule::cofree(&small(rng), c.clone())?;
            let b = DGComodule::trivial(&small(rng), c.clone())?;
            Ok(a.direct_sum(&b)?.0)
        }
        _ => {
            // a quotient of a cofree comodule by the image of a random map
            let a = DGComodule::cofree(&small(rng), c.clone())?;
            let b = DGComodule::trivial(&small(rng), c.clone())?;
            let g = random_comodule_map(&b, &a, rng)?;
            Ok(g.cokernel()?.0)
        }
    }
}

/// A random combination of a basis of the comodule maps `X -> Y`.
pub fn random_comodule_map<R: Rng + ?Sized>(x: &DGComodule, y: &DGComodule, rng: &mut R) -> Result<ComoduleMap> {
    let basis = x.comodule_maps(y)?;
    let f = x.field();
    let mut out = ComoduleMap::zero(x, y);
    for b in &basis {
        let k = if f.is_rational() { rng.gen_range(-3..=3) } else { rng.gen_range(0..f.characteristic() as i64) };
        let scaled = b.map().maps().iter().map(|m| m.scale_i64(k)).collect();
        out = ComoduleMap::unchecked(x.clone(), y.clone(), out.map().add(&ChainMap::new(scaled)));
    }
    Ok(out)
}

/// An epimorphism: either a projection `X ⊕ Y -> Y` or a quotient map.
pub fn random_epimorphism<R: Rng + ?Sized>(c: &Arc<DGCoalgebra>, max_dim: usize, rng: &mut R) -> Result<ComoduleMap> {
    let x = random_comodule(c, max_dim, rng)?;
    if rng.gen_bool(0.5) {
        let y = random_comodule(c, max_dim, rng)?;
        let (sum, _, _) = x.direct_sum(&y)?;
        let f = c.field();
        let maps = (0..=c.maxdeg())
            .map(|n| {
                let (a, b) = (x.carrier().dim(n), y.carrier().dim(n));
                Matrix::hstack(f, b, &[&Matrix::zeros(f, b, a), &Matrix::identity(f, b)])
            })
            .collect();
        Ok(ComoduleMap::unchecked(sum, y, ChainMap::new(maps)))
    } else {
        let z = random_comodule(c, max_dim, rng)?;
        let g = random_comodule_map(&z, &x, rng)?;
        Ok(g.cokernel()?.1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn generated_objects_are_valid() {
        let mut r = rng(7);
        for field in [Field::gf(2), Field::gf(3), Field::rationals()] {
            let c = Arc::new(fixtures::f4(field, 5));
            for _ in 0..4 {
                let x = random_comodule(&c, 2, &mut r).unwrap();
                assert!(x.is_valid());
                let y = random_comodule(&c, 2, &mut r).unwrap();
                let f = random_comodule_map(&x, &y, &mut r).unwrap();
                assert!(f.validate().passed());
                let e = random_epimorphism(&c, 2, &mut r).unwrap();
                assert!(e.validate().passed());
                assert!(e.is_surjective_between(0, 5));
            }
        }
    }

    #[test]
    fn seeds_are_reproducible() {
        let c = Arc::new(fixtures::f2(Field::gf(3), 4));
        let a = random_comodule(&c, 2, &mut rng(11)).unwrap();
        let b = random_comodule(&c, 2, &mut rng(11)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn comodule_maps_of_the_regular_comodule() {
        // maps X -> C correspond to degree-zero chain maps X -> k, and C_0 = k
        let c = Arc::new(fixtures::f2(Field::gf(2), 4));
        let x = DGComodule::regular(c);
        assert_eq!(x.comodule_maps(&x).unwrap().len(), 1);
    }
}

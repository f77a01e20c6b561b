//! Differential graded coalgebras: axiom checks, coaugmentation, unit coideal
//! and the homology coalgebra.

use std::sync::Arc;

use serde::Serialize;

use crate::complex::{associator, twist, ChainComplex, ChainMap, TensorBlocks};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};
use crate::report::Report;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CoalgebraFlags {
    pub chain_map: bool,
    pub coassociative: bool,
    pub counital: bool,
    pub cocommutative: bool,
    pub simply_connected: bool,
    pub coaugmented: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DGCoalgebra {
    carrier: ChainComplex,
    comult: Vec<Matrix>,
    counit: Matrix,
    coaugmentation: Option<Matrix>,
    flags: CoalgebraFlags,
}

impl DGCoalgebra {
    /// `comult[n] : C_n -> (C⊗C)_n`, `counit : C_0 -> k` as a `1 x dim C_0` row.
    ///
    /// Only shapes are enforced here; the axioms are recorded in [`DGCoalgebra::flags`].
    pub fn new(carrier: ChainComplex, comult: Vec<Matrix>, counit: Matrix) -> Result<Self> {
        let field = carrier.field();
        let cc = crate::complex::tensor_dims(carrier.dims(), carrier.dims(), carrier.maxdeg());
        if comult.len() != carrier.dims().len() {
            return Err(Error::Shape(format!(
                "comultiplication needs {} degrees, found {}",
                carrier.dims().len(),
                comult.len()
            )));
        }
        for (n, m) in comult.iter().enumerate() {
            if m.field() != field {
                return Err(Error::FieldMismatch);
            }
            if m.shape() != (cc[n], carrier.dim(n)) {
                return Err(Error::Shape(format!(
                    "comultiplication in degree {n} should be {}x{}, found {}x{}",
                    cc[n],
                    carrier.dim(n),
                    m.rows(),
                    m.cols()
                )));
            }
        }
        if counit.shape() != (1, carrier.dim(0)) {
            return Err(Error::Shape(format!("counit should be 1x{}", carrier.dim(0))));
        }
        let coaugmentation = if carrier.dim(0) == 1 && !counit.is_zero() { counit.inverse() } else { None };
        let mut c = Self { carrier, comult, counit, coaugmentation, flags: CoalgebraFlags::default() };
        c.flags = c.compute_flags().0;
        Ok(c)
    }

    pub fn field(&self) -> Field {
        self.carrier.field()
    }

    pub fn maxdeg(&self) -> usize {
        self.carrier.maxdeg()
    }

    pub fn carrier(&self) -> &ChainComplex {
        &self.carrier
    }

    pub fn dims(&self) -> &[usize] {
        self.carrier.dims()
    }

    pub fn comult(&self, n: usize) -> &Matrix {
        &self.comult[n]
    }

    pub fn comult_map(&self) -> ChainMap {
        ChainMap::new(self.comult.clone())
    }

    pub fn counit(&self) -> &Matrix {
        &self.counit
    }

    /// The counit as a graded map `C -> k`.
    pub fn counit_map(&self) -> ChainMap {
        let f = self.field();
        ChainMap::new(
            (0..=self.maxdeg())
                .map(|n| if n == 0 { self.counit.clone() } else { Matrix::zeros(f, 0, self.carrier.dim(n)) })
                .collect(),
        )
    }

    /// `η : k -> C_0` as a `dim C_0 x 1` column, when `C_0` is one-dimensional.
    pub fn coaugmentation(&self) -> Option<&Matrix> {
        self.coaugmentation.as_ref()
    }

    /// The coaugmentation as a graded map `k -> C`.
    pub fn coaugmentation_map(&self) -> Result<ChainMap> {
        let eta = self.require_coaugmented()?;
        let f = self.field();
        Ok(ChainMap::new(
            (0..=self.maxdeg())
                .map(|n| if n == 0 { eta.clone() } else { Matrix::zeros(f, self.carrier.dim(n), 0) })
                .collect(),
        ))
    }

    pub fn flags(&self) -> CoalgebraFlags {
        self.flags
    }

    pub fn is_valid(&self) -> bool {
        self.flags.chain_map && self.flags.coassociative && self.flags.counital && self.carrier.validate().passed()
    }

    pub(crate) fn require_coaugmented(&self) -> Result<&Matrix> {
        self.coaugmentation.as_ref().ok_or_else(|| Error::precondition("coalgebra is not coaugmented"))
    }

    pub(crate) fn require_simply_connected(&self) -> Result<()> {
        if !self.is_valid() {
            return Err(Error::precondition("coalgebra fails its axioms"));
        }
        if !self.flags.simply_connected {
            return Err(Error::precondition("coalgebra is not simply connected"));
        }
        Ok(())
    }

    /// The unit `k` as a coalgebra.
    pub fn trivial(field: Field, maxdeg: usize) -> Self {
        let carrier = ChainComplex::sphere(field, 0, 1, maxdeg);
        let comult = primitive_comult(field, carrier.dims());
        Self::new(carrier, comult, Matrix::identity(field, 1)).expect("shapes are consistent")
    }

    pub fn validate(&self) -> Report {
        self.compute_flags().1
    }

    fn compute_flags(&self) -> (CoalgebraFlags, Report) {
        let mut r = Report::new();
        let f = self.field();
        let c = &self.carrier;
        let top = c.maxdeg();
        let dims = c.dims();
        r.absorb("carrier", c.validate());

        let mut flags = CoalgebraFlags::default();
        let cc = c.tensor(c).expect("same field");
        flags.chain_map = match ChainMap::new(self.comult.clone()).validate(c, &cc).first_failure() {
            None => true,
            Some(chk) => {
                r.fail("Δ is a chain map", chk.degree, chk.detail.clone());
                false
            }
        };
        if flags.chain_map {
            r.pass("Δ is a chain map");
        }

        let delta = ChainMap::new(self.comult.clone());
        let cc_dims = cc.dims().to_vec();
        let left = associator(dims, dims, dims, f, top)
            .compose(&crate::complex::tensor_with_identity_right(&delta, dims, &cc_dims, dims, f, top))
            .compose(&delta);
        let right = crate::complex::tensor_with_identity_left(dims, &delta, dims, &cc_dims, f, top).compose(&delta);
        flags.coassociative = first_difference(&left, &right).map_or(true, |n| {
            r.fail("coassociative", Some(n), "(Δ⊗id)Δ ≠ (id⊗Δ)Δ");
            false
        });
        if flags.coassociative {
            r.pass("coassociative");
        }

        let eps = self.counit_map();
        let k = [1usize];
        let right_unit = crate::complex::tensor_with_identity_left(dims, &eps, dims, &k, f, top).compose(&delta);
        let left_unit = crate::complex::tensor_with_identity_right(&eps, dims, &k, dims, f, top).compose(&delta);
        let eps_chain = top == 0 || self.counit.mul(c.d_ref(1)).is_zero();
        let mut counital = eps_chain;
        if !eps_chain {
            r.fail("counit is a chain map", Some(1), "ε d_1 ≠ 0");
        }
        for n in 0..=top {
            if !right_unit.at(n).is_identity() || !left_unit.at(n).is_identity() {
                r.fail("counital", Some(n), "(id⊗ε)Δ or (ε⊗id)Δ is not the identity");
                counital = false;
                break;
            }
        }
        if counital {
            r.pass("counital");
        }
        flags.counital = counital;

        let tw = twist(dims, dims, f, top);
        flags.cocommutative = first_difference(&tw.compose(&delta), &delta).is_none();
        r.record("cocommutative", None, flags.cocommutative, "");

        flags.simply_connected = c.dim(0) == 1 && c.dim(1) == 0 && !self.counit.is_zero();
        r.record("simply connected", None, flags.simply_connected, "");
        flags.coaugmented = self.coaugmentation.is_some();
        r.record("coaugmented", None, flags.coaugmented, "");
        (flags, r)
    }

    /// The kernel of the counit with its splitting and reduced comultiplication.
    pub fn unit_coideal(&self) -> Result<UnitCoideal> {
        let eta = self.require_coaugmented()?.clone();
        let f = self.field();
        let top = self.maxdeg();
        let mut incl = Vec::with_capacity(top + 1);
        let mut proj = Vec::with_capacity(top + 1);
        for n in 0..=top {
            let d = self.carrier.dim(n);
            if n == 0 {
                let i0 = self.counit.kernel_basis();
                let complement = Matrix::identity(f, d).sub(&eta.mul(&self.counit));
                let p0 = i0.solve_matrix(&complement).ok_or_else(|| Error::invariant("id - ηε leaves ker ε"))?;
                incl.push(i0);
                proj.push(p0);
            } else {
                incl.push(Matrix::identity(f, d));
                proj.push(Matrix::identity(f, d));
            }
        }
        let complex = self.carrier.subcomplex(&incl)?;
        let inclusion = ChainMap::new(incl);
        let projection = ChainMap::new(proj);
        let bar = complex.dims().to_vec();
        let pp = projection.tensor(&projection, self.dims(), &bar, self.dims(), &bar, f, top);
        let reduced = (0..=top).map(|n| pp.at(n).mul(&self.comult[n]).mul(inclusion.at(n))).collect();
        Ok(UnitCoideal { complex, inclusion, projection, reduced_comult: reduced, eta })
    }

    /// Homology of `C` with the induced coalgebra structure and zero differential.
    ///
    /// The top degree is computed for the truncated complex, so it is exact
    /// only when `C` vanishes there or above.
    pub fn homology_coalgebra(&self) -> Result<HomologyCoalgebra> {
        self.require_simply_connected()?;
        let f = self.field();
        let top = self.maxdeg();
        let c = &self.carrier;
        let hs: Vec<_> = (0..=top).map(|n| c.homology(n)).collect();
        let hdims: Vec<usize> = hs.iter().map(|h| h.dim).collect();
        let reps = ChainMap::new(hs.iter().map(|h| h.representatives.clone()).collect());
        let kunneth = reps.tensor(&reps, &hdims, c.dims(), &hdims, c.dims(), f, top);
        let ext = c.with_maxdeg(top + 1);
        let cc = ext.tensor(&ext)?;
        let mut comult = Vec::with_capacity(top + 1);
        for n in 0..=top {
            let b = cc.boundaries(n);
            let basis = Matrix::hstack(f, b.rows(), &[kunneth.at(n), &b]);
            let image = self.comult[n].mul(&hs[n].representatives);
            let coeffs = basis
                .solve_matrix(&image)
                .ok_or_else(|| Error::invariant(format!("Künneth decomposition failed in degree {n}")))?;
            comult.push(coeffs.block(0, 0, kunneth.at(n).cols(), hdims[n]));
        }
        let counit = self.counit.mul(&hs[0].representatives);
        let coalgebra = DGCoalgebra::new(ChainComplex::from_dims(f, hdims), comult, counit)?;
        Ok(HomologyCoalgebra { coalgebra, representatives: reps })
    }
}

fn first_difference(a: &ChainMap, b: &ChainMap) -> Option<usize> {
    a.maps().iter().zip(b.maps()).position(|(x, y)| x != y)
}

/// `Δ(c) = 1⊗c + c⊗1` on a connected carrier (index 0 of degree 0 is the unit).
pub fn primitive_comult(field: Field, dims: &[usize]) -> Vec<Matrix> {
    let top = dims.len() - 1;
    (0..=top)
        .map(|n| {
            let blocks = TensorBlocks::new(dims, dims, n);
            let mut m = Matrix::zeros(field, blocks.total, dims[n]);
            for c in 0..dims[n] {
                if n == 0 {
                    m.set_i64(blocks.index(0, 0, c), c, 1);
                } else {
                    m.add_i64(blocks.index(0, 0, c), c, 1);
                    m.add_i64(blocks.index(n, c, 0), c, 1);
                }
            }
            m
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct UnitCoideal {
    pub complex: ChainComplex,
    /// `C̄ -> C`.
    pub inclusion: ChainMap,
    /// `C -> C̄`, the projection `id - ηε` read in the coideal basis.
    pub projection: ChainMap,
    /// `Δ̄_n : C̄_n -> (C̄⊗C̄)_n`.
    pub reduced_comult: Vec<Matrix>,
    pub eta: Matrix,
}

#[derive(Clone, Debug)]
pub struct HomologyCoalgebra {
    pub coalgebra: DGCoalgebra,
    /// Cycle representatives, a chain map `H_*(C) -> C`.
    pub representatives: ChainMap,
}

/// A morphism of dg-coalgebras.
#[derive(Clone, Debug)]
pub struct CoalgebraMap {
    source: Arc<DGCoalgebra>,
    target: Arc<DGCoalgebra>,
    map: ChainMap,
}

impl CoalgebraMap {
    pub fn new(source: Arc<DGCoalgebra>, target: Arc<DGCoalgebra>, map: ChainMap) -> Result<Self> {
        let m = Self { source, target, map };
        if let Some(c) = m.validate().first_failure() {
            return Err(Error::axiom(format!("not a coalgebra map: {} {:?}", c.name, c.degree)));
        }
        Ok(m)
    }

    pub(crate) fn unchecked(source: Arc<DGCoalgebra>, target: Arc<DGCoalgebra>, map: ChainMap) -> Self {
        Self { source, target, map }
    }

    pub fn identity(c: Arc<DGCoalgebra>) -> Self {
        let map = ChainMap::identity(c.carrier());
        Self { source: c.clone(), target: c, map }
    }

    /// The counit `C -> k` as a coalgebra map.
    pub fn counit(c: Arc<DGCoalgebra>) -> Self {
        let k = Arc::new(DGCoalgebra::trivial(c.field(), c.maxdeg()));
        let map = c.counit_map();
        Self { source: c, target: k, map }
    }

    pub fn source(&self) -> &Arc<DGCoalgebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<DGCoalgebra> {
        &self.target
    }

    pub fn map(&self) -> &ChainMap {
        &self.map
    }

    pub fn validate(&self) -> Report {
        let mut r = Report::new();
        let (c, d) = (&*self.source, &*self.target);
        if c.field() != d.field() || c.maxdeg() != d.maxdeg() {
            r.fail("compatible coalgebras", None, "field or maxdeg differ");
            return r;
        }
        r.absorb("chain map", self.map.validate(c.carrier(), d.carrier()));
        if !r.passed() {
            return r;
        }
        let f = c.field();
        let top = c.maxdeg();
        let ff = self.map.tensor(&self.map, c.dims(), d.dims(), c.dims(), d.dims(), f, top);
        for n in 0..=top {
            if d.comult(n).mul(self.map.at(n)) != ff.at(n).mul(c.comult(n)) {
                r.fail("preserves Δ", Some(n), "Δ f ≠ (f⊗f) Δ");
                return r;
            }
        }
        r.pass("preserves Δ");
        if d.counit().mul(self.map.at(0)) != *c.counit() {
            r.fail("preserves ε", Some(0), "ε f ≠ ε");
        } else {
            r.pass("preserves ε");
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fixture_flags() {
        for field in [Field::gf(2), Field::gf(3), Field::rationals()] {
            let f1 = fixtures::f1(field, 6);
            assert!(f1.validate().passed(), "{}", f1.validate());
            for c in [fixtures::f2(field, 6), fixtures::f3(field, 6), fixtures::f4(field, 6)] {
                let fl = c.flags();
                assert!(fl.chain_map && fl.coassociative && fl.counital, "{}", c.validate());
                assert!(fl.cocommutative && fl.simply_connected && fl.coaugmented);
            }
        }
    }

    #[test]
    fn broken_coassociativity_is_reported() {
        // scaling Δ_2 breaks counitality
        let f = Field::gf(3);
        let c = fixtures::f4(f, 4);
        let mut comult: Vec<Matrix> = (0..=4).map(|n| c.comult(n).clone()).collect();
        comult[2] = comult[2].scale_i64(2);
        let bad = DGCoalgebra::new(c.carrier().clone(), comult, c.counit().clone()).unwrap();
        assert!(!bad.flags().counital);
        assert!(!bad.validate().passed());
    }

    #[test]
    fn unit_coideal_examples() {
        let f = Field::gf(2);
        let u = fixtures::f1(f, 4).unit_coideal().unwrap();
        assert!(u.complex.is_zero());

        let u = fixtures::f2(f, 4).unit_coideal().unwrap();
        assert_eq!(u.complex.dims(), &[0, 0, 1, 0, 0]);
        assert!(u.reduced_comult.iter().all(Matrix::is_zero));

        let u = fixtures::f4(f, 4).unit_coideal().unwrap();
        assert_eq!(u.complex.dims(), &[0, 0, 1, 0, 1]);
        // Δ̄(x4) = x2⊗x2
        assert_eq!(u.reduced_comult[4], Matrix::from_rows(f, &[vec![1]]));
        assert!(u.reduced_comult[2].is_zero());
    }

    #[test]
    fn unit_coideal_splits_the_carrier() {
        let f = Field::rationals();
        let c = fixtures::f3(f, 5);
        let u = c.unit_coideal().unwrap();
        let eta = c.coaugmentation_map().unwrap();
        for n in 0..=5 {
            let both = Matrix::hstack(f, c.carrier().dim(n), &[eta.at(n), u.inclusion.at(n)]);
            assert_eq!(both.rank(), c.carrier().dim(n));
            assert_eq!(both.cols(), c.carrier().dim(n));
        }
        assert_eq!(u.complex.dim(0) + u.complex.dim(1), 0);
    }

    #[test]
    fn homology_coalgebra_examples() {
        let f = Field::gf(3);
        let f2 = fixtures::f2(f, 5);
        let h = f2.homology_coalgebra().unwrap().coalgebra;
        assert_eq!(h, f2);

        let f3 = fixtures::f3(f, 5);
        let h = f3.homology_coalgebra().unwrap().coalgebra;
        assert_eq!(h.dims(), f2.dims());
        assert!(h.validate().passed());
        assert!(h.flags().simply_connected);

        let f1 = fixtures::f1(f, 5);
        assert_eq!(f1.homology_coalgebra().unwrap().coalgebra, f1);
    }

    #[test]
    fn f3_to_f2_is_a_coalgebra_map() {
        let f = Field::gf(2);
        let m = fixtures::f3_to_f2(f, 5).unwrap();
        assert!(m.validate().passed());
        let c = Arc::new(fixtures::f4(f, 5));
        assert!(CoalgebraMap::counit(c.clone()).validate().passed());
        assert!(CoalgebraMap::identity(c).validate().passed());
    }
}

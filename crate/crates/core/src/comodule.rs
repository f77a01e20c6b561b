//! Right dg-comodules over a fixed coalgebra and the maps between them.

use std::sync::Arc;

use crate::coalgebra::DGCoalgebra;
use crate::complex::{
    associator, tensor_dims, tensor_with_identity_left, tensor_with_identity_right, ChainComplex, ChainMap,
    TensorBlocks,
};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};
use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DGComodule {
    coalgebra: Arc<DGCoalgebra>,
    carrier: ChainComplex,
    /// `coaction[n] : X_n -> (X⊗C)_n`.
    coaction: Vec<Matrix>,
}

impl DGComodule {
    /// Checks shapes only; see [`DGComodule::validate`] for the axioms.
    pub fn new(coalgebra: Arc<DGCoalgebra>, carrier: ChainComplex, coaction: Vec<Matrix>) -> Result<Self> {
        if carrier.field() != coalgebra.field() {
            return Err(Error::FieldMismatch);
        }
        if carrier.maxdeg() != coalgebra.maxdeg() {
            return Err(Error::MaxdegMismatch(carrier.maxdeg(), coalgebra.maxdeg()));
        }
        let xc = tensor_dims(carrier.dims(), coalgebra.dims(), carrier.maxdeg());
        if coaction.len() != xc.len() {
            return Err(Error::Shape(format!("coaction needs {} degrees, found {}", xc.len(), coaction.len())));
        }
        for (n, m) in coaction.iter().enumerate() {
            if m.shape() != (xc[n], carrier.dim(n)) {
                return Err(Error::Shape(format!(
                    "coaction in degree {n} should be {}x{}, found {}x{}",
                    xc[n],
                    carrier.dim(n),
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Self { coalgebra, carrier, coaction })
    }

    pub fn coalgebra(&self) -> &Arc<DGCoalgebra> {
        &self.coalgebra
    }

    pub fn carrier(&self) -> &ChainComplex {
        &self.carrier
    }

    pub fn field(&self) -> Field {
        self.carrier.field()
    }

    pub fn maxdeg(&self) -> usize {
        self.carrier.maxdeg()
    }

    pub fn dims(&self) -> &[usize] {
        self.carrier.dims()
    }

    pub fn coaction(&self, n: usize) -> &Matrix {
        &self.coaction[n]
    }

    pub fn coaction_map(&self) -> ChainMap {
        ChainMap::new(self.coaction.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.carrier.is_zero()
    }

    pub fn zero(c: Arc<DGCoalgebra>) -> Self {
        let carrier = ChainComplex::zero(c.field(), c.maxdeg());
        Self::trivial(&carrier, c).expect("zero complex has the right window")
    }

    /// `C` over itself via `Δ`.
    pub fn regular(c: Arc<DGCoalgebra>) -> Self {
        let coaction = (0..=c.maxdeg()).map(|n| c.comult(n).clone()).collect();
        Self { carrier: c.carrier().clone(), coalgebra: c, coaction }
    }

    /// The cofree comodule `M ⊗ C` with coaction `id_M ⊗ Δ` (reassociated).
    pub fn cofree(m: &ChainComplex, c: Arc<DGCoalgebra>) -> Result<Self> {
        if m.field() != c.field() {
            return Err(Error::FieldMismatch);
        }
        if m.maxdeg() != c.maxdeg() {
            return Err(Error::MaxdegMismatch(m.maxdeg(), c.maxdeg()));
        }
        let f = c.field();
        let top = c.maxdeg();
        let carrier = m.tensor(c.carrier())?;
        let cc = tensor_dims(c.dims(), c.dims(), top);
        let id_delta = tensor_with_identity_left(m.dims(), &c.comult_map(), c.dims(), &cc, f, top);
        let assoc = associator(m.dims(), c.dims(), c.dims(), f, top);
        let coaction = (0..=top).map(|n| assoc.at(n).transpose().mul(id_delta.at(n))).collect();
        Ok(Self { coalgebra: c, carrier, coaction })
    }

    /// `M` with coaction `x ↦ x ⊗ 1`.
    pub fn trivial(m: &ChainComplex, c: Arc<DGCoalgebra>) -> Result<Self> {
        if m.field() != c.field() {
            return Err(Error::FieldMismatch);
        }
        if m.maxdeg() != c.maxdeg() {
            return Err(Error::MaxdegMismatch(m.maxdeg(), c.maxdeg()));
        }
        let eta = c.coaugmentation_map()?;
        let id_eta = tensor_with_identity_left(m.dims(), &eta, &[1], c.dims(), c.field(), c.maxdeg());
        Ok(Self { coalgebra: c, carrier: m.clone(), coaction: id_eta.into_maps() })
    }

    pub fn validate(&self) -> Report {
        let mut r = Report::new();
        let c = &*self.coalgebra;
        let f = self.field();
        let top = self.maxdeg();
        let xd = self.dims();
        r.absorb("carrier", self.carrier.validate());
        if !r.passed() {
            return r;
        }
        let xc = self.carrier.tensor(c.carrier()).expect("same field");
        let rho = self.coaction_map();
        match rho.validate(&self.carrier, &xc).first_failure() {
            Some(chk) => r.fail("ρ is a chain map", chk.degree, chk.detail.clone()),
            None => r.pass("ρ is a chain map"),
        }
        let xc_dims = xc.dims().to_vec();
        let cc = tensor_dims(c.dims(), c.dims(), top);
        let lhs = associator(xd, c.dims(), c.dims(), f, top)
            .compose(&tensor_with_identity_right(&rho, xd, &xc_dims, c.dims(), f, top))
            .compose(&rho);
        let rhs = tensor_with_identity_left(xd, &c.comult_map(), c.dims(), &cc, f, top).compose(&rho);
        match (0..=top).find(|&n| lhs.at(n) != rhs.at(n)) {
            Some(n) => r.fail("coassociative", Some(n), "(ρ⊗id)ρ ≠ (id⊗Δ)ρ"),
            None => r.pass("coassociative"),
        }
        let unit = tensor_with_identity_left(xd, &c.counit_map(), c.dims(), &[1], f, top).compose(&rho);
        match (0..=top).find(|&n| !unit.at(n).is_identity()) {
            Some(n) => r.fail("counital", Some(n), "(id⊗ε)ρ ≠ id"),
            None => r.pass("counital"),
        }
        r
    }

    pub fn is_valid(&self) -> bool {
        self.validate().passed()
    }

    pub(crate) fn check_same_coalgebra(&self, other: &DGComodule) -> Result<()> {
        if self.coalgebra == other.coalgebra {
            Ok(())
        } else {
            Err(Error::CoalgebraMismatch)
        }
    }

    /// `f ⊗ id_C` for a degree-zero graded map `f : X -> Y`.
    pub(crate) fn tensor_id(&self, f: &ChainMap, src: &[usize], tgt: &[usize]) -> ChainMap {
        let c = &self.coalgebra;
        tensor_with_identity_right(f, src, tgt, c.dims(), c.field(), c.maxdeg())
    }

    /// The subcomodule spanned degreewise by the columns of `basis`, with its inclusion.
    ///
    /// Fails if the span is not closed under the differential or the coaction.
    pub fn subcomodule(&self, basis: &[Matrix]) -> Result<(DGComodule, ComoduleMap)> {
        let carrier = self.carrier.subcomplex(basis)?;
        let incl = ChainMap::new(basis.to_vec());
        let e = self.tensor_id(&incl, carrier.dims(), self.dims());
        let mut coaction = Vec::with_capacity(basis.len());
        for (n, b) in basis.iter().enumerate() {
            let image = self.coaction[n].mul(b);
            let rho = e
                .at(n)
                .solve_matrix(&image)
                .ok_or_else(|| Error::invariant(format!("subspace not closed under the coaction in degree {n}")))?;
            coaction.push(rho);
        }
        let sub = DGComodule { coalgebra: self.coalgebra.clone(), carrier, coaction };
        let map = ComoduleMap::unchecked(sub.clone(), self.clone(), incl);
        Ok((sub, map))
    }

    /// The quotient by the subcomodule spanned by `sub`, with the projection.
    pub fn quotient(&self, sub: &[Matrix]) -> Result<(DGComodule, ComoduleMap)> {
        let (carrier, proj) = self.carrier.quotient(sub)?;
        let p = ChainMap::new(proj);
        let pp = self.tensor_id(&p, self.dims(), carrier.dims());
        let mut coaction = Vec::with_capacity(sub.len());
        for n in 0..=self.maxdeg() {
            let composite = pp.at(n).mul(&self.coaction[n]);
            if !composite.mul(&sub[n]).is_zero() {
                return Err(Error::invariant(format!("subspace not closed under the coaction in degree {n}")));
            }
            // a right inverse of the projection picks representatives
            let section = p.at(n).section_of_surjection()?;
            coaction.push(composite.mul(&section));
        }
        let q = DGComodule { coalgebra: self.coalgebra.clone(), carrier, coaction };
        let map = ComoduleMap::unchecked(self.clone(), q.clone(), p);
        Ok((q, map))
    }

    /// `X ⊕ Y` with the inclusions.
    pub fn direct_sum(&self, other: &DGComodule) -> Result<(DGComodule, ComoduleMap, ComoduleMap)> {
        self.check_same_coalgebra(other)?;
        let f = self.field();
        let carrier = self.carrier.direct_sum(&other.carrier)?;
        let (ix, iy) = sum_inclusions(f, self.dims(), other.dims());
        let ex = self.tensor_id(&ix, self.dims(), carrier.dims());
        let ey = self.tensor_id(&iy, other.dims(), carrier.dims());
        let coaction = (0..=self.maxdeg())
            .map(|n| {
                let a = ex.at(n).mul(&self.coaction[n]);
                let b = ey.at(n).mul(&other.coaction[n]);
                Matrix::hstack(f, a.rows(), &[&a, &b])
            })
            .collect();
        let sum = DGComodule { coalgebra: self.coalgebra.clone(), carrier, coaction };
        let jx = ComoduleMap::unchecked(self.clone(), sum.clone(), ix);
        let jy = ComoduleMap::unchecked(other.clone(), sum.clone(), iy);
        Ok((sum, jx, jy))
    }

    /// `X_{≤n}` with its inclusion; verifies that the coaction restricts.
    pub fn truncate(&self, n: usize) -> Result<(DGComodule, ComoduleMap)> {
        let f = self.field();
        let basis: Vec<Matrix> = (0..=self.maxdeg())
            .map(|k| {
                if k <= n {
                    Matrix::identity(f, self.carrier.dim(k))
                } else {
                    Matrix::zeros(f, self.carrier.dim(k), 0)
                }
            })
            .collect();
        self.subcomodule(&basis).map_err(|e| match e {
            Error::Invariant(msg) => Error::precondition(format!("coaction does not restrict to degrees ≤ {n}: {msg}")),
            other => other,
        })
    }

    /// The graded space `Hom_C(X, Y)_m` of degree-`m` coaction-compatible maps.
    pub fn hom(&self, y: &DGComodule, m: usize) -> Result<HomSpace> {
        self.check_same_coalgebra(y)?;
        HomSpace::new(self, y, m)
    }

    /// A basis of the comodule maps `X -> Y` (chain maps compatible with the coactions).
    pub fn comodule_maps(&self, y: &DGComodule) -> Result<Vec<ComoduleMap>> {
        let h = self.hom(y, 0)?;
        let fld = self.field();
        let top = self.maxdeg();
        let combos = h.basis.mul(&self.chain_condition(y, &h).kernel_basis());
        Ok((0..combos.cols())
            .map(|j| {
                let maps = h.layout.unpack(&combos.column(j), fld);
                ComoduleMap::unchecked(self.clone(), y.clone(), ChainMap::new(maps[..=top].to_vec()))
            })
            .collect())
    }

    /// The linear map sending coordinates in `h` to the entries of `d f - f d`.
    fn chain_condition(&self, y: &DGComodule, h: &HomSpace) -> Matrix {
        let fld = self.field();
        let top = self.maxdeg();
        let rows: usize = (1..=top).map(|i| y.carrier.dim(i - 1) * self.carrier.dim(i)).sum();
        let mut defect = Matrix::zeros(fld, rows, h.dim());
        for j in 0..h.dim() {
            let f = h.layout.unpack(&h.basis.column(j), fld);
            let mut off = 0;
            for i in 1..=top {
                let m = y.carrier.d_ref(i).mul(&f[i]).sub(&f[i - 1].mul(self.carrier.d_ref(i)));
                for a in 0..m.rows() {
                    for b in 0..m.cols() {
                        if !m.is_entry_zero(a, b) {
                            defect.set(off + a * m.cols() + b, j, m.get(a, b));
                        }
                    }
                }
                off += m.rows() * m.cols();
            }
        }
        defect
    }

    /// Degreewise rank of the coaction; counitality forces it to be injective.
    pub fn coaction_is_injective(&self) -> bool {
        self.coaction.iter().all(|m| m.rank() == m.cols())
    }
}

/// The block inclusions `X -> X ⊕ Y` and `Y -> X ⊕ Y`.
pub(crate) fn sum_inclusions(f: Field, xd: &[usize], yd: &[usize]) -> (ChainMap, ChainMap) {
    let ix = xd
        .iter()
        .zip(yd)
        .map(|(&a, &b)| Matrix::vstack(f, a, &[&Matrix::identity(f, a), &Matrix::zeros(f, b, a)]))
        .collect();
    let iy = xd
        .iter()
        .zip(yd)
        .map(|(&a, &b)| Matrix::vstack(f, b, &[&Matrix::zeros(f, a, b), &Matrix::identity(f, b)]))
        .collect();
    (ChainMap::new(ix), ChainMap::new(iy))
}

/// A chain map compatible with the coactions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleMap {
    source: DGComodule,
    target: DGComodule,
    map: ChainMap,
}

impl ComoduleMap {
    pub fn new(source: DGComodule, target: DGComodule, map: ChainMap) -> Result<Self> {
        source.check_same_coalgebra(&target)?;
        let m = Self { source, target, map };
        let r = m.validate();
        if let Some(c) = r.first_failure() {
            return Err(Error::axiom(format!("not a comodule map: {} at degree {:?}", c.name, c.degree)));
        }
        Ok(m)
    }

    pub(crate) fn unchecked(source: DGComodule, target: DGComodule, map: ChainMap) -> Self {
        Self { source, target, map }
    }

    pub fn identity(x: &DGComodule) -> Self {
        Self::unchecked(x.clone(), x.clone(), ChainMap::identity(x.carrier()))
    }

    pub fn zero(x: &DGComodule, y: &DGComodule) -> Self {
        Self::unchecked(x.clone(), y.clone(), ChainMap::zero(x.carrier(), y.carrier()))
    }

    pub fn source(&self) -> &DGComodule {
        &self.source
    }

    pub fn target(&self) -> &DGComodule {
        &self.target
    }

    pub fn map(&self) -> &ChainMap {
        &self.map
    }

    pub fn at(&self, n: usize) -> &Matrix {
        self.map.at(n)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ComoduleMap) -> ComoduleMap {
        Self::unchecked(other.source.clone(), self.target.clone(), self.map.compose(&other.map))
    }

    pub fn validate(&self) -> Report {
        let mut r = Report::new();
        let (x, y) = (&self.source, &self.target);
        r.absorb("chain map", self.map.validate(x.carrier(), y.carrier()));
        if !r.passed() {
            return r;
        }
        let ft = x.tensor_id(&self.map, x.dims(), y.dims());
        match (0..=x.maxdeg()).find(|&n| y.coaction(n).mul(self.map.at(n)) != ft.at(n).mul(x.coaction(n))) {
            Some(n) => r.fail("compatible with coactions", Some(n), "ρ f ≠ (f⊗id) ρ"),
            None => r.pass("compatible with coactions"),
        }
        r
    }

    pub fn is_injective(&self) -> bool {
        self.map.is_injective()
    }

    /// Surjective in every degree from `from` through `through`.
    pub fn is_surjective_between(&self, from: usize, through: usize) -> bool {
        (from..=through.min(self.source.maxdeg())).all(|n| self.map.is_surjective_in(n))
    }

    pub fn is_quasi_iso(&self, through: usize) -> bool {
        self.map.is_quasi_iso(self.source.carrier(), self.target.carrier(), through)
    }

    pub fn kernel(&self) -> Result<(DGComodule, ComoduleMap)> {
        let basis: Vec<Matrix> = self.map.maps().iter().map(Matrix::kernel_basis).collect();
        self.source.subcomodule(&basis)
    }

    pub fn image(&self) -> Result<(DGComodule, ComoduleMap)> {
        let basis: Vec<Matrix> = self.map.maps().iter().map(Matrix::image_basis).collect();
        self.target.subcomodule(&basis)
    }

    pub fn cokernel(&self) -> Result<(DGComodule, ComoduleMap)> {
        let basis: Vec<Matrix> = self.map.maps().iter().map(Matrix::image_basis).collect();
        self.target.quotient(&basis)
    }

    /// Kernel and cokernel with their structure maps.
    pub fn kernel_cokernel(&self) -> Result<(DGComodule, DGComodule)> {
        Ok((self.kernel()?.0, self.cokernel()?.0))
    }
}

/// The pullback of `f : X -> Z` and `g : Y -> Z`.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub object: DGComodule,
    pub to_left: ComoduleMap,
    pub to_right: ComoduleMap,
    /// Degreewise basis of the pullback inside `X ⊕ Y`.
    pub embedding: Vec<Matrix>,
}

impl Pullback {
    /// The unique map `W -> P` induced by a cone `a : W -> X`, `b : W -> Y`.
    pub fn mediate(&self, a: &ComoduleMap, b: &ComoduleMap) -> Result<ComoduleMap> {
        let f = self.object.field();
        let mut maps = Vec::with_capacity(self.embedding.len());
        for (n, e) in self.embedding.iter().enumerate() {
            let stacked = Matrix::vstack(f, a.at(n).cols(), &[a.at(n), b.at(n)]);
            let m = e
                .solve_matrix(&stacked)
                .ok_or_else(|| Error::precondition(format!("cone does not commute in degree {n}")))?;
            maps.push(m);
        }
        Ok(ComoduleMap::unchecked(a.source().clone(), self.object.clone(), ChainMap::new(maps)))
    }
}

pub fn pullback(f: &ComoduleMap, g: &ComoduleMap) -> Result<Pullback> {
    if f.target() != g.target() {
        return Err(Error::precondition("pullback legs must share a target"));
    }
    let x = f.source();
    let y = g.source();
    let (sum, _, _) = x.direct_sum(y)?;
    let fld = x.field();
    let embedding: Vec<Matrix> = (0..=x.maxdeg())
        .map(|n| {
            let diff = Matrix::hstack(fld, f.at(n).rows(), &[f.at(n), &g.at(n).neg()]);
            diff.kernel_basis()
        })
        .collect();
    let (object, _) = sum.subcomodule(&embedding)?;
    let px = embedding.iter().zip(x.dims()).map(|(e, &a)| e.block(0, 0, a, e.cols())).collect();
    let py = embedding.iter().zip(x.dims()).zip(y.dims()).map(|((e, &a), &b)| e.block(a, 0, b, e.cols())).collect();
    Ok(Pullback {
        to_left: ComoduleMap::unchecked(object.clone(), x.clone(), ChainMap::new(px)),
        to_right: ComoduleMap::unchecked(object.clone(), y.clone(), ChainMap::new(py)),
        object,
        embedding,
    })
}

/// Layout of the vectorized graded maps `X -> Y` of degree `m`:
/// `f_i : X_i -> Y_{i+m}` for `i + m <= maxdeg`, stored row-major one after another.
#[derive(Clone, Debug)]
pub struct HomLayout {
    pub degree: usize,
    /// `(i, offset, dim Y_{i+m}, dim X_i)`.
    pub blocks: Vec<(usize, usize, usize, usize)>,
    pub total: usize,
}

impl HomLayout {
    pub fn new(xd: &[usize], yd: &[usize], m: usize) -> Self {
        let top = xd.len() - 1;
        let mut blocks = Vec::new();
        let mut off = 0;
        for i in 0..=top {
            if i + m > top {
                break;
            }
            let (r, c) = (yd[i + m], xd[i]);
            blocks.push((i, off, r, c));
            off += r * c;
        }
        Self { degree: m, blocks, total: off }
    }

    pub fn unpack(&self, v: &Matrix, field: Field) -> Vec<Matrix> {
        self.blocks
            .iter()
            .map(|&(_, off, r, c)| {
                let mut out = Matrix::zeros(field, r, c);
                for a in 0..r {
                    for b in 0..c {
                        if !v.is_entry_zero(off + a * c + b, 0) {
                            out.set(a, b, v.get(off + a * c + b, 0));
                        }
                    }
                }
                out
            })
            .collect()
    }

    pub fn pack(&self, maps: &[Matrix], field: Field) -> Matrix {
        let mut v = Matrix::zeros(field, self.total, 1);
        for (&(_, off, r, c), m) in self.blocks.iter().zip(maps) {
            for a in 0..r {
                for b in 0..c {
                    if !m.is_entry_zero(a, b) {
                        v.set(off + a * c + b, 0, m.get(a, b));
                    }
                }
            }
        }
        v
    }
}

/// `Hom_C(X, Y)_m` as a subspace of the vectorized graded maps.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub layout: HomLayout,
    /// Columns form a basis of the coaction-compatible maps.
    pub basis: Matrix,
    /// True when `X` vanishes above `maxdeg - m`, so no component was cut off.
    pub exact: bool,
}

impl HomSpace {
    fn new(x: &DGComodule, y: &DGComodule, m: usize) -> Result<Self> {
        let fld = x.field();
        let top = x.maxdeg();
        let c = x.coalgebra();
        let layout = HomLayout::new(x.dims(), y.dims(), m);
        let yc = tensor_dims(y.dims(), c.dims(), top);
        // constraint rows: for each source degree i (i + m <= top), the entries of
        // ρ_Y f_i - (f ⊗ id) ρ_X in (Y⊗C)_{i+m} x X_i
        let mut row_off = Vec::new();
        let mut rows = 0;
        for &(i, _, _, _) in &layout.blocks {
            row_off.push(rows);
            rows += yc[i + m] * x.dims()[i];
        }
        let mut eq = Matrix::zeros(fld, rows, layout.total);
        for (bi, &(i, off, r, cdim)) in layout.blocks.iter().enumerate() {
            let rho_y = y.coaction(i + m);
            for a in 0..r {
                for b in 0..cdim {
                    let col = off + a * cdim + b;
                    // ρ_Y f: column b of degree i gets ρ_Y[:, a]
                    for s in 0..yc[i + m] {
                        if !rho_y.is_entry_zero(s, a) {
                            let row = row_off[bi] + s * cdim + b;
                            eq.set(row, col, rho_y.get(s, a));
                        }
                    }
                    // (f ⊗ id) ρ_X in every source degree i2 >= i
                    for (bj, &(i2, _, _, c2)) in layout.blocks.iter().enumerate() {
                        if i2 < i {
                            continue;
                        }
                        let xcb = TensorBlocks::new(x.dims(), c.dims(), i2);
                        let ycb2 = TensorBlocks::new(y.dims(), c.dims(), i2 + m);
                        let cd = c.carrier().dim(i2 - i);
                        let rho_x = x.coaction(i2);
                        for e in 0..cd {
                            let src_row = xcb.index(i, b, e);
                            let tgt_row = ycb2.index(i + m, a, e);
                            for xcol in 0..c2 {
                                if !rho_x.is_entry_zero(src_row, xcol) {
                                    let row = row_off[bj] + tgt_row * c2 + xcol;
                                    eq.add_scaled(row, col, &rho_x.get(src_row, xcol), -1);
                                }
                            }
                        }
                    }
                }
            }
        }
        let basis = eq.kernel_basis();
        let exact = (top.saturating_sub(m) + 1..=top).all(|i| x.carrier().dim(i) == 0);
        Ok(Self { layout, basis, exact })
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }
}

/// Outcome of the fibrancy test: `CoTor¹_C(k, X)` in chain degrees `0..=through`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fibrancy {
    pub fibrant: bool,
    pub through: usize,
    /// Lowest chain degree carrying a nonzero `CoTor¹` class.
    pub obstruction: Option<usize>,
    pub cotor1: Vec<usize>,
}

/// Fibrant (equivalently coflat) through `through`: `CoTor¹(S⁰, X)` vanishes there.
pub fn is_fibrant(x: &DGComodule, through: usize) -> Result<Fibrancy> {
    let c = x.coalgebra();
    c.require_simply_connected()?;
    let through = through.min(x.maxdeg());
    let k = DGComodule::trivial(&ChainComplex::sphere(x.field(), 0, 1, x.maxdeg()), c.clone())?;
    let cotor1 = crate::cotensor::cotor(&k, x, 1)?;
    let obstruction = cotor1[..=through].iter().position(|&d| d != 0);
    Ok(Fibrancy { fibrant: obstruction.is_none(), through, obstruction, cotor1 })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FibrationVerdict {
    /// The kernel is fibrant and the image inclusion is a pullback of `0 -> S⁰(Q)⊗C`.
    Fibration,
    /// A fibration always has fibrant kernel; this one does not.
    KernelNotFibrant { degree: usize },
    /// Kernel fibrant, but the image inclusion is not recognized as a pullback of a generating fibration.
    Inconclusive { degree: usize },
}

impl FibrationVerdict {
    pub fn is_fibration(&self) -> Option<bool> {
        match self {
            FibrationVerdict::Fibration => Some(true),
            FibrationVerdict::KernelNotFibrant { .. } => Some(false),
            FibrationVerdict::Inconclusive { .. } => None,
        }
    }
}

/// Decides whether `f` is a fibration, exactly through `through`.
///
/// `f` factors as `X ->> im f >-> Y`. The first map is an epimorphism, so it
/// is a fibration iff its kernel is fibrant. The second is a fibration when it
/// is the kernel of the map `Y -> S⁰(Q_0)⊗C` adjoint to `Y_0 -> Y_0 / im f_0`,
/// which always happens when `f` is onto in positive degrees.
pub fn is_fibration(f: &ComoduleMap, through: usize) -> Result<FibrationVerdict> {
    let (kernel, _) = f.kernel()?;
    let cert = is_fibrant(&kernel, through)?;
    if let Some(degree) = cert.obstruction {
        return Ok(FibrationVerdict::KernelNotFibrant { degree });
    }
    match image_is_degree_zero_pullback(f)? {
        None => Ok(FibrationVerdict::Fibration),
        Some(degree) if degree > through => Ok(FibrationVerdict::Fibration),
        Some(degree) => Ok(FibrationVerdict::Inconclusive { degree }),
    }
}

/// `None` when `im f = ker(Y -> S⁰(Q_0)⊗C)`; otherwise the first degree where they differ.
fn image_is_degree_zero_pullback(f: &ComoduleMap) -> Result<Option<usize>> {
    let y = f.target();
    let fld = y.field();
    let c = y.coalgebra();
    let image: Vec<Matrix> = f.map().maps().iter().map(Matrix::image_basis).collect();
    let y0 = y.carrier().dim(0);
    let comp = image[0].complement_columns();
    let full = Matrix::hstack(fld, y0, &[&image[0], &comp]);
    let phi = full.inverse().expect("basis").block(image[0].cols(), 0, comp.cols(), y0);
    // d(Y_1) must die in Q_0 for the projection to be a chain map
    if y.maxdeg() >= 1 && !phi.mul(y.carrier().d_ref(1)).is_zero() {
        return Ok(Some(0));
    }
    let phi_map = ChainMap::new(
        (0..=y.maxdeg())
            .map(|n| if n == 0 { phi.clone() } else { Matrix::zeros(fld, 0, y.carrier().dim(n)) })
            .collect(),
    );
    let q_dims: Vec<usize> = (0..=y.maxdeg()).map(|n| if n == 0 { comp.cols() } else { 0 }).collect();
    let g = tensor_with_identity_right(&phi_map, y.dims(), &q_dims, c.dims(), fld, y.maxdeg());
    for n in 0..=y.maxdeg() {
        let k = g.at(n).mul(y.coaction(n)).kernel_basis();
        if k.cols() != image[n].cols() || !Matrix::same_column_span(&k, &image[n]) {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

//! Non-negative, degreewise finite chain complexes truncated at a fixed degree.
//!
//! A complex with `maxdeg == N` stores `X_0, ..., X_N` and the differentials
//! `d_n : X_n -> X_{n-1}` for `1 <= n <= N`. Everything above `N` is treated
//! as zero, so homology in degree `N` only sees the cycles there and is
//! flagged as not exact.
//!
//! Tensor bases: `(X ⊗ Y)_n` is the concatenation of blocks `X_i ⊗ Y_{n-i}` for
//! ascending `i`, and inside a block the basis vector `x_a ⊗ y_b` sits at
//! `a * dim Y_{n-i} + b`. Linear maps between tensor products are therefore
//! Kronecker products blockwise.

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};
use crate::report::Report;

/// Offsets of the blocks of a graded tensor product in one degree.
#[derive(Clone, Debug)]
pub struct TensorBlocks {
    /// `(i, offset, dim X_i, dim Y_{n-i})` for every `i` in `0..=n`.
    pub blocks: Vec<(usize, usize, usize, usize)>,
    pub total: usize,
}

impl TensorBlocks {
    pub fn new(xd: &[usize], yd: &[usize], n: usize) -> Self {
        let mut blocks = Vec::with_capacity(n + 1);
        let mut offset = 0;
        for i in 0..=n {
            let a = xd.get(i).copied().unwrap_or(0);
            let b = yd.get(n - i).copied().unwrap_or(0);
            blocks.push((i, offset, a, b));
            offset += a * b;
        }
        Self { blocks, total: offset }
    }

    /// Position of `x_a ⊗ y_b` with `|x| = i`.
    pub fn index(&self, i: usize, a: usize, b: usize) -> usize {
        let (_, off, _, db) = self.blocks[i];
        off + a * db + b
    }

    pub fn offset(&self, i: usize) -> usize {
        self.blocks[i].1
    }
}

/// Degreewise dimensions of `X ⊗ Y` truncated at `maxdeg`.
pub fn tensor_dims(xd: &[usize], yd: &[usize], maxdeg: usize) -> Vec<usize> {
    (0..=maxdeg).map(|n| TensorBlocks::new(xd, yd, n).total).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    field: Field,
    dims: Vec<usize>,
    /// `diffs[n] : X_n -> X_{n-1}`; `diffs[0]` has zero rows.
    diffs: Vec<Matrix>,
}

/// Homology in one degree together with chosen cycle representatives.
#[derive(Clone, Debug)]
pub struct Homology {
    pub degree: usize,
    pub dim: usize,
    /// Columns are cycles whose classes form a basis of `H_n`.
    pub representatives: Matrix,
    /// False in the top degree, where the missing differential can hide boundaries.
    pub exact: bool,
}

impl ChainComplex {
    /// Builds a complex from dimensions and differentials `d_1..d_N`.
    ///
    /// Shapes are checked; `d ∘ d = 0` is left to [`ChainComplex::validate`].
    pub fn new(field: Field, dims: Vec<usize>, diffs: Vec<Matrix>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::Shape("a complex needs at least degree 0".into()));
        }
        if diffs.len() + 1 != dims.len() {
            return Err(Error::Shape(format!(
                "{} degrees need {} differentials, found {}",
                dims.len(),
                dims.len() - 1,
                diffs.len()
            )));
        }
        let mut all = Vec::with_capacity(dims.len());
        all.push(Matrix::zeros(field, 0, dims[0]));
        for (k, d) in diffs.into_iter().enumerate() {
            let n = k + 1;
            if d.field() != field {
                return Err(Error::FieldMismatch);
            }
            if d.shape() != (dims[n - 1], dims[n]) {
                return Err(Error::Shape(format!(
                    "d_{n} should be {}x{}, found {}x{}",
                    dims[n - 1],
                    dims[n],
                    d.rows(),
                    d.cols()
                )));
            }
            all.push(d);
        }
        Ok(Self { field, dims, diffs: all })
    }

    /// Zero differentials.
    pub fn from_dims(field: Field, dims: Vec<usize>) -> Self {
        let diffs = (1..dims.len()).map(|n| Matrix::zeros(field, dims[n - 1], dims[n])).collect();
        Self::new(field, dims, diffs).expect("shapes are consistent by construction")
    }

    pub fn zero(field: Field, maxdeg: usize) -> Self {
        Self::from_dims(field, vec![0; maxdeg + 1])
    }

    /// `S^n(V)` with `dim V = v`.
    pub fn sphere(field: Field, n: usize, v: usize, maxdeg: usize) -> Self {
        let mut dims = vec![0; maxdeg + 1];
        if n <= maxdeg {
            dims[n] = v;
        }
        Self::from_dims(field, dims)
    }

    /// `D^n(V)`: `V` in degrees `n-1` and `n` joined by the identity.
    pub fn disk(field: Field, n: usize, v: usize, maxdeg: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::precondition("disks start in degree 1"));
        }
        let mut dims = vec![0; maxdeg + 1];
        if n - 1 <= maxdeg {
            dims[n - 1] = v;
        }
        if n <= maxdeg {
            dims[n] = v;
        }
        let mut diffs: Vec<Matrix> = (1..=maxdeg).map(|k| Matrix::zeros(field, dims[k - 1], dims[k])).collect();
        if n <= maxdeg {
            diffs[n - 1] = Matrix::identity(field, v);
        }
        Self::new(field, dims, diffs)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn maxdeg(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, n: usize) -> usize {
        self.dims.get(n).copied().unwrap_or(0)
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// `d_n : X_n -> X_{n-1}`; for `n == 0` or `n > maxdeg` this is a zero map.
    pub fn d(&self, n: usize) -> Matrix {
        if n <= self.maxdeg() {
            self.diffs[n].clone()
        } else {
            Matrix::zeros(self.field, self.dim(n - 1), 0)
        }
    }

    pub fn d_ref(&self, n: usize) -> &Matrix {
        &self.diffs[n]
    }

    pub fn differentials(&self) -> &[Matrix] {
        &self.diffs[1..]
    }

    /// Shape consistency and `d_{n-1} d_n = 0`.
    pub fn validate(&self) -> Report {
        let mut r = Report::new();
        for n in 1..=self.maxdeg() {
            let d = &self.diffs[n];
            if d.shape() != (self.dims[n - 1], self.dims[n]) {
                r.fail("differential shape", Some(n), format!("found {}x{}", d.rows(), d.cols()));
                return r;
            }
        }
        r.pass("differential shapes");
        for n in 2..=self.maxdeg() {
            if !self.diffs[n - 1].mul(&self.diffs[n]).is_zero() {
                r.fail("d∘d = 0", Some(n), format!("d_{}∘d_{n} is nonzero", n - 1));
                return r;
            }
        }
        r.pass("d∘d = 0");
        r
    }

    pub fn cycles(&self, n: usize) -> Matrix {
        self.diffs[n].kernel_basis()
    }

    pub fn boundaries(&self, n: usize) -> Matrix {
        if n < self.maxdeg() {
            self.diffs[n + 1].image_basis()
        } else {
            Matrix::zeros(self.field, self.dims[n], 0)
        }
    }

    pub fn homology(&self, n: usize) -> Homology {
        let z = self.cycles(n);
        let b = self.boundaries(n);
        let picked = Matrix::extending_columns(&b, &z);
        let representatives = z.select_columns(&picked);
        Homology { degree: n, dim: picked.len(), representatives, exact: n < self.maxdeg() }
    }

    pub fn homology_dim(&self, n: usize) -> usize {
        let z = self.dims[n] - self.diffs[n].rank();
        let b = if n < self.maxdeg() { self.diffs[n + 1].rank() } else { 0 };
        z - b
    }

    /// Homology dimensions in degrees `0..=maxdeg` (the last one not exact).
    pub fn homology_dims(&self) -> Vec<usize> {
        (0..=self.maxdeg()).map(|n| self.homology_dim(n)).collect()
    }

    /// Coordinates of a cycle `z` in the chosen homology basis of degree `n`.
    pub fn homology_class(&self, n: usize, h: &Homology, z: &Matrix) -> Result<Matrix> {
        let b = self.boundaries(n);
        let basis = Matrix::hstack(self.field, self.dims[n], &[&h.representatives, &b]);
        let coeffs =
            basis.solve_matrix(z).ok_or_else(|| Error::invariant(format!("vector is not a cycle in degree {n}")))?;
        Ok(coeffs.block(0, 0, h.dim, z.cols()))
    }

    /// The same complex with `maxdeg` changed: extra degrees are zero, or top degrees dropped.
    pub fn with_maxdeg(&self, maxdeg: usize) -> Self {
        let dims: Vec<usize> = (0..=maxdeg).map(|n| self.dim(n)).collect();
        let diffs = (1..=maxdeg)
            .map(|n| {
                if n <= self.maxdeg() {
                    self.diffs[n].clone()
                } else {
                    Matrix::zeros(self.field, dims[n - 1], dims[n])
                }
            })
            .collect();
        Self::new(self.field, dims, diffs).expect("shapes preserved")
    }

    /// `X_{≤n}`: degrees above `n` become zero; same `maxdeg`.
    pub fn truncate_below(&self, n: usize) -> Self {
        let dims: Vec<usize> = (0..=self.maxdeg()).map(|k| if k <= n { self.dims[k] } else { 0 }).collect();
        let diffs = (1..=self.maxdeg())
            .map(|k| if k <= n { self.diffs[k].clone() } else { Matrix::zeros(self.field, dims[k - 1], dims[k]) })
            .collect();
        Self::new(self.field, dims, diffs).expect("shapes preserved")
    }

    /// The inclusion `X_{≤n} -> X`.
    pub fn truncation_inclusion(&self, n: usize) -> ChainMap {
        ChainMap::new(
            (0..=self.maxdeg())
                .map(|k| {
                    if k <= n {
                        Matrix::identity(self.field, self.dims[k])
                    } else {
                        Matrix::zeros(self.field, self.dims[k], 0)
                    }
                })
                .collect(),
        )
    }

    pub fn direct_sum(&self, other: &ChainComplex) -> Result<ChainComplex> {
        self.check_compatible(other)?;
        let dims: Vec<usize> = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let diffs =
            (1..=self.maxdeg()).map(|n| Matrix::block_diag(self.field, &[&self.diffs[n], &other.diffs[n]])).collect();
        ChainComplex::new(self.field, dims, diffs)
    }

    pub(crate) fn check_compatible(&self, other: &ChainComplex) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.maxdeg() != other.maxdeg() {
            return Err(Error::MaxdegMismatch(self.maxdeg(), other.maxdeg()));
        }
        Ok(())
    }

    /// `X ⊗ Y` with the Koszul differential `d(x⊗y) = dx⊗y + (-1)^{|x|} x⊗dy`,
    /// truncated at the smaller of the two windows.
    pub fn tensor(&self, other: &ChainComplex) -> Result<ChainComplex> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let field = self.field;
        let maxdeg = self.maxdeg().min(other.maxdeg());
        let dims = tensor_dims(&self.dims, &other.dims, maxdeg);
        let mut diffs = Vec::with_capacity(maxdeg);
        for n in 1..=maxdeg {
            let src = TensorBlocks::new(&self.dims, &other.dims, n);
            let tgt = TensorBlocks::new(&self.dims, &other.dims, n - 1);
            let mut d = Matrix::zeros(field, tgt.total, src.total);
            for &(i, off, dx, dy) in &src.blocks {
                if dx * dy == 0 {
                    continue;
                }
                let j = n - i;
                if i >= 1 {
                    let part = self.diffs[i].kron(&Matrix::identity(field, dy));
                    d.set_block(tgt.offset(i - 1), off, &part);
                }
                if j >= 1 {
                    let part = Matrix::identity(field, dx).kron(&other.diffs[j]).scale_i64(Field::sign(i));
                    let cur = d.block(tgt.offset(i), off, dx * other.dims[j - 1], dx * dy);
                    d.set_block(tgt.offset(i), off, &cur.add(&part));
                }
            }
            diffs.push(d);
        }
        ChainComplex::new(field, dims, diffs)
    }

    /// Splits the complex as `⊕ S^n(V_n) ⊕ D^n(W_n)`.
    ///
    /// The model basis in degree `n` is `[H_n | D^{n+1} bottom | D^n top]`,
    /// of sizes `V_n`, `W_{n+1}`, `W_n`.
    pub fn split(&self) -> Splitting {
        let field = self.field;
        let top = self.maxdeg();
        let w: Vec<usize> = (0..=top).map(|n| if n == 0 { 0 } else { self.diffs[n].rank() }).collect();
        // lifts[n]: a section of d_n onto its image, one column per boundary basis vector of B_{n-1}
        let mut lifts: Vec<Matrix> = Vec::with_capacity(top + 1);
        let mut bases: Vec<Matrix> = Vec::with_capacity(top + 1);
        for n in 0..=top {
            if n == 0 || w[n] == 0 {
                lifts.push(Matrix::zeros(field, self.dims[n], 0));
                bases.push(Matrix::zeros(field, self.dim(n.saturating_sub(1)), 0));
                continue;
            }
            let b = self.diffs[n].image_basis();
            let coords = b.solve_matrix(&self.diffs[n]).expect("d_n lands in its image");
            let s = coords.section_of_surjection().expect("coordinates of d_n onto its image are surjective");
            bases.push(self.diffs[n].mul(&s));
            lifts.push(s);
        }
        let mut v = Vec::with_capacity(top + 1);
        let mut to_x = Vec::with_capacity(top + 1);
        for n in 0..=top {
            let boundary = if n < top { bases[n + 1].clone() } else { Matrix::zeros(field, self.dims[n], 0) };
            let z = self.cycles(n);
            let picked = Matrix::extending_columns(&boundary, &z);
            let reps = z.select_columns(&picked);
            v.push(reps.cols());
            to_x.push(Matrix::hstack(field, self.dims[n], &[&reps, &boundary, &lifts[n]]));
        }
        let w_next = |n: usize| if n < top { w[n + 1] } else { 0 };
        let dims: Vec<usize> = (0..=top).map(|n| v[n] + w_next(n) + w[n]).collect();
        let diffs = (1..=top)
            .map(|n| {
                let mut d = Matrix::zeros(field, dims[n - 1], dims[n]);
                // D^n top (last W_n columns of degree n) -> D^n bottom (middle block of degree n-1)
                d.set_block(v[n - 1], v[n] + w_next(n), &Matrix::identity(field, w[n]));
                d
            })
            .collect();
        let model = ChainComplex::new(field, dims, diffs).expect("model shapes are consistent");
        let from_x = to_x.iter().map(|m| m.inverse().expect("splitting basis is a basis")).collect();
        Splitting {
            homology_dims: v,
            boundary_dims: w,
            model,
            to_complex: ChainMap::new(to_x),
            from_complex: ChainMap::new(from_x),
        }
    }

    /// Restricts to a subcomplex spanned degreewise by the columns of `basis[n]`.
    ///
    /// Fails if the span is not closed under the differential.
    pub fn subcomplex(&self, basis: &[Matrix]) -> Result<ChainComplex> {
        let dims: Vec<usize> = basis.iter().map(Matrix::cols).collect();
        let mut diffs = Vec::with_capacity(self.maxdeg());
        for n in 1..=self.maxdeg() {
            let image = self.diffs[n].mul(&basis[n]);
            let d = basis[n - 1]
                .solve_matrix(&image)
                .ok_or_else(|| Error::invariant(format!("subspace not closed under d_{n}")))?;
            diffs.push(d);
        }
        ChainComplex::new(self.field, dims, diffs)
    }

    /// Quotient by a subcomplex spanned by `sub[n]`; returns the quotient and
    /// the degreewise projections.
    pub fn quotient(&self, sub: &[Matrix]) -> Result<(ChainComplex, Vec<Matrix>)> {
        let field = self.field;
        let mut proj = Vec::with_capacity(self.dims.len());
        let mut comps = Vec::with_capacity(self.dims.len());
        for n in 0..=self.maxdeg() {
            let c = sub[n].complement_columns();
            let full = Matrix::hstack(field, self.dims[n], &[&sub[n], &c]);
            let inv = full.inverse().ok_or_else(|| Error::invariant("subspace basis is not independent"))?;
            proj.push(inv.block(sub[n].cols(), 0, c.cols(), self.dims[n]));
            comps.push(c);
        }
        let dims: Vec<usize> = comps.iter().map(Matrix::cols).collect();
        let mut diffs = Vec::with_capacity(self.maxdeg());
        for n in 1..=self.maxdeg() {
            if !proj[n - 1].mul(&self.diffs[n]).mul(&sub[n]).is_zero() {
                return Err(Error::invariant(format!("subspace not closed under d_{n}")));
            }
            diffs.push(proj[n - 1].mul(&self.diffs[n]).mul(&comps[n]));
        }
        Ok((ChainComplex::new(field, dims, diffs)?, proj))
    }
}

/// A degree-preserving family of matrices `f_n : X_n -> Y_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    maps: Vec<Matrix>,
}

impl ChainMap {
    pub fn new(maps: Vec<Matrix>) -> Self {
        Self { maps }
    }

    pub fn identity(x: &ChainComplex) -> Self {
        Self::new(x.dims().iter().map(|&d| Matrix::identity(x.field(), d)).collect())
    }

    pub fn zero(x: &ChainComplex, y: &ChainComplex) -> Self {
        Self::new((0..=x.maxdeg()).map(|n| Matrix::zeros(x.field(), y.dim(n), x.dim(n))).collect())
    }

    pub fn maxdeg(&self) -> usize {
        self.maps.len() - 1
    }

    pub fn at(&self, n: usize) -> &Matrix {
        &self.maps[n]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn into_maps(self) -> Vec<Matrix> {
        self.maps
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ChainMap) -> ChainMap {
        ChainMap::new(self.maps.iter().zip(&other.maps).map(|(a, b)| a.mul(b)).collect())
    }

    pub fn add(&self, other: &ChainMap) -> ChainMap {
        ChainMap::new(self.maps.iter().zip(&other.maps).map(|(a, b)| a.add(b)).collect())
    }

    pub fn sub(&self, other: &ChainMap) -> ChainMap {
        ChainMap::new(self.maps.iter().zip(&other.maps).map(|(a, b)| a.sub(b)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    /// Shapes and `d^Y f = f d^X`; reports the first failing degree.
    pub fn validate(&self, src: &ChainComplex, tgt: &ChainComplex) -> Report {
        let mut r = Report::new();
        if self.maps.len() != src.dims().len() || src.maxdeg() != tgt.maxdeg() {
            r.fail("degree range", None, "map, source and target disagree on maxdeg");
            return r;
        }
        for (n, m) in self.maps.iter().enumerate() {
            if m.shape() != (tgt.dim(n), src.dim(n)) {
                r.fail("map shape", Some(n), format!("found {}x{}", m.rows(), m.cols()));
                return r;
            }
        }
        r.pass("map shapes");
        for n in 1..=src.maxdeg() {
            if tgt.d_ref(n).mul(&self.maps[n]) != self.maps[n - 1].mul(src.d_ref(n)) {
                r.fail("commutes with d", Some(n), "d f ≠ f d");
                return r;
            }
        }
        r.pass("commutes with d");
        r
    }

    pub fn is_chain_map(&self, src: &ChainComplex, tgt: &ChainComplex) -> bool {
        self.validate(src, tgt).passed()
    }

    pub fn is_injective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_surjective_in(&self, n: usize) -> bool {
        let m = &self.maps[n];
        m.rank() == m.rows()
    }

    /// `H_i(f)` as a matrix between the chosen homology bases.
    pub fn on_homology(&self, src: &ChainComplex, tgt: &ChainComplex, n: usize) -> Result<Matrix> {
        let hs = src.homology(n);
        let ht = tgt.homology(n);
        let images = self.maps[n].mul(&hs.representatives);
        tgt.homology_class(n, &ht, &images)
    }

    /// True when `H_i(f)` is an isomorphism for every `i <= through`.
    pub fn is_quasi_iso(&self, src: &ChainComplex, tgt: &ChainComplex, through: usize) -> bool {
        (0..=through.min(src.maxdeg())).all(|n| match self.on_homology(src, tgt, n) {
            Ok(h) => h.rows() == h.cols() && h.rank() == h.rows(),
            Err(_) => false,
        })
    }

    /// `f ⊗ g` for degree-zero maps, truncated at `maxdeg`.
    pub fn tensor(
        &self,
        g: &ChainMap,
        f_src: &[usize],
        f_tgt: &[usize],
        g_src: &[usize],
        g_tgt: &[usize],
        field: Field,
        maxdeg: usize,
    ) -> ChainMap {
        let mut out = Vec::with_capacity(maxdeg + 1);
        for n in 0..=maxdeg {
            let s = TensorBlocks::new(f_src, g_src, n);
            let t = TensorBlocks::new(f_tgt, g_tgt, n);
            let mut m = Matrix::zeros(field, t.total, s.total);
            for i in 0..=n {
                let (_, so, a, b) = s.blocks[i];
                let (_, to, c, e) = t.blocks[i];
                if a * b == 0 || c * e == 0 {
                    continue;
                }
                m.set_block(to, so, &self.maps[i].kron(&g.maps[n - i]));
            }
            out.push(m);
        }
        ChainMap::new(out)
    }
}

/// Explicit decomposition of a complex into spheres and disks.
#[derive(Clone, Debug)]
pub struct Splitting {
    /// `V_n = dim H_n`.
    pub homology_dims: Vec<usize>,
    /// `W_n = dim B_{n-1} = rank d_n`.
    pub boundary_dims: Vec<usize>,
    pub model: ChainComplex,
    pub to_complex: ChainMap,
    pub from_complex: ChainMap,
}

impl Splitting {
    /// Dimension count, homology dims, and the round trip of the explicit isomorphism.
    pub fn check(&self, x: &ChainComplex) -> Report {
        let mut r = Report::new();
        let top = x.maxdeg();
        let (v, w) = (&self.homology_dims, &self.boundary_dims);
        let w_next = |n: usize| if n < top { w[n + 1] } else { 0 };
        match (0..=top).find(|&n| x.dim(n) != v[n] + w[n] + w_next(n)) {
            Some(n) => {
                r.fail("dim X_n = V_n + W_n + W_{n+1}", Some(n), format!("{} vs {}", x.dim(n), v[n] + w[n] + w_next(n)))
            }
            None => r.pass("dim X_n = V_n + W_n + W_{n+1}"),
        }
        match (0..=top).find(|&n| v[n] != x.homology_dim(n)) {
            Some(n) => r.fail("V_n = dim H_n", Some(n), format!("{} vs {}", v[n], x.homology_dim(n))),
            None => r.pass("V_n = dim H_n"),
        }
        r.absorb("model -> X", self.to_complex.validate(&self.model, x));
        r.absorb("X -> model", self.from_complex.validate(x, &self.model));
        let there_and_back = self.from_complex.compose(&self.to_complex);
        let back_and_there = self.to_complex.compose(&self.from_complex);
        match (0..=top).find(|&n| !there_and_back.at(n).is_identity() || !back_and_there.at(n).is_identity()) {
            Some(n) => r.fail("isomorphism round-trips", Some(n), ""),
            None => r.pass("isomorphism round-trips"),
        }
        r
    }
}

/// `f ⊗ g` where both factors are identities except possibly one; helper for
/// building `id ⊗ g` or `f ⊗ id` without materializing identity chain maps.
pub fn tensor_with_identity_left(
    xd: &[usize],
    g: &ChainMap,
    g_src: &[usize],
    g_tgt: &[usize],
    field: Field,
    maxdeg: usize,
) -> ChainMap {
    let id = ChainMap::new(xd.iter().map(|&d| Matrix::identity(field, d)).collect());
    id.tensor(g, xd, xd, g_src, g_tgt, field, maxdeg)
}

pub fn tensor_with_identity_right(
    f: &ChainMap,
    f_src: &[usize],
    f_tgt: &[usize],
    yd: &[usize],
    field: Field,
    maxdeg: usize,
) -> ChainMap {
    let id = ChainMap::new(yd.iter().map(|&d| Matrix::identity(field, d)).collect());
    f.tensor(&id, f_src, f_tgt, yd, yd, field, maxdeg)
}

/// The reassociation `(X ⊗ Y) ⊗ Z -> X ⊗ (Y ⊗ Z)`; a permutation, no signs.
pub fn associator(xd: &[usize], yd: &[usize], zd: &[usize], field: Field, maxdeg: usize) -> ChainMap {
    let xy = tensor_dims(xd, yd, maxdeg);
    let yz = tensor_dims(yd, zd, maxdeg);
    let mut out = Vec::with_capacity(maxdeg + 1);
    for n in 0..=maxdeg {
        let src = TensorBlocks::new(&xy, zd, n);
        let tgt = TensorBlocks::new(xd, &yz, n);
        let mut perm = vec![0usize; src.total];
        for k in 0..=n {
            let inner = TensorBlocks::new(xd, yd, k);
            let dz = zd.get(n - k).copied().unwrap_or(0);
            for &(i, _, dx, dy) in &inner.blocks {
                let j = k - i;
                let yz_blocks = TensorBlocks::new(yd, zd, n - i);
                for a in 0..dx {
                    for b in 0..dy {
                        let u = inner.index(i, a, b);
                        for c in 0..dz {
                            let s = src.index(k, u, c);
                            let v = yz_blocks.index(j, b, c);
                            perm[s] = tgt.index(i, a, v);
                        }
                    }
                }
            }
        }
        out.push(Matrix::signed_permutation(field, &perm, &[]));
    }
    ChainMap::new(out)
}

/// The twist `X ⊗ Y -> Y ⊗ X`, `x⊗y ↦ (-1)^{|x||y|} y⊗x`.
pub fn twist(xd: &[usize], yd: &[usize], field: Field, maxdeg: usize) -> ChainMap {
    let mut out = Vec::with_capacity(maxdeg + 1);
    for n in 0..=maxdeg {
        let src = TensorBlocks::new(xd, yd, n);
        let tgt = TensorBlocks::new(yd, xd, n);
        let mut perm = vec![0usize; src.total];
        let mut signs = vec![1i64; src.total];
        for &(i, _, dx, dy) in &src.blocks {
            let j = n - i;
            for a in 0..dx {
                for b in 0..dy {
                    let s = src.index(i, a, b);
                    perm[s] = tgt.index(j, b, a);
                    signs[s] = Field::sign(i * j);
                }
            }
        }
        out.push(Matrix::signed_permutation(field, &perm, &signs));
    }
    ChainMap::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf2() -> Field {
        Field::gf(2)
    }

    #[test]
    fn standard_complexes() {
        let f = gf2();
        assert_eq!(ChainComplex::sphere(f, 0, 1, 0).dims(), &[1]);
        assert_eq!(ChainComplex::sphere(f, 2, 1, 2).dims(), &[0, 0, 1]);
        let d = ChainComplex::disk(f, 3, 2, 3).unwrap();
        assert_eq!(d.dims(), &[0, 0, 2, 2]);
        assert!(d.d(3).is_identity());
        assert!(ChainComplex::disk(f, 0, 1, 3).is_err());
    }

    #[test]
    fn validation_flags_first_bad_degree() {
        let f = gf2();
        assert!(ChainComplex::disk(f, 2, 1, 2).unwrap().validate().passed());
        let bad = ChainComplex::new(
            f,
            vec![1, 1, 1],
            vec![Matrix::from_rows(f, &[vec![1]]), Matrix::from_rows(f, &[vec![1]])],
        )
        .unwrap();
        let r = bad.validate();
        assert_eq!(r.first_failure().unwrap().degree, Some(2));
        let s = ChainComplex::sphere(f, 0, 1, 3).direct_sum(&ChainComplex::sphere(f, 2, 1, 3)).unwrap();
        assert!(s.validate().passed());
    }

    #[test]
    fn homology_of_spheres_and_disks() {
        let f = Field::gf(3);
        let d = ChainComplex::disk(f, 2, 2, 4).unwrap();
        assert_eq!(&d.homology_dims()[..4], &[0, 0, 0, 0]);
        let s = ChainComplex::sphere(f, 2, 3, 4);
        assert_eq!(&s.homology_dims()[..4], &[0, 0, 3, 0]);
    }

    #[test]
    fn homology_matches_rank_nullity() {
        // dims [1,2,1], d1 = [1 0], d2 = [0 1]^T
        let f = gf2();
        let x = ChainComplex::new(
            f,
            vec![1, 2, 1, 0],
            vec![
                Matrix::from_rows(f, &[vec![1, 0]]),
                Matrix::from_rows(f, &[vec![0], vec![1]]),
                Matrix::zeros(f, 1, 0),
            ],
        )
        .unwrap();
        assert!(x.validate().passed());
        // oracle: H_n = (dim X_n - rank d_n) - rank d_{n+1}
        assert_eq!(&x.homology_dims()[..3], &[0, 0, 0]);
    }

    #[test]
    fn tensor_examples() {
        let f = gf2();
        let s2 = ChainComplex::sphere(f, 2, 1, 4);
        assert_eq!(s2.tensor(&s2).unwrap().dims(), &[0, 0, 0, 0, 1]);
        let d1 = ChainComplex::disk(f, 1, 1, 3).unwrap();
        let s0 = ChainComplex::sphere(f, 0, 1, 3);
        assert_eq!(d1.tensor(&s0).unwrap(), d1);
        let q = Field::rationals();
        let d1 = ChainComplex::disk(q, 1, 1, 3).unwrap();
        let t = d1.tensor(&d1).unwrap();
        assert_eq!(t.dims(), &[1, 2, 1, 0]);
        assert!(t.validate().passed());
        assert_eq!(&t.homology_dims()[..3], &[0, 0, 0]);
    }

    #[test]
    fn split_examples() {
        let f = gf2();
        let x = ChainComplex::sphere(f, 0, 1, 3).direct_sum(&ChainComplex::disk(f, 1, 1, 3).unwrap()).unwrap();
        let s = x.split();
        assert_eq!(s.homology_dims[0], 1);
        assert_eq!(s.boundary_dims[1], 1);

        let q = Field::rationals();
        let d1 = ChainComplex::disk(q, 1, 1, 3).unwrap();
        let t = d1.tensor(&d1).unwrap();
        let s = t.split();
        assert_eq!(s.homology_dims, vec![0, 0, 0, 0]);
        assert_eq!(s.boundary_dims, vec![0, 1, 1, 0]);
        assert!(s.to_complex.is_chain_map(&s.model, &t));
        assert!(s.check(&t).passed());

        let flat = ChainComplex::from_dims(f, vec![2, 1, 3]);
        let s = flat.split();
        assert_eq!(s.homology_dims, vec![2, 1, 3]);
        assert_eq!(s.boundary_dims, vec![0, 0, 0]);
        assert!(s.check(&flat).passed());
    }

    #[test]
    fn quasi_iso_examples() {
        let f = gf2();
        let s0 = ChainComplex::sphere(f, 0, 1, 2);
        assert!(ChainMap::identity(&s0).is_quasi_iso(&s0, &s0, 1));
        assert!(!ChainMap::zero(&s0, &s0).is_quasi_iso(&s0, &s0, 1));
        let z = ChainComplex::zero(f, 3);
        let d = ChainComplex::disk(f, 2, 1, 3).unwrap();
        assert!(ChainMap::zero(&z, &d).is_quasi_iso(&z, &d, 2));
    }

    #[test]
    fn truncation_examples() {
        let f = gf2();
        let s2 = ChainComplex::sphere(f, 2, 1, 3);
        assert!(s2.truncate_below(1).is_zero());
        let d = ChainComplex::disk(f, 2, 1, 3).unwrap();
        assert_eq!(d.truncate_below(3), d);
        let t = d.truncate_below(1);
        assert_eq!(t, ChainComplex::sphere(f, 1, 1, 3));
        assert!(d.truncation_inclusion(1).is_chain_map(&t, &d));
    }

    #[test]
    fn twist_squares_to_identity() {
        let f = Field::gf(5);
        let xd = [1, 2, 1];
        let yd = [2, 1, 1];
        let t = twist(&xd, &yd, f, 2);
        let back = twist(&yd, &xd, f, 2);
        assert!(back.compose(&t).maps().iter().all(Matrix::is_identity));
    }
}

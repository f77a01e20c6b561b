//! The spectral sequence of the cobar bicomplex filtered by cobar degree.
//!
//! Cell `(q, p)` sits in cobar degree `q` and chain degree `p`, total degree
//! `p - q`. The total differential is `vertical + horizontal` and lowers the
//! total degree by one; `F^s` is the span of the rows `q >= s`, and
//! `d_r : E_r^{q,p} -> E_r^{q+r, p+r-1}`.

use std::sync::Arc;

use serde::Serialize;

use crate::coalgebra::HomologyCoalgebra;
use crate::comodule::DGComodule;
use crate::complex::{ChainComplex, ChainMap};
use crate::cotensor::{cobar_bicomplex, CobarBicomplex};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::report::Report;

pub const FILTRATION: &str = "cobar degree q, F^s = rows q >= s";

/// The total complex of a cobar bicomplex, in total degrees `0..=exact_through + 1`.
#[derive(Clone, Debug)]
pub struct TotalComplex {
    pub complex: ChainComplex,
    /// Per total degree: `(q, offset, dim)` for each row, ascending in `q`.
    pub blocks: Vec<Vec<(usize, usize, usize)>>,
    /// Homology and pages are exact in total degrees `<= exact_through`.
    pub exact_through: usize,
}

impl TotalComplex {
    pub fn dim(&self, n: usize) -> usize {
        self.complex.dim(n)
    }

    /// First coordinate of `F^s T_n`.
    fn filtration_offset(&self, n: usize, s: usize) -> usize {
        self.blocks[n].iter().find(|&&(q, _, _)| q >= s).map_or(self.dim(n), |&(_, off, _)| off)
    }
}

/// Total degrees whose homology the bicomplex determines: `n <= min(qmax, maxdeg/2 - 1)`.
pub fn exact_total_degrees(b: &CobarBicomplex) -> Option<usize> {
    let half = b.maxdeg() / 2;
    if half == 0 {
        None
    } else {
        Some(b.qmax.min(half - 1))
    }
}

pub fn total_complex(b: &CobarBicomplex) -> Result<TotalComplex> {
    let exact_through = exact_total_degrees(b).ok_or_else(|| Error::precondition("total complex needs maxdeg >= 2"))?;
    let top_p = b.maxdeg();
    let fld = b.rows[0].field();
    let build = exact_through + 1;
    let rows_known = b.rows.len();
    let mut blocks = Vec::with_capacity(build + 1);
    let mut dims = Vec::with_capacity(build + 1);
    for n in 0..=build {
        let mut off = 0;
        let mut list = Vec::new();
        for q in 0..rows_known {
            if n + q > top_p {
                break;
            }
            let d = b.cell_dim(q, n + q);
            list.push((q, off, d));
            off += d;
        }
        dims.push(off);
        blocks.push(list);
    }
    let mut diffs = Vec::with_capacity(build);
    for n in 1..=build {
        let mut d = Matrix::zeros(fld, dims[n - 1], dims[n]);
        let target: &Vec<(usize, usize, usize)> = &blocks[n - 1];
        for &(q, off, dim) in &blocks[n] {
            if dim == 0 {
                continue;
            }
            let p = n + q;
            if let Some(&(_, toff, tdim)) = target.iter().find(|t| t.0 == q) {
                if tdim > 0 {
                    d.set_block(toff, off, &b.vertical(q, p));
                }
            }
            if let Some(&(_, toff, tdim)) = target.iter().find(|t| t.0 == q + 1) {
                if tdim > 0 {
                    if q >= b.horizontal.len() {
                        return Err(Error::invariant(format!("horizontal map out of row {q} was not built")));
                    }
                    d.set_block(toff, off, b.horizontal[q].at(p));
                }
            }
        }
        diffs.push(d);
    }
    let complex = ChainComplex::new(fld, dims, diffs)?;
    Ok(TotalComplex { complex, blocks, exact_through })
}

/// Homology of the total complex in total degrees `0..=min(through, exact range)`.
pub fn total_homology(b: &CobarBicomplex, through: usize) -> Result<Vec<usize>> {
    let t = total_complex(b)?;
    Ok((0..=through.min(t.exact_through)).map(|n| t.complex.homology_dim(n)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PageCell {
    pub q: usize,
    pub p: usize,
    pub dim: usize,
}

#[derive(Clone, Debug)]
pub struct PageDifferential {
    pub source: (usize, usize),
    pub target: (usize, usize),
    pub matrix: Matrix,
}

#[derive(Clone, Debug)]
pub struct SpectralSequencePage {
    pub page: usize,
    pub filtration: &'static str,
    /// Cells are exact for total degree `p - q <= window`.
    pub window: usize,
    pub cells: Vec<PageCell>,
    pub differentials: Vec<PageDifferential>,
    total: Arc<TotalComplex>,
}

/// Serializable summary of a page: dims per cell and ranks of the differentials.
#[derive(Clone, Debug, Serialize)]
pub struct PageDump {
    pub page: usize,
    pub filtration: &'static str,
    pub window: usize,
    pub cells: Vec<PageCell>,
    pub nonzero_differentials: Vec<((usize, usize), (usize, usize), usize)>,
}

impl SpectralSequencePage {
    pub fn dim(&self, q: usize, p: usize) -> usize {
        self.cells.iter().find(|c| c.q == q && c.p == p).map_or(0, |c| c.dim)
    }

    pub fn total(&self) -> &TotalComplex {
        &self.total
    }

    /// `Σ_q dim E^{q, n+q}` for each total degree in the window.
    pub fn antidiagonal_sums(&self) -> Vec<usize> {
        let mut out = vec![0; self.window + 1];
        for c in &self.cells {
            out[c.p - c.q] += c.dim;
        }
        out
    }

    pub fn differentials_vanish(&self) -> bool {
        self.differentials.iter().all(|d| d.matrix.is_zero())
    }

    pub fn dump(&self) -> PageDump {
        PageDump {
            page: self.page,
            filtration: self.filtration,
            window: self.window,
            cells: self.cells.clone(),
            nonzero_differentials: self
                .differentials
                .iter()
                .filter(|d| !d.matrix.is_zero())
                .map(|d| (d.source, d.target, d.matrix.rank()))
                .collect(),
        }
    }

    pub fn next(&self) -> SpectralSequencePage {
        page(&self.total, self.page + 1)
    }

    /// `d∘d = 0` and the next page is the homology of this one, cell by cell.
    pub fn check(&self) -> Report {
        let mut r = Report::new();
        let find = |src: (usize, usize)| self.differentials.iter().find(|d| d.source == src);
        for d in &self.differentials {
            if let Some(e) = find(d.target) {
                if !e.matrix.mul(&d.matrix).is_zero() {
                    r.fail("d∘d = 0", Some(d.source.1), format!("from cell {:?}", d.source));
                    return r;
                }
            }
        }
        r.pass("d∘d = 0");
        let next = self.next();
        for c in &self.cells {
            // incoming differentials come from total degree n + 1, outside the window at its edge
            if c.p - c.q >= self.window {
                continue;
            }
            let out = find((c.q, c.p)).map_or(0, |d| d.matrix.rank());
            let inc = self.differentials.iter().find(|d| d.target == (c.q, c.p)).map_or(0, |d| d.matrix.rank());
            let expected = c.dim - out - inc;
            if next.dim(c.q, c.p) != expected {
                r.fail(
                    "next page is the homology",
                    Some(c.p),
                    format!("cell ({}, {}): {} vs {}", c.q, c.p, next.dim(c.q, c.p), expected),
                );
                return r;
            }
        }
        r.pass("next page is the homology");
        r
    }
}

/// `{x ∈ F^from T_n : D x ∈ F^to T_{n-1}}` in the coordinates of `T_n`.
fn z_space(t: &TotalComplex, n: usize, from: usize, to: usize) -> Matrix {
    let fld = t.complex.field();
    let dim = t.dim(n);
    let off = t.filtration_offset(n, from);
    if n == 0 {
        return Matrix::identity(fld, dim).select_columns(&(off..dim).collect::<Vec<_>>());
    }
    let cut = t.filtration_offset(n - 1, to);
    let low = t.complex.d_ref(n).block(0, off, cut, dim - off);
    let k = low.kernel_basis();
    Matrix::vstack(fld, k.cols(), &[&Matrix::zeros(fld, off, k.cols()), &k])
}

/// Representatives of `E_r^{s}` in total degree `n` and a basis of what is divided out.
fn cell_basis(t: &TotalComplex, n: usize, s: usize, r: usize) -> (Matrix, Matrix) {
    let fld = t.complex.field();
    let z = z_space(t, n, s, s + r);
    let below = z_space(t, n, s + 1, s + r);
    let boundaries = if n < t.complex.maxdeg() {
        let src = z_space(t, n + 1, (s + 1).saturating_sub(r), s);
        t.complex.d_ref(n + 1).mul(&src)
    } else {
        Matrix::zeros(fld, t.dim(n), 0)
    };
    let denom = Matrix::hstack(fld, t.dim(n), &[&below, &boundaries]).image_basis();
    let reps = z.select_columns(&Matrix::extending_columns(&denom, &z));
    (reps, denom)
}

/// Page `r >= 1` of the spectral sequence of `t`.
pub fn page(t: &Arc<TotalComplex>, r: usize) -> SpectralSequencePage {
    assert!(r >= 1, "pages start at 1");
    let fld = t.complex.field();
    let window = t.exact_through;
    let mut bases = Vec::new();
    let mut cells = Vec::new();
    for n in 0..=window {
        for s in 0..=n {
            let (reps, denom) = cell_basis(t, n, s, r);
            cells.push(PageCell { q: s, p: n + s, dim: reps.cols() });
            bases.push(((n, s), reps, denom));
        }
    }
    let lookup = |n: usize, s: usize| bases.iter().find(|b| b.0 == (n, s));
    let mut differentials = Vec::new();
    for ((n, s), reps, _) in &bases {
        let (n, s) = (*n, *s);
        if n == 0 || s + r > n - 1 {
            continue;
        }
        let (_, treps, tdenom) = lookup(n - 1, s + r).expect("target cell is in the window");
        let images = t.complex.d_ref(n).mul(reps);
        let basis = Matrix::hstack(fld, t.dim(n - 1), &[treps, tdenom]);
        let coeffs = basis.solve_matrix(&images).expect("d_r lands in Z_r of the target");
        differentials.push(PageDifferential {
            source: (s, n + s),
            target: (s + r, n - 1 + s + r),
            matrix: coeffs.block(0, 0, treps.cols(), reps.cols()),
        });
    }
    SpectralSequencePage { page: r, filtration: FILTRATION, window, cells, differentials, total: t.clone() }
}

pub fn e1_page(x: &DGComodule, y: &DGComodule, qmax: usize) -> Result<SpectralSequencePage> {
    x.coalgebra().require_simply_connected()?;
    let b = cobar_bicomplex(x, y, qmax)?;
    Ok(page(&Arc::new(total_complex(&b)?), 1))
}

pub fn e2_page(x: &DGComodule, y: &DGComodule, qmax: usize) -> Result<SpectralSequencePage> {
    Ok(e1_page(x, y, qmax)?.next())
}

/// Turns pages until no differential can be nonzero in the window.
///
/// The returned page index is the first page from which nothing changes.
pub fn run_to_einfty(start: &SpectralSequencePage) -> SpectralSequencePage {
    // d_r leaves the window once r exceeds the largest total degree
    let last = start.page.max(start.window.max(1));
    let mut pages = vec![start.clone()];
    while pages.last().expect("nonempty").page < last {
        let next = pages.last().expect("nonempty").next();
        pages.push(next);
    }
    let mut settled = pages.len() - 1;
    while settled > 0 && pages[settled - 1].differentials_vanish() {
        settled -= 1;
    }
    let mut out = pages.swap_remove(settled);
    out.differentials.retain(|d| !d.matrix.is_zero());
    out
}

/// `H_*(X)` as a comodule over `H_*(C)` via Künneth.
pub fn homology_comodule(x: &DGComodule, hc: &HomologyCoalgebra) -> Result<DGComodule> {
    let c = x.coalgebra();
    let fld = x.field();
    let top = x.maxdeg();
    let xe = x.carrier().with_maxdeg(top + 1);
    let ce = c.carrier().with_maxdeg(top + 1);
    let hs: Vec<_> = (0..=top).map(|n| xe.homology(n)).collect();
    let hdims: Vec<usize> = hs.iter().map(|h| h.dim).collect();
    let reps = ChainMap::new(hs.iter().map(|h| h.representatives.clone()).collect());
    let hcd = hc.coalgebra.dims().to_vec();
    let kunneth = reps.tensor(&hc.representatives, &hdims, x.dims(), &hcd, c.dims(), fld, top);
    let xc = xe.tensor(&ce)?;
    let mut coaction = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let b = xc.boundaries(n);
        let basis = Matrix::hstack(fld, b.rows(), &[kunneth.at(n), &b]);
        let image = x.coaction(n).mul(&hs[n].representatives);
        let coeffs = basis
            .solve_matrix(&image)
            .ok_or_else(|| Error::invariant(format!("Künneth decomposition failed in degree {n}")))?;
        coaction.push(coeffs.block(0, 0, kunneth.at(n).cols(), hdims[n]));
    }
    DGComodule::new(Arc::new(hc.coalgebra.clone()), ChainComplex::from_dims(fld, hdims), coaction)
}

/// The comparisons that make the spectral sequence trustworthy on a pair:
/// `E¹` against the cobar construction on homology, `E²` against `CoTor`
/// over `H_*(C)`, page consistency, and `E^∞` against the total homology.
pub fn emss_check(x: &DGComodule, y: &DGComodule, qmax: usize) -> Result<Report> {
    let mut r = Report::new();
    let c = x.coalgebra();
    let hc = c.homology_coalgebra()?;
    let hx = homology_comodule(x, &hc)?;
    let hy = homology_comodule(y, &hc)?;
    let hb = cobar_bicomplex(&hx, &hy, qmax)?;
    r.absorb("homology comodules", {
        let mut v = Report::new();
        v.absorb("left", hx.validate());
        v.absorb("right", hy.validate());
        v
    });

    let e1 = e1_page(x, y, qmax)?;
    cell_comparison(&mut r, "E¹ = cobar on homology", &e1, |q, p| hb.cell_dim(q, p));
    let e2 = e1.next();
    let table: Vec<Vec<usize>> = (0..=qmax).map(|q| hb.row_cohomology(q)).collect();
    cell_comparison(&mut r, "E² = CoTor over H(C)", &e2, |q, p| table.get(q).map_or(0, |row| row[p]));
    r.absorb("E¹", e1.check());
    r.absorb("E²", e2.check());
    let inf = run_to_einfty(&e2);
    let sums = inf.antidiagonal_sums();
    let total: Vec<usize> = (0..=inf.window).map(|n| inf.total().complex.homology_dim(n)).collect();
    match (0..sums.len()).find(|&n| sums[n] != total[n]) {
        None => r.pass("E^∞ antidiagonals = total homology"),
        Some(n) => r.fail("E^∞ antidiagonals = total homology", Some(n), format!("{} vs {}", sums[n], total[n])),
    }
    Ok(r)
}

fn cell_comparison(r: &mut Report, name: &str, page: &SpectralSequencePage, expected: impl Fn(usize, usize) -> usize) {
    for c in &page.cells {
        let e = expected(c.q, c.p);
        if c.dim != e {
            r.fail(name, Some(c.p), format!("cell ({}, {}): {} vs {}", c.q, c.p, c.dim, e));
            return;
        }
    }
    r.pass(name);
}

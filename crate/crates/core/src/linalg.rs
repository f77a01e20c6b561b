//! Exact dense linear algebra over a prime field GF(p) or the rationals.
//!
//! Every map between graded pieces in this crate is a [`Matrix`]. Entries are
//! stored in canonical form (residues in `0..p`, rationals in lowest terms), so
//! structural equality of matrices is equality of linear maps.
//!
//! Elimination always pivots on the first nonzero entry in column order. All
//! derived choices (kernel bases, sections, complements) are therefore
//! reproducible bit for bit.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// The ground field: `characteristic == 0` is the rationals, otherwise GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Field {
    characteristic: u32,
}

impl Field {
    pub fn new(characteristic: u32) -> Result<Self> {
        if characteristic == 0 || is_prime(characteristic) {
            Ok(Self { characteristic })
        } else {
            Err(Error::InvalidField(characteristic))
        }
    }

    pub fn gf(p: u32) -> Self {
        Self::new(p).expect("characteristic must be prime")
    }

    pub fn rationals() -> Self {
        Self { characteristic: 0 }
    }

    pub fn characteristic(self) -> u32 {
        self.characteristic
    }

    pub fn is_rational(self) -> bool {
        self.characteristic == 0
    }

    /// `(-1)^k` as a field element, as an integer.
    pub fn sign(k: usize) -> i64 {
        if k % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.characteristic == 0 {
            write!(f, "Q")
        } else {
            write!(f, "GF({})", self.characteristic)
        }
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A single field element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Mod(u32),
    Rational(BigRational),
}

impl Scalar {
    pub fn from_i64(field: Field, v: i64) -> Self {
        if field.is_rational() {
            Scalar::Rational(BigRational::from_integer(BigInt::from(v)))
        } else {
            let p = field.characteristic as i64;
            Scalar::Mod(v.rem_euclid(p) as u32)
        }
    }

    pub fn from_ratio(field: Field, num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::Parse("zero denominator".into()));
        }
        if field.is_rational() {
            Ok(Scalar::Rational(BigRational::new(num.into(), den.into())))
        } else {
            let ar = ModP(field.characteristic);
            let d = Scalar::from_i64(field, den);
            let Scalar::Mod(d) = d else { unreachable!() };
            if d == 0 {
                return Err(Error::Parse(format!("denominator {den} vanishes in {field}")));
            }
            let Scalar::Mod(n) = Scalar::from_i64(field, num) else { unreachable!() };
            Ok(Scalar::Mod(ar.mul(&n, &ar.inv(&d))))
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Mod(v) => *v == 0,
            Scalar::Rational(q) => q.is_zero(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Mod(v) => write!(f, "{v}"),
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
        }
    }
}

/// Field arithmetic used by the generic elimination kernels.
trait Arith {
    type E: Clone + PartialEq;
    fn zero(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Self::E;
    fn wrap(v: Vec<Self::E>) -> Entries;
}

struct ModP(u32);

impl Arith for ModP {
    type E = u32;
    fn zero(&self) -> u32 {
        0
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + *b as u64) % self.0 as u64) as u32
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + self.0 as u64 - *b as u64) % self.0 as u64) as u32
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.0 as u64) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.0 - a
        }
    }
    fn inv(&self, a: &u32) -> u32 {
        // Fermat: a^(p-2)
        let p = self.0 as u64;
        let mut base = *a as u64 % p;
        let mut exp = p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc as u32
    }
    fn wrap(v: Vec<u32>) -> Entries {
        Entries::Mod(v)
    }
}

struct Rat;

impl Arith for Rat {
    type E = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn wrap(v: Vec<BigRational>) -> Entries {
        Entries::Rational(v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Entries {
    Mod(Vec<u32>),
    Rational(Vec<BigRational>),
}

/// Runs `$body` with `$ar` bound to the arithmetic context and `$v` to the
/// entry vector of `$m`.
macro_rules! with_entries {
    ($m:expr, |$ar:ident, $v:ident| $body:expr) => {
        match &$m.data {
            Entries::Mod($v) => {
                let $ar = ModP($m.field.characteristic);
                $body
            }
            Entries::Rational($v) => {
                let $ar = Rat;
                $body
            }
        }
    };
}

macro_rules! with_pair {
    ($a:expr, $b:expr, |$ar:ident, $u:ident, $v:ident| $body:expr) => {{
        assert_eq!($a.field, $b.field, "field mismatch between matrices");
        match (&$a.data, &$b.data) {
            (Entries::Mod($u), Entries::Mod($v)) => {
                let $ar = ModP($a.field.characteristic);
                $body
            }
            (Entries::Rational($u), Entries::Rational($v)) => {
                let $ar = Rat;
                $body
            }
            _ => unreachable!("entry storage disagrees with field"),
        }
    }};
}

/// Dense row-major matrix with exact entries.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Entries,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix[{}; {}x{}]", self.field, self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "\n  [")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

fn zeros_vec<A: Arith>(ar: &A, n: usize) -> Vec<A::E> {
    vec![ar.zero(); n]
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        let data = if field.is_rational() {
            Entries::Rational(vec![BigRational::zero(); rows * cols])
        } else {
            Entries::Mod(vec![0; rows * cols])
        };
        Self { field, rows, cols, data }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set_i64(i, i, 1);
        }
        m
    }

    /// Builds a matrix from row-major integer entries, reducing into the field.
    pub fn from_i64(field: Field, rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count does not match shape");
        let mut m = Self::zeros(field, rows, cols);
        for (k, &v) in entries.iter().enumerate() {
            m.set_i64(k / cols.max(1), k % cols.max(1), v);
        }
        m
    }

    pub fn from_rows(field: Field, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let flat: Vec<i64> = rows.iter().flat_map(|r| r.iter().copied()).collect();
        Self::from_i64(field, rows.len(), cols, &flat)
    }

    pub fn from_scalars(field: Field, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "expected {} entries for a {rows}x{cols} matrix, found {}",
                rows * cols,
                entries.len()
            )));
        }
        let data = if field.is_rational() {
            let mut v = Vec::with_capacity(entries.len());
            for s in entries {
                match s {
                    Scalar::Rational(q) => v.push(q),
                    Scalar::Mod(_) => return Err(Error::FieldMismatch),
                }
            }
            Entries::Rational(v)
        } else {
            let mut v = Vec::with_capacity(entries.len());
            for s in entries {
                match s {
                    Scalar::Mod(x) if x < field.characteristic => v.push(x),
                    _ => return Err(Error::FieldMismatch),
                }
            }
            Entries::Mod(v)
        };
        Ok(Self { field, rows, cols, data })
    }

    /// Single-column matrix with a 1 in position `i`.
    pub fn unit_column(field: Field, n: usize, i: usize) -> Self {
        let mut m = Self::zeros(field, n, 1);
        m.set_i64(i, 0, 1);
        m
    }

    /// Permutation matrix sending basis vector `j` to `perm[j]`, with optional signs.
    pub fn signed_permutation(field: Field, perm: &[usize], signs: &[i64]) -> Self {
        let n = perm.len();
        let mut m = Self::zeros(field, n, n);
        for (j, &i) in perm.iter().enumerate() {
            m.set_i64(i, j, signs.get(j).copied().unwrap_or(1));
        }
        m
    }

    pub fn random<R: Rng + ?Sized>(field: Field, rows: usize, cols: usize, rng: &mut R) -> Self {
        let mut m = Self::zeros(field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                let v = if field.is_rational() {
                    rng.gen_range(-3..=3)
                } else {
                    rng.gen_range(0..field.characteristic as i64)
                };
                m.set_i64(r, c, v);
            }
        }
        m
    }

    /// Random invertible `n x n` matrix (rejection sampling).
    pub fn random_invertible<R: Rng + ?Sized>(field: Field, n: usize, rng: &mut R) -> Self {
        loop {
            let m = Self::random(field, n, n, rng);
            if m.rank() == n {
                return m;
            }
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        let k = r * self.cols + c;
        match &self.data {
            Entries::Mod(v) => Scalar::Mod(v[k]),
            Entries::Rational(v) => Scalar::Rational(v[k].clone()),
        }
    }

    pub fn is_entry_zero(&self, r: usize, c: usize) -> bool {
        let k = r * self.cols + c;
        match &self.data {
            Entries::Mod(v) => v[k] == 0,
            Entries::Rational(v) => v[k].is_zero(),
        }
    }

    pub fn set(&mut self, r: usize, c: usize, s: Scalar) {
        let k = r * self.cols + c;
        match (&mut self.data, s) {
            (Entries::Mod(v), Scalar::Mod(x)) => v[k] = x % self.field.characteristic,
            (Entries::Rational(v), Scalar::Rational(q)) => v[k] = q,
            _ => panic!("scalar does not belong to {}", self.field),
        }
    }

    pub fn set_i64(&mut self, r: usize, c: usize, x: i64) {
        let s = Scalar::from_i64(self.field, x);
        self.set(r, c, s);
    }

    /// Adds `x` (an integer) to entry `(r, c)`.
    pub fn add_i64(&mut self, r: usize, c: usize, x: i64) {
        let k = r * self.cols + c;
        match &mut self.data {
            Entries::Mod(v) => {
                let p = self.field.characteristic as i64;
                v[k] = ((v[k] as i64 + x).rem_euclid(p)) as u32;
            }
            Entries::Rational(v) => v[k] += BigRational::from_integer(x.into()),
        }
    }

    /// Adds `k * s` to entry `(r, c)`.
    pub fn add_scaled(&mut self, r: usize, c: usize, s: &Scalar, k: i64) {
        let idx = r * self.cols + c;
        match (&mut self.data, s) {
            (Entries::Mod(v), Scalar::Mod(x)) => {
                let p = self.field.characteristic as i64;
                v[idx] = ((v[idx] as i64 + k.rem_euclid(p) * *x as i64).rem_euclid(p)) as u32;
            }
            (Entries::Rational(v), Scalar::Rational(q)) => v[idx] += q * BigRational::from_integer(k.into()),
            _ => panic!("scalar does not belong to {}", self.field),
        }
    }

    pub fn is_zero(&self) -> bool {
        with_entries!(self, |ar, v| v.iter().all(|x| ar.is_zero(x)))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.field, self.rows)
    }

    pub fn transpose(&self) -> Self {
        with_entries!(self, |ar, v| {
            let mut out = zeros_vec(&ar, v.len());
            for r in 0..self.rows {
                for c in 0..self.cols {
                    out[c * self.rows + r] = v[r * self.cols + c].clone();
                }
            }
            Self { field: self.field, rows: self.cols, cols: self.rows, data: wrap(&ar, out) }
        })
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, other.rows,
            "cannot multiply {}x{} by {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let (n, k, m) = (self.rows, self.cols, other.cols);
        with_pair!(self, other, |ar, a, b| {
            let mut out = zeros_vec(&ar, n * m);
            for i in 0..n {
                for t in 0..k {
                    let x = &a[i * k + t];
                    if ar.is_zero(x) {
                        continue;
                    }
                    for j in 0..m {
                        let y = &b[t * m + j];
                        if !ar.is_zero(y) {
                            out[i * m + j] = ar.add(&out[i * m + j], &ar.mul(x, y));
                        }
                    }
                }
            }
            Matrix { field: self.field, rows: n, cols: m, data: wrap(&ar, out) }
        })
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "cannot add matrices of different shapes");
        with_pair!(self, other, |ar, a, b| {
            let out = a.iter().zip(b.iter()).map(|(x, y)| ar.add(x, y)).collect();
            Matrix { field: self.field, rows: self.rows, cols: self.cols, data: wrap(&ar, out) }
        })
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "cannot subtract matrices of different shapes");
        with_pair!(self, other, |ar, a, b| {
            let out = a.iter().zip(b.iter()).map(|(x, y)| ar.sub(x, y)).collect();
            Matrix { field: self.field, rows: self.rows, cols: self.cols, data: wrap(&ar, out) }
        })
    }

    pub fn neg(&self) -> Matrix {
        with_entries!(self, |ar, v| {
            let out = v.iter().map(|x| ar.neg(x)).collect();
            Matrix { field: self.field, rows: self.rows, cols: self.cols, data: wrap(&ar, out) }
        })
    }

    pub fn scale_i64(&self, s: i64) -> Matrix {
        let c = Scalar::from_i64(self.field, s);
        match (&self.data, c) {
            (Entries::Mod(v), Scalar::Mod(s)) => {
                let ar = ModP(self.field.characteristic);
                Matrix { data: Entries::Mod(v.iter().map(|x| ar.mul(x, &s)).collect()), ..self.clone() }
            }
            (Entries::Rational(v), Scalar::Rational(s)) => {
                Matrix { data: Entries::Rational(v.iter().map(|x| x * &s).collect()), ..self.clone() }
            }
            _ => unreachable!(),
        }
    }

    /// Kronecker product; with row-major tensor bases this is the tensor of
    /// two linear maps.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (r1, c1, r2, c2) = (self.rows, self.cols, other.rows, other.cols);
        with_pair!(self, other, |ar, a, b| {
            let rows = r1 * r2;
            let cols = c1 * c2;
            let mut out = zeros_vec(&ar, rows * cols);
            for i in 0..r1 {
                for j in 0..c1 {
                    let x = &a[i * c1 + j];
                    if ar.is_zero(x) {
                        continue;
                    }
                    for k in 0..r2 {
                        for l in 0..c2 {
                            let y = &b[k * c2 + l];
                            if !ar.is_zero(y) {
                                out[(i * r2 + k) * cols + j * c2 + l] = ar.mul(x, y);
                            }
                        }
                    }
                }
            }
            Matrix { field: self.field, rows, cols, data: wrap(&ar, out) }
        })
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols, "block out of range");
        let cols = self.cols;
        match (&mut self.data, &block.data) {
            (Entries::Mod(dst), Entries::Mod(src)) => {
                for r in 0..block.rows {
                    for c in 0..block.cols {
                        dst[(r0 + r) * cols + c0 + c] = src[r * block.cols + c];
                    }
                }
            }
            (Entries::Rational(dst), Entries::Rational(src)) => {
                for r in 0..block.rows {
                    for c in 0..block.cols {
                        dst[(r0 + r) * cols + c0 + c] = src[r * block.cols + c].clone();
                    }
                }
            }
            _ => panic!("field mismatch between matrices"),
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols, "block out of range");
        with_entries!(self, |ar, v| {
            let mut out = Vec::with_capacity(rows * cols);
            for r in 0..rows {
                for c in 0..cols {
                    out.push(v[(r0 + r) * self.cols + c0 + c].clone());
                }
            }
            Matrix { field: self.field, rows, cols, data: wrap(&ar, out) }
        })
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        with_entries!(self, |ar, v| {
            let mut out = Vec::with_capacity(self.rows * idx.len());
            for r in 0..self.rows {
                for &c in idx {
                    out.push(v[r * self.cols + c].clone());
                }
            }
            Matrix { field: self.field, rows: self.rows, cols: idx.len(), data: wrap(&ar, out) }
        })
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        with_entries!(self, |ar, v| {
            let mut out = Vec::with_capacity(self.cols * idx.len());
            for &r in idx {
                out.extend(v[r * self.cols..(r + 1) * self.cols].iter().cloned());
            }
            Matrix { field: self.field, rows: idx.len(), cols: self.cols, data: wrap(&ar, out) }
        })
    }

    pub fn column(&self, c: usize) -> Matrix {
        self.select_columns(&[c])
    }

    /// Horizontal concatenation; all parts must have `rows` rows.
    pub fn hstack(field: Field, rows: usize, parts: &[&Matrix]) -> Matrix {
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut c0 = 0;
        for m in parts {
            assert_eq!(m.rows, rows, "hstack row mismatch");
            out.set_block(0, c0, m);
            c0 += m.cols;
        }
        out
    }

    /// Vertical concatenation; all parts must have `cols` columns.
    pub fn vstack(field: Field, cols: usize, parts: &[&Matrix]) -> Matrix {
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut r0 = 0;
        for m in parts {
            assert_eq!(m.cols, cols, "vstack column mismatch");
            out.set_block(r0, 0, m);
            r0 += m.rows;
        }
        out
    }

    pub fn block_diag(field: Field, parts: &[&Matrix]) -> Matrix {
        let rows = parts.iter().map(|m| m.rows).sum();
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for m in parts {
            out.set_block(r0, c0, m);
            r0 += m.rows;
            c0 += m.cols;
        }
        out
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        with_entries!(self, |ar, v| {
            let mut a = v.clone();
            let pivots = rref_in_place(&ar, &mut a, self.rows, self.cols);
            (Matrix { field: self.field, rows: self.rows, cols: self.cols, data: wrap(&ar, a) }, pivots)
        })
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Columns form a basis of the null space, one per free column of the RREF.
    pub fn kernel_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Matrix::zeros(self.field, self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            k.set_i64(f, j, 1);
            for (i, &p) in pivots.iter().enumerate() {
                if !r.is_entry_zero(i, f) {
                    let mut e = r.get(i, f);
                    e = negate(self.field, e);
                    k.set(p, j, e);
                }
            }
        }
        k
    }

    /// A basis of the column space: the pivot columns of `self`.
    pub fn image_basis(&self) -> Matrix {
        let (_, pivots) = self.rref();
        self.select_columns(&pivots)
    }

    /// Solves `self * x = b` for a matrix right-hand side; `None` when inconsistent.
    ///
    /// Free variables are set to zero, so the answer is deterministic.
    pub fn solve_matrix(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, b.rows, "right-hand side has the wrong number of rows");
        let aug = Matrix::hstack(self.field, self.rows, &[self, b]);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.field, self.cols, b.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                if !r.is_entry_zero(i, self.cols + j) {
                    x.set(p, j, r.get(i, self.cols + j));
                }
            }
        }
        Some(x)
    }

    /// Solves `self * x = b` for a single column `b`.
    pub fn solve(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(b.cols, 1, "solve expects a column");
        self.solve_matrix(b)
    }

    /// A right inverse `s` with `self * s = id`; requires full row rank.
    pub fn section_of_surjection(&self) -> Result<Matrix> {
        if self.rank() != self.rows {
            return Err(Error::NotSurjective { rows: self.rows, rank: self.rank() });
        }
        Ok(self.solve_matrix(&Matrix::identity(self.field, self.rows)).expect("full row rank system is consistent"))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols || self.rank() != self.rows {
            return None;
        }
        self.solve_matrix(&Matrix::identity(self.field, self.rows))
    }

    /// Extends the (independent) columns of `self` to a basis of the ambient
    /// space by appending standard basis vectors; returns only the appended part.
    pub fn complement_columns(&self) -> Matrix {
        let (_, pivots) = self.transpose().rref();
        let extra: Vec<usize> = (0..self.rows).filter(|r| !pivots.contains(r)).collect();
        Matrix::identity(self.field, self.rows).select_columns(&extra)
    }

    /// Indices of columns of `candidates` that extend the span of `base`,
    /// scanning left to right.
    pub fn extending_columns(base: &Matrix, candidates: &Matrix) -> Vec<usize> {
        let b = base.rank();
        let joined = Matrix::hstack(base.field, base.rows, &[base, candidates]);
        let (_, pivots) = joined.rref();
        let base_pivots = pivots.iter().filter(|&&p| p < base.cols).count();
        debug_assert_eq!(base_pivots, b);
        pivots.into_iter().filter(|&p| p >= base.cols).map(|p| p - base.cols).collect()
    }

    /// Whether the column spans of two matrices coincide.
    pub fn same_column_span(a: &Matrix, b: &Matrix) -> bool {
        let ra = a.rank();
        ra == b.rank() && Matrix::hstack(a.field, a.rows, &[a, b]).rank() == ra
    }
}

fn negate(field: Field, s: Scalar) -> Scalar {
    match s {
        Scalar::Mod(v) => Scalar::Mod(ModP(field.characteristic).neg(&v)),
        Scalar::Rational(q) => Scalar::Rational(-q),
    }
}

fn wrap<A: Arith>(_: &A, v: Vec<A::E>) -> Entries {
    A::wrap(v)
}

fn rref_in_place<A: Arith>(ar: &A, a: &mut [A::E], rows: usize, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(p) = (row..rows).find(|&r| !ar.is_zero(&a[r * cols + col])) else {
            continue;
        };
        if p != row {
            for c in 0..cols {
                a.swap(p * cols + c, row * cols + c);
            }
        }
        let inv = ar.inv(&a[row * cols + col]);
        for c in col..cols {
            a[row * cols + c] = ar.mul(&a[row * cols + c], &inv);
        }
        for r in 0..rows {
            if r == row {
                continue;
            }
            let factor = a[r * cols + col].clone();
            if ar.is_zero(&factor) {
                continue;
            }
            for c in col..cols {
                let t = ar.mul(&factor, &a[row * cols + c]);
                a[r * cols + c] = ar.sub(&a[r * cols + c], &t);
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Formats a rational for serialization: `"a"` or `"a/b"`.
pub(crate) fn rational_to_string(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(BigRational::from_integer(n))
    }
}

//! Exact rational scalars, sparse matrices and canonical subspaces.
//!
//! Every subspace is stored as a fully reduced row-echelon basis with unit
//! pivots, so two subspaces are equal exactly when their bases are equal.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub type Rational = BigRational;

/// Sparse vector: coordinate index to nonzero value.
pub type SparseVec = BTreeMap<usize, Rational>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("cannot parse rational {0:?}")]
    ParseRational(String),
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// "a/b" in lowest terms, or "a" for integers.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

pub fn parse_rational(s: &str) -> Result<Rational, LinalgError> {
    let t = s.trim();
    let bad = || LinalgError::ParseRational(s.to_string());
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(t.parse().map_err(|_| bad())?)),
    }
}

/// `v += c * w`, dropping entries that cancel.
pub fn axpy(v: &mut SparseVec, c: &Rational, w: &SparseVec) {
    if c.is_zero() {
        return;
    }
    for (&k, x) in w {
        let delta = c * x;
        match v.get_mut(&k) {
            Some(e) => {
                *e += delta;
                if e.is_zero() {
                    v.remove(&k);
                }
            }
            None => {
                v.insert(k, delta);
            }
        }
    }
}

pub fn scale(v: &mut SparseVec, c: &Rational) {
    if c.is_zero() {
        v.clear();
    } else {
        for x in v.values_mut() {
            *x *= c;
        }
    }
}

pub fn dense_to_sparse(v: &[Rational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn sparse_to_dense(v: &SparseVec, n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n];
    for (&i, x) in v {
        out[i] = x.clone();
    }
    out
}

pub fn unit(i: usize) -> SparseVec {
    let mut v = SparseVec::new();
    v.insert(i, Rational::one());
    v
}

/// Sparse row-major matrix. Zero entries are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![SparseVec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_dense(rows: usize, cols: usize, entries: &[Rational]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, entries[r * cols + c].clone());
            }
        }
        m
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols);
            for (c, &x) in row.iter().enumerate() {
                m.set(r, c, int(x));
            }
        }
        m
    }

    /// Matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(rows: usize, cols: &[SparseVec]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (&i, x) in col {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<SparseVec>) -> Self {
        debug_assert!(rows.iter().all(|r| r.keys().all(|&k| k < cols)));
        Matrix {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &SparseVec {
        &self.data[r]
    }

    pub fn row_vectors(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.data[r].get(&c).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, r: usize, c: usize, x: Rational) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        if x.is_zero() {
            self.data[r].remove(&c);
        } else {
            self.data[r].insert(c, x);
        }
    }

    pub fn add_to(&mut self, r: usize, c: usize, x: &Rational) {
        let cur = self.get(r, c);
        self.set(r, c, cur + x);
    }

    /// Entries in lexicographic (row, col) order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(&c, x)| (r, c, x)))
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_empty())
    }

    pub fn column(&self, c: usize) -> SparseVec {
        let mut v = SparseVec::new();
        for (r, row) in self.data.iter().enumerate() {
            if let Some(x) = row.get(&c) {
                v.insert(r, x.clone());
            }
        }
        v
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for (r, c, x) in self.entries() {
            t.data[c].insert(r, x.clone());
        }
        t
    }

    pub fn scaled(&self, c: &Rational) -> Matrix {
        let mut m = self.clone();
        for row in &mut m.data {
            scale(row, c);
        }
        m
    }

    pub fn neg(&self) -> Matrix {
        self.scaled(&int(-1))
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.combine(other, &Rational::one())
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.combine(other, &int(-1))
    }

    /// `self + c * other`
    pub fn combine(&self, other: &Matrix, c: &Rational) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut m = self.clone();
        for (row, orow) in m.data.iter_mut().zip(&other.data) {
            axpy(row, c, orow);
        }
        m
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for (r, row) in self.data.iter().enumerate() {
            let mut acc = SparseVec::new();
            for (&k, x) in row {
                axpy(&mut acc, x, &other.data[k]);
            }
            out.data[r] = acc;
        }
        out
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (r, row) in self.data.iter().enumerate() {
            let mut s = Rational::zero();
            for (&k, x) in row {
                if let Some(y) = v.get(&k) {
                    s += x * y;
                }
            }
            if !s.is_zero() {
                out.insert(r, s);
            }
        }
        out
    }

    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn anticommutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).add(&other.mul(self))
    }

    pub fn trace(&self) -> Rational {
        let mut t = Rational::zero();
        for (i, row) in self.data.iter().enumerate() {
            if let Some(x) = row.get(&i) {
                t += x;
            }
        }
        t
    }

    pub fn is_nilpotent(&self) -> bool {
        assert_eq!(self.rows, self.cols);
        let mut p = self.clone();
        // M^n = 0 for an n x n nilpotent; squaring reaches an exponent >= n quickly.
        let mut e = 1;
        while e < self.rows {
            p = p.mul(&p);
            e *= 2;
        }
        p.is_zero()
    }

    pub fn block_diag(blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            m.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    /// Kronecker product; index `(i, k)` of the result is `i * other.dim + k`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for (i, j, x) in self.entries() {
            for (k, l, y) in other.entries() {
                m.set(i * other.rows + k, j * other.cols + l, x * y);
            }
        }
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Matrix) {
        for (r, c, x) in b.entries() {
            self.set(r0 + r, c0 + c, x.clone());
        }
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), cols.len());
        for r in rows.clone() {
            for (&c, x) in self.data[r].range(cols.clone()) {
                m.set(r - rows.start, c - cols.start, x.clone());
            }
        }
        m
    }

    pub fn rank(&self) -> usize {
        rref(self).rank
    }

    /// Conjugate by an invertible `p`: returns `p * self * p^{-1}`.
    pub fn conjugate(&self, p: &Matrix, p_inv: &Matrix) -> Matrix {
        p.mul(self).mul(p_inv)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Subspace::zero(2 * n);
        for (r, row) in self.data.iter().enumerate() {
            let mut v = row.clone();
            v.insert(n + r, Rational::one());
            aug.insert(v);
        }
        if aug.pivots().iter().take(n).enumerate().any(|(i, &p)| p != i) || aug.dim() < n {
            return None;
        }
        // Reduced [A | I] is [I | A^{-1}].
        let mut inv = Matrix::zeros(n, n);
        for (i, row) in aug.basis().iter().enumerate().take(n) {
            for (&c, x) in row.range(n..) {
                inv.set(i, c - n, x.clone());
            }
        }
        Some(inv)
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        struct Entries<'a>(&'a Matrix);
        impl Serialize for Entries<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.nnz()))?;
                for (r, c, x) in self.0.entries() {
                    seq.serialize_element(&(r, c, format_rational(x)))?;
                }
                seq.end()
            }
        }
        let mut st = s.serialize_struct("Matrix", 3)?;
        st.serialize_field("rows", &self.rows)?;
        st.serialize_field("cols", &self.cols)?;
        st.serialize_field("entries", &Entries(self))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            rows: usize,
            cols: usize,
            entries: Vec<(usize, usize, String)>,
        }
        let raw = Raw::deserialize(d)?;
        let mut m = Matrix::zeros(raw.rows, raw.cols);
        for (r, c, x) in raw.entries {
            if r >= raw.rows || c >= raw.cols {
                return Err(serde::de::Error::custom("matrix entry out of range"));
            }
            let q = parse_rational(&x).map_err(serde::de::Error::custom)?;
            m.set(r, c, q);
        }
        Ok(m)
    }
}

/// A linear subspace of `Q^n`, held as a canonical reduced row-echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: (0..ambient).map(unit).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span<I: IntoIterator<Item = SparseVec>>(ambient: usize, vecs: I) -> Self {
        let mut s = Subspace::zero(ambient);
        for v in vecs {
            s.insert(v);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not used as pivots, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut it = self.pivots.iter().peekable();
        (0..self.ambient)
            .filter(|c| {
                if it.peek() == Some(&c) {
                    it.next();
                    false
                } else {
                    true
                }
            })
            .collect()
    }

    /// Subtract multiples of basis rows so `v` vanishes at every pivot.
    pub fn reduce(&self, v: &mut SparseVec) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if let Some(c) = v.get(&p).cloned() {
                axpy(v, &-c, row);
            }
        }
    }

    pub fn contains_vec(&self, v: &SparseVec) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_empty()
    }

    /// Adds `v` to the span. Returns whether the dimension grew.
    pub fn insert(&mut self, mut v: SparseVec) -> bool {
        debug_assert!(v.keys().all(|&k| k < self.ambient));
        self.reduce(&mut v);
        let Some((&p, lead)) = v.iter().next() else {
            return false;
        };
        let inv = lead.recip();
        scale(&mut v, &inv);
        for row in &mut self.rows {
            if let Some(c) = row.get(&p).cloned() {
                axpy(row, &-c, &v);
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, v);
        true
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_ambient(other)?;
        Ok(other.rows.iter().all(|v| self.contains_vec(v)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        let mut s = self.clone();
        for v in &other.rows {
            s.insert(v.clone());
        }
        Ok(s)
    }

    /// Zassenhaus: reduce rows `[a | a]` and `[b | 0]`; rows with vanishing left half
    /// carry the intersection in their right half.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        let n = self.ambient;
        let mut z = Subspace::zero(2 * n);
        for v in &self.rows {
            let mut w = v.clone();
            for (&k, x) in v {
                w.insert(n + k, x.clone());
            }
            z.insert(w);
        }
        for v in &other.rows {
            z.insert(v.clone());
        }
        let mut out = Subspace::zero(n);
        for (row, &p) in z.rows.iter().zip(&z.pivots) {
            if p >= n {
                out.insert(row.iter().map(|(&k, x)| (k - n, x.clone())).collect());
            }
        }
        Ok(out)
    }

    /// Coordinates of `v` in the quotient `Q^n / self`, indexed by `free_columns()`.
    pub fn quotient_coords(&self, v: &SparseVec) -> SparseVec {
        let mut w = v.clone();
        self.reduce(&mut w);
        w
    }

    pub fn image(&self, m: &Matrix) -> Subspace {
        Subspace::span(m.rows(), self.rows.iter().map(|v| m.mul_vec(v)))
    }

    pub fn is_invariant_under(&self, m: &Matrix) -> bool {
        self.rows.iter().all(|v| self.contains_vec(&m.mul_vec(v)))
    }
}

/// Result of row reduction.
#[derive(Clone, Debug)]
pub struct Rref {
    pub rank: usize,
    pub row_space: Subspace,
    pub null_space: Subspace,
}

pub fn rref(m: &Matrix) -> Rref {
    let row_space = Subspace::span(m.cols(), m.row_vectors().iter().cloned());
    let null_space = kernel_of_rref(&row_space);
    Rref {
        rank: row_space.dim(),
        row_space,
        null_space,
    }
}

/// Null space of the linear map whose row space is `rs`.
pub fn kernel_of_rref(rs: &Subspace) -> Subspace {
    let mut null = Subspace::zero(rs.ambient());
    for f in rs.free_columns() {
        let mut v = unit(f);
        for (row, &p) in rs.basis().iter().zip(rs.pivots()) {
            if let Some(x) = row.get(&f) {
                v.insert(p, -x);
            }
        }
        null.insert(v);
    }
    null
}

/// Kernel of `m` as a subspace of its column space.
pub fn kernel(m: &Matrix) -> Subspace {
    rref(m).null_space
}

/// Canonical solution of `a x = b` with free variables set to zero, if consistent.
pub fn solve(a: &Matrix, b: &[Rational]) -> Result<Option<Vec<Rational>>, LinalgError> {
    if b.len() != a.rows() {
        return Err(LinalgError::Shape(format!(
            "rhs length {} for {} rows",
            b.len(),
            a.rows()
        )));
    }
    let n = a.cols();
    let mut aug = Subspace::zero(n + 1);
    for (row, rhs) in a.row_vectors().iter().zip(b) {
        let mut v = row.clone();
        if !rhs.is_zero() {
            v.insert(n, rhs.clone());
        }
        aug.insert(v);
    }
    if aug.pivots().last() == Some(&n) {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); n];
    for (row, &p) in aug.basis().iter().zip(aug.pivots()) {
        if let Some(v) = row.get(&n) {
            x[p] = v.clone();
        }
    }
    Ok(Some(x))
}

/// Determinant by fraction-free elimination on a dense copy.
pub fn determinant(m: &Matrix) -> Rational {
    assert_eq!(m.rows(), m.cols());
    let n = m.rows();
    let mut a: Vec<Vec<Rational>> = (0..n).map(|r| sparse_to_dense(m.row(r), n)).collect();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let piv = a[c][c].clone();
        det *= &piv;
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] / &piv;
            for k in c..n {
                let t = &f * &a[c][k];
                a[r][k] -= t;
            }
        }
    }
    det
}

pub fn is_integer(q: &Rational) -> bool {
    q.is_integer()
}

pub fn abs(q: &Rational) -> Rational {
    q.abs()
}

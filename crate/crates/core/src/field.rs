//! Exact linear algebra over a prime field F_p.
//!
//! Every other module sits on top of the [`Matrix`] type defined here. Entries
//! are stored reduced to `[0, p)`; all elimination uses the canonical pivot
//! order (leftmost nonzero column, topmost row), so reduced forms and the
//! bases derived from them are deterministic.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default characteristic used throughout.
pub const DEFAULT_PRIME: u32 = 32003;

/// A prime field F_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    p: u32,
}

impl FieldSpec {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::input(format!("{p} is not a prime")));
        }
        if p > 46_337 {
            // products of two residues must fit comfortably in u64 sums
            return Err(Error::input(format!("prime {p} is too large (max 46337)")));
        }
        Ok(FieldSpec { p })
    }

    pub fn p(&self) -> u32 {
        self.p
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec { p: DEFAULT_PRIME }
    }
}

pub fn is_prime(n: u32) -> bool {
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

#[inline]
pub fn add(p: u32, a: u32, b: u32) -> u32 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub(p: u32, a: u32, b: u32) -> u32 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub fn mul(p: u32, a: u32, b: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

#[inline]
pub fn neg(p: u32, a: u32) -> u32 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

pub fn pow(p: u32, mut a: u32, mut e: u64) -> u32 {
    let mut r = 1u32 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(p, r, a);
        }
        a = mul(p, a, a);
        e >>= 1;
    }
    r
}

pub fn inv(p: u32, a: u32) -> u32 {
    assert!(a % p != 0, "inverse of zero");
    pow(p, a, (p - 2) as u64)
}

/// Reduce a signed integer into `[0, p)`.
pub fn reduce(p: u32, v: i64) -> u32 {
    v.rem_euclid(p as i64) as u32
}

/// Dense row-major matrix over F_p.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Matrix{}x{}[", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        Matrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Matrix::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn scalar(p: u32, n: usize, c: u32) -> Self {
        let mut m = Matrix::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = c % p;
        }
        m
    }

    /// Build from signed integer rows; entries are reduced mod p.
    pub fn from_rows(p: u32, rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::input("ragged matrix rows"));
        }
        let data = rows
            .iter()
            .flat_map(|row| row.iter().map(|&v| reduce(p, v)))
            .collect();
        Ok(Matrix {
            p,
            rows: r,
            cols: c,
            data,
        })
    }

    /// Build a `rows x cols` matrix with an explicit shape (needed when a
    /// dimension is zero and the row list cannot carry the column count).
    pub fn from_rows_shaped(p: u32, rows: usize, cols: usize, entries: &[Vec<i64>]) -> Result<Self> {
        if rows == 0 || cols == 0 {
            if entries.iter().any(|r| !r.is_empty()) && rows == 0 {
                return Err(Error::input("matrix with zero rows has entries"));
            }
            return Ok(Matrix::zeros(p, rows, cols));
        }
        let m = Matrix::from_rows(p, entries)?;
        if m.rows != rows || m.cols != cols {
            return Err(Error::input(format!(
                "expected a {rows}x{cols} matrix, got {}x{}",
                m.rows, m.cols
            )));
        }
        Ok(m)
    }

    pub fn from_vec(p: u32, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { p, rows, cols, data }
    }

    pub fn from_fn(p: u32, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u32) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c) % p);
            }
        }
        Matrix { p, rows, cols, data }
    }

    /// A matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(p: u32, rows: usize, cols: &[Vec<u32>]) -> Self {
        let mut m = Matrix::zeros(p, rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, &v) in col.iter().enumerate() {
                m.data[i * cols.len() + j] = v;
            }
        }
        m
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn data(&self) -> &[u32] {
        &self.data
    }
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.p;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn to_signed_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|&v| v as i64).collect())
            .collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.p, self.cols, self.rows, |r, c| self.get(c, r))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let p = self.p as u64;
        let (n, k, m) = (self.rows, self.cols, other.cols);
        let mut acc = vec![0u64; n * m];
        for i in 0..n {
            for t in 0..k {
                let a = self.data[i * k + t] as u64;
                if a == 0 {
                    continue;
                }
                let orow = &other.data[t * m..(t + 1) * m];
                let arow = &mut acc[i * m..(i + 1) * m];
                for j in 0..m {
                    arow[j] += a * orow[j] as u64;
                    if arow[j] >= (1u64 << 62) {
                        arow[j] %= p;
                    }
                }
            }
        }
        Matrix {
            p: self.p,
            rows: n,
            cols: m,
            data: acc.into_iter().map(|v| (v % p) as u32).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        let p = self.p as u64;
        (0..self.rows)
            .map(|r| {
                let s: u64 = self
                    .row(r)
                    .iter()
                    .zip(v)
                    .map(|(&a, &b)| (a as u64 * b as u64) % p)
                    .sum();
                (s % p) as u32
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape());
        let p = self.p;
        Matrix {
            p,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| add(p, a, b)).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape());
        let p = self.p;
        Matrix {
            p,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| sub(p, a, b)).collect(),
        }
    }

    pub fn scale(&self, c: u32) -> Matrix {
        let p = self.p;
        Matrix {
            p,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| mul(p, a, c % p)).collect(),
        }
    }

    /// `self + c * other`
    pub fn axpy(&self, c: u32, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape());
        let p = self.p;
        Matrix {
            p,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| add(p, a, mul(p, c, b)))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.p, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.p, self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c)
            } else {
                other.get(r, c - self.cols)
            }
        })
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            p: self.p,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.p, self.rows, cols.len(), |r, c| self.get(r, cols[c]))
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_fn(self.p, rows.len(), self.cols, |r, c| self.get(rows[r], c))
    }

    /// Copy `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn put_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.data[(r0 + r) * self.cols + c0 + c] = block.get(r, c);
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(self.p, rows, cols, |r, c| self.get(r0 + r, c0 + c))
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let p = self.p;
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(piv) = (r..rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if piv != r {
                for j in 0..cols {
                    self.data.swap(piv * cols + j, r * cols + j);
                }
            }
            let iv = inv(p, self.data[r * cols + c]);
            for j in c..cols {
                self.data[r * cols + j] = mul(p, self.data[r * cols + j], iv);
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = self.data[i * cols + c];
                if f == 0 {
                    continue;
                }
                for j in c..cols {
                    let v = mul(p, f, self.data[r * cols + j]);
                    self.data[i * cols + j] = sub(p, self.data[i * cols + j], v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        if self.rows <= self.cols {
            self.rref().1.len()
        } else {
            self.transpose().rref().1.len()
        }
    }

    /// Basis of the null space `{x : self * x = 0}` as the columns of the result.
    pub fn kernel(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let p = self.p;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Matrix::zeros(p, self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            k.set(f, j, 1);
            for (i, &pc) in pivots.iter().enumerate() {
                k.set(pc, j, neg(p, r.get(i, f)));
            }
        }
        k
    }

    /// Kernel basis as a list of column vectors.
    pub fn kernel_basis(&self) -> Vec<Vec<u32>> {
        self.kernel().columns()
    }

    /// Solve `self * x = b`; `None` if inconsistent.
    pub fn solve(&self, b: &[u32]) -> Result<Option<Vec<u32>>> {
        if b.len() != self.rows {
            return Err(Error::input(format!(
                "right-hand side has length {}, expected {}",
                b.len(),
                self.rows
            )));
        }
        let bm = Matrix::from_columns(self.p, self.rows, &[b.to_vec()]);
        Ok(self.solve_matrix(&bm)?.map(|x| x.column(0)))
    }

    /// Solve `self * X = B`; `None` if some column is inconsistent.
    pub fn solve_matrix(&self, b: &Matrix) -> Result<Option<Matrix>> {
        if b.rows != self.rows {
            return Err(Error::input("solve: row count mismatch"));
        }
        let aug = self.hstack(b);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.p, self.cols, b.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, r.get(i, self.cols + j));
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let aug = self.hstack(&Matrix::identity(self.p, n));
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(r.block(0, n, n, n))
    }

    pub fn det(&self) -> u32 {
        assert!(self.is_square());
        let p = self.p;
        let n = self.rows;
        let mut m = self.data.clone();
        let mut det = 1u32;
        for c in 0..n {
            let Some(piv) = (c..n).find(|&i| m[i * n + c] != 0) else {
                return 0;
            };
            if piv != c {
                for j in 0..n {
                    m.swap(piv * n + j, c * n + j);
                }
                det = neg(p, det);
            }
            let d = m[c * n + c];
            det = mul(p, det, d);
            let iv = inv(p, d);
            for i in c + 1..n {
                let f = mul(p, m[i * n + c], iv);
                if f == 0 {
                    continue;
                }
                for j in c..n {
                    let v = mul(p, f, m[c * n + j]);
                    m[i * n + j] = sub(p, m[i * n + j], v);
                }
            }
        }
        det
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.det() != 0
    }

    /// Nilpotency test for a square matrix (`A^n = 0`).
    pub fn is_nilpotent(&self) -> bool {
        assert!(self.is_square());
        self.rows == 0 || self.pow(self.rows as u64).is_zero()
    }
}

/// A subspace of F_p^n given by a basis (columns of `basis`), together with a
/// completion to a full basis of F_p^n and the inverse of that completion.
///
/// `coords` maps a vector of the ambient space to coordinates
/// `(subspace part, complement part)`.
#[derive(Clone, Debug)]
pub struct Split {
    pub basis: Matrix,
    pub complement: Matrix,
    coords: Matrix,
}

impl Split {
    /// `span` may have dependent columns; an independent subset is kept.
    pub fn new(span: &Matrix) -> Split {
        let p = span.p();
        let n = span.rows();
        let basis = column_space(span);
        // complement: standard vectors at the non-pivot coordinates of basis^T
        let (_, pivots) = basis.transpose().rref();
        let comp_idx: Vec<usize> = (0..n).filter(|i| !pivots.contains(i)).collect();
        let complement = Matrix::from_fn(p, n, comp_idx.len(), |r, c| (r == comp_idx[c]) as u32);
        let full = basis.hstack(&complement);
        let coords = full.inverse().expect("completed basis is invertible");
        Split {
            basis,
            complement,
            coords,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn ambient(&self) -> usize {
        self.basis.rows()
    }

    /// Left inverse of `basis`: coordinates of subspace elements.
    pub fn sub_coords(&self) -> Matrix {
        self.coords.block(0, 0, self.dim(), self.ambient())
    }

    /// Quotient map onto the complement coordinates (kernel = the subspace).
    pub fn quotient_map(&self) -> Matrix {
        self.coords
            .block(self.dim(), 0, self.ambient() - self.dim(), self.ambient())
    }
}

/// Independent columns spanning the column space (canonical choice).
pub fn column_space(m: &Matrix) -> Matrix {
    let (_, pivots) = m.rref();
    m.select_columns(&pivots)
}

/// Incremental row reducer used for large homogeneous systems: rows are
/// added one at a time and kept in echelon form, so memory stays bounded by
/// the number of unknowns.
pub struct RowReducer {
    p: u32,
    ncols: usize,
    rows: Vec<Vec<u32>>,
    pivot_of_row: Vec<usize>,
    row_of_pivot: Vec<Option<usize>>,
}

impl RowReducer {
    pub fn new(p: u32, ncols: usize) -> Self {
        RowReducer {
            p,
            ncols,
            rows: Vec::new(),
            pivot_of_row: Vec::new(),
            row_of_pivot: vec![None; ncols],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `row` against the stored rows; store it if independent.
    /// Returns true if the row was new.
    pub fn insert(&mut self, mut row: Vec<u32>) -> bool {
        debug_assert_eq!(row.len(), self.ncols);
        let p = self.p;
        for c in 0..self.ncols {
            let v = row[c];
            if v == 0 {
                continue;
            }
            if let Some(ri) = self.row_of_pivot[c] {
                let prow = &self.rows[ri];
                for j in c..self.ncols {
                    if prow[j] != 0 {
                        row[j] = sub(p, row[j], mul(p, v, prow[j]));
                    }
                }
            } else {
                let iv = inv(p, v);
                for x in row[c..].iter_mut() {
                    *x = mul(p, *x, iv);
                }
                self.row_of_pivot[c] = Some(self.rows.len());
                self.pivot_of_row.push(c);
                self.rows.push(row);
                return true;
            }
        }
        false
    }

    /// Whether `row` lies in the span of the inserted rows.
    pub fn contains(&self, row: &[u32]) -> bool {
        let p = self.p;
        let mut row = row.to_vec();
        for c in 0..self.ncols {
            let v = row[c];
            if v == 0 {
                continue;
            }
            match self.row_of_pivot[c] {
                Some(ri) => {
                    let prow = &self.rows[ri];
                    for j in c..self.ncols {
                        if prow[j] != 0 {
                            row[j] = sub(p, row[j], mul(p, v, prow[j]));
                        }
                    }
                }
                None => return false,
            }
        }
        true
    }

    /// Basis of the solution space of the homogeneous system given by the rows.
    pub fn null_space(&self) -> Vec<Vec<u32>> {
        let p = self.p;
        let n = self.ncols;
        // back-substitute to reduced form
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(self.pivot_of_row[i]));
        let mut rows = self.rows.clone();
        for &i in &order {
            let pc = self.pivot_of_row[i];
            for &j in &order {
                if j == i {
                    continue;
                }
                let f = rows[j][pc];
                if f != 0 {
                    let (ri, rj) = if i < j {
                        let (a, b) = rows.split_at_mut(j);
                        (&a[i], &mut b[0])
                    } else {
                        let (a, b) = rows.split_at_mut(i);
                        (&b[0], &mut a[j])
                    };
                    for c in pc..n {
                        if ri[c] != 0 {
                            rj[c] = sub(p, rj[c], mul(p, f, ri[c]));
                        }
                    }
                }
            }
        }
        let mut out = Vec::new();
        for f in 0..n {
            if self.row_of_pivot[f].is_some() {
                continue;
            }
            let mut v = vec![0u32; n];
            v[f] = 1;
            for (i, row) in rows.iter().enumerate() {
                let pc = self.pivot_of_row[i];
                v[pc] = neg(p, row[f]);
            }
            out.push(v);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(p: u32, r: usize, c: usize, rng: &mut ChaCha8Rng) -> Matrix {
        Matrix::from_fn(p, r, c, |_, _| rng.gen_range(0..p))
    }

    #[test]
    fn prime_check() {
        assert!(FieldSpec::new(32003).is_ok());
        assert!(FieldSpec::new(2).is_ok());
        assert!(FieldSpec::new(1).is_err());
        assert!(FieldSpec::new(9).is_err());
    }

    #[test]
    fn rank_examples() {
        for p in [2, 3, 32003] {
            assert_eq!(Matrix::identity(p, 3).rank(), 3);
            assert_eq!(Matrix::zeros(p, 2, 5).rank(), 0);
        }
        let m = Matrix::from_rows(2, &[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn solve_identity_and_zero_kernel() {
        let p = 7;
        let b = vec![3, 4, 5];
        assert_eq!(Matrix::identity(p, 3).solve(&b).unwrap(), Some(b.clone()));
        let z = Matrix::zeros(p, 2, 2);
        assert_eq!(z.kernel_basis().len(), 2);
        assert!(Matrix::identity(p, 2).solve(&[1]).is_err());
    }

    #[test]
    fn random_solve_remultiplies() {
        let p = 32003;
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..20 {
            let m = random_matrix(p, 6, 6, &mut rng);
            let b: Vec<u32> = (0..6).map(|_| rng.gen_range(0..p)).collect();
            if let Some(x) = m.solve(&b).unwrap() {
                assert_eq!(m.mul_vec(&x), b);
            } else {
                assert!(m.rank() < 6);
            }
        }
    }

    #[test]
    fn row_reducer_matches_kernel() {
        let p = 5;
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let m = random_matrix(p, 4, 7, &mut rng);
            let mut rr = RowReducer::new(p, 7);
            for r in 0..4 {
                rr.insert(m.row(r).to_vec());
            }
            let ns = rr.null_space();
            assert_eq!(ns.len(), 7 - m.rank());
            for v in &ns {
                assert!(m.mul_vec(v).iter().all(|&x| x == 0));
            }
        }
    }

    #[test]
    fn split_quotient_kills_subspace() {
        let p = 3;
        let span = Matrix::from_rows(p, &[vec![1, 2], vec![0, 0], vec![1, 2]]).unwrap();
        let s = Split::new(&span);
        assert_eq!(s.dim(), 1);
        assert!(s.quotient_map().mul(&s.basis).is_zero());
        assert_eq!(s.quotient_map().mul(&s.complement), Matrix::identity(p, 2));
        assert_eq!(s.sub_coords().mul(&s.basis), Matrix::identity(p, 1));
    }

    proptest::proptest! {
        #[test]
        fn rank_nullity_and_transpose(seed in 0u64..500, r in 0usize..6, c in 0usize..6, pi in 0usize..3) {
            let p = [2u32, 3, 32003][pi];
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = random_matrix(p, r, c, &mut rng);
            proptest::prop_assert_eq!(m.rank(), m.transpose().rank());
            proptest::prop_assert_eq!(m.rank() + m.kernel_basis().len(), c);
        }
    }
}

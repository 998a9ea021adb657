//! Exact integer and rational matrix kernel.
//!
//! Everything here is exact: integer elimination is fraction-free
//! (Bareiss), rational elimination is plain Gauss-Jordan over `BigRational`.
//! Matrices are dense and row-major; zero-row and zero-column shapes are
//! legal everywhere since representation-theoretic computations routinely
//! produce empty vertex spaces.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type IntVec = Vec<BigInt>;
pub type RatVec = Vec<BigRational>;

/// Dense matrix with arbitrary-precision integer entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

/// Dense matrix with arbitrary-precision rational entries (always in lowest
/// terms; `BigRational` keeps that invariant for us).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigRational>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        assert!(rows.iter().all(|v| v.len() == c), "ragged rows");
        let data = rows.into_iter().flatten().map(BigInt::from).collect();
        IntMatrix { rows: r, cols: c, data }
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = a * &other[(k, j)];
                    out[(i, j)] += v;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> IntVec {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn neg(&self) -> IntMatrix {
        let data = self.data.iter().map(|x| -x).collect();
        IntMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j { self[(i, j)].is_one() } else { self[(i, j)].is_zero() }
                })
            })
    }

    pub fn to_rational(&self) -> RatMatrix {
        let data = self.data.iter().map(|x| BigRational::from(x.clone())).collect();
        RatMatrix { rows: self.rows, cols: self.cols, data }
    }

    /// Determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "det of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut prev = BigInt::one();
        let mut sign = 1i8;
        for k in 0..n {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&r| !m[(r, k)].is_zero()) {
                    Some(r) => {
                        m.swap_rows(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[(k, k)] * &m[(i, j)] - &m[(i, k)] * &m[(k, j)];
                    m[(i, j)] = num / &prev;
                }
                m[(i, k)] = BigInt::zero();
            }
            prev = m[(k, k)].clone();
        }
        if sign < 0 { -prev } else { prev }
    }

    /// Rank by fraction-free forward elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut prev = BigInt::one();
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let pivot = (rank..rows).find(|&r| !m[(r, col)].is_zero());
            let Some(p) = pivot else { continue };
            m.swap_rows(rank, p);
            for i in rank + 1..rows {
                for j in col + 1..cols {
                    let num = &m[(rank, col)] * &m[(i, j)] - &m[(i, col)] * &m[(rank, j)];
                    m[(i, j)] = num / &prev;
                }
                m[(i, col)] = BigInt::zero();
            }
            prev = m[(rank, col)].clone();
            rank += 1;
        }
        rank
    }

    /// Exact inverse of a unimodular integer matrix.
    ///
    /// Runs a fraction-free Gauss-Jordan pass on `[self | I]`; the pass ends
    /// with `d·I` on the left and the adjugate on the right, where `d` is the
    /// determinant up to the row-swap sign. Rejects singular input and
    /// invertible input with `|det| != 1` (reported with the determinant).
    pub fn inverse_unimodular(&self) -> Result<IntMatrix> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let mut m = IntMatrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = self[(i, j)].clone();
            }
            m[(i, n + i)] = BigInt::one();
        }
        let mut prev = BigInt::one();
        let mut sign = 1i8;
        for k in 0..n {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&r| !m[(r, k)].is_zero()) {
                    Some(r) => {
                        m.swap_rows(k, r);
                        sign = -sign;
                    }
                    None => return Err(Error::computation("singular matrix has no inverse")),
                }
            }
            let pivot = m[(k, k)].clone();
            for i in 0..n {
                if i == k {
                    continue;
                }
                let factor = m[(i, k)].clone();
                for j in 0..2 * n {
                    if j == k {
                        continue;
                    }
                    let num = &pivot * &m[(i, j)] - &factor * &m[(k, j)];
                    m[(i, j)] = num / &prev;
                }
                m[(i, k)] = BigInt::zero();
            }
            prev = pivot;
        }
        let det = if sign < 0 { -prev.clone() } else { prev.clone() };
        if !prev.abs().is_one() {
            return Err(Error::computation(format!(
                "matrix is not unimodular: determinant {det}"
            )));
        }
        let mut inv = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = &m[(i, n + j)] / &prev;
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

/// Least d >= 1 with m^d = identity, by iterated multiplication.
///
/// Exceeding `cap` is reported as an error: either the matrix has infinite
/// order or the cap was too small; the caller cannot tell which, so the
/// message carries the cap.
pub fn matrix_order(m: &IntMatrix, cap: u64) -> Result<u64> {
    assert_eq!(m.rows, m.cols, "order of non-square matrix");
    let mut power = m.clone();
    for d in 1..=cap {
        if power.is_identity() {
            return Ok(d);
        }
        power = power.mul(m);
    }
    Err(Error::computation(format!(
        "matrix order exceeds cap {cap}; not of finite order or cap too small"
    )))
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigRational::one();
        }
        m
    }

    pub fn from_rows_i64(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        assert!(rows.iter().all(|v| v.len() == c), "ragged rows");
        let data = rows
            .into_iter()
            .flatten()
            .map(|x| BigRational::from(BigInt::from(x)))
            .collect();
        RatMatrix { rows: r, cols: c, data }
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = a * &other[(k, j)];
                    out[(i, j)] += v;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> RatVec {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn scale(&self, c: &BigRational) -> RatMatrix {
        let data = self.data.iter().map(|x| x * c).collect();
        RatMatrix { rows: self.rows, cols: self.cols, data }
    }

    /// Stack columns of `blocks` horizontally.
    pub fn hstack(blocks: &[RatMatrix]) -> RatMatrix {
        assert!(!blocks.is_empty());
        let rows = blocks[0].rows;
        assert!(blocks.iter().all(|b| b.rows == rows));
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = RatMatrix::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            for i in 0..rows {
                for j in 0..b.cols {
                    out[(i, off + j)] = b[(i, j)].clone();
                }
            }
            off += b.cols;
        }
        out
    }

    /// In-place reduced row echelon form; returns pivot column indices.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].recip();
            for j in c..self.cols {
                let v = &self[(r, j)] * &inv;
                self[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let f = self[(i, c)].clone();
                for j in c..self.cols {
                    let v = &self[(i, j)] - &f * &self[(r, j)];
                    self[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel, normalized from the reduced echelon form:
    /// one vector per free column, with unit entry at that column.
    pub fn kernel_basis(&self) -> Vec<RatVec> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![BigRational::zero(); self.cols];
            v[free] = BigRational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[(row, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `self * x = b` exactly; `None` when inconsistent.
    pub fn solve(&self, b: &[BigRational]) -> Option<RatVec> {
        assert_eq!(self.rows, b.len(), "dimension mismatch");
        let mut aug = RatMatrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![BigRational::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = aug[(row, self.cols)].clone();
        }
        Some(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = BigRational;
    fn index(&self, (i, j): (usize, usize)) -> &BigRational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigRational {
        &mut self.data[i * self.cols + j]
    }
}

pub fn int_vec(v: &[i64]) -> IntVec {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_identity() {
        let id = IntMatrix::identity(4);
        assert_eq!(id.inverse_unimodular().unwrap(), id);
    }

    #[test]
    fn inverse_of_unitriangular() {
        // Cartan matrix of the Auslander algebra of A3 (columns = projectives).
        let c = IntMatrix::from_rows(vec![
            vec![1, 1, 1, 0, 0, 0],
            vec![0, 1, 1, 1, 1, 0],
            vec![0, 0, 1, 0, 1, 1],
            vec![0, 0, 0, 1, 1, 0],
            vec![0, 0, 0, 0, 1, 1],
            vec![0, 0, 0, 0, 0, 1],
        ]);
        let inv = c.inverse_unimodular().unwrap();
        assert!(c.mul(&inv).is_identity());
        assert!(inv.mul(&c).is_identity());
        // Forward substitution on the unitriangular matrix, done by hand.
        let expected = IntMatrix::from_rows(vec![
            vec![1, -1, 0, 1, 0, 0],
            vec![0, 1, -1, -1, 1, 0],
            vec![0, 0, 1, 0, -1, 0],
            vec![0, 0, 0, 1, -1, 1],
            vec![0, 0, 0, 0, 1, -1],
            vec![0, 0, 0, 0, 0, 1],
        ]);
        assert_eq!(inv, expected);
    }

    #[test]
    fn non_unimodular_is_rejected() {
        let m = IntMatrix::from_rows(vec![vec![2]]);
        let err = m.inverse_unimodular().unwrap_err();
        assert!(err.to_string().contains("determinant 2"));
    }

    #[test]
    fn singular_is_rejected() {
        let m = IntMatrix::from_rows(vec![vec![1, 1], vec![1, 1]]);
        assert!(m.inverse_unimodular().is_err());
    }

    #[test]
    fn kernel_of_full_rank_is_empty() {
        let m = RatMatrix::identity(2);
        assert!(m.kernel_basis().is_empty());
    }

    #[test]
    fn kernel_one_dimensional() {
        let m = RatMatrix::from_rows_i64(vec![vec![1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        let expect: RatVec = vec![
            -BigRational::one(),
            BigRational::one(),
        ];
        assert_eq!(k[0], expect);
    }

    #[test]
    fn kernel_of_zero_map() {
        let m = RatMatrix::zeros(2, 3);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 3);
        for (i, v) in k.iter().enumerate() {
            for (j, x) in v.iter().enumerate() {
                assert_eq!(*x == BigRational::one(), i == j);
            }
        }
    }

    #[test]
    fn order_of_identity_is_one() {
        assert_eq!(matrix_order(&IntMatrix::identity(3), 10).unwrap(), 1);
    }

    #[test]
    fn order_of_a2_coxeter_is_three() {
        let phi = IntMatrix::from_rows(vec![vec![-1, 1], vec![-1, 0]]);
        assert_eq!(matrix_order(&phi, 100).unwrap(), 3);
    }

    #[test]
    fn order_cap_is_reported() {
        let m = IntMatrix::from_rows(vec![vec![1, 1], vec![0, 1]]);
        assert!(matrix_order(&m, 50).is_err());
    }

    #[test]
    fn rank_and_det() {
        let m = IntMatrix::from_rows(vec![vec![1, 2], vec![2, 4]]);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.det(), BigInt::zero());
        let m = IntMatrix::from_rows(vec![vec![2, 1], vec![1, 1]]);
        assert_eq!(m.det(), BigInt::one());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = RatMatrix::from_rows_i64(vec![vec![1, 1], vec![0, 1]]);
        let b: RatVec = vec![
            BigRational::from(BigInt::from(3)),
            BigRational::from(BigInt::from(1)),
        ];
        let x = m.solve(&b).unwrap();
        assert_eq!(m.mul_vec(&x), b);
        let m = RatMatrix::from_rows_i64(vec![vec![1, 1], vec![1, 1]]);
        let b: RatVec = vec![BigRational::zero(), BigRational::one()];
        assert!(m.solve(&b).is_none());
    }
}

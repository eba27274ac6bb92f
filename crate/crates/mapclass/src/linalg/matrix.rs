//! Dense matrices over the rationals with exact elimination.
//!
//! Everything is computed by fraction arithmetic; answers are exact, and
//! equality of matrices is entrywise exact equality. This module carries the
//! kernel/solve/echelon machinery that the rest of the crate is built on, as
//! well as the unipotence and generalized-eigenspace operations used to
//! analyze twist images.

use super::scalar::Rat;
use super::subspace::Subspace;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

/// Errors from matrix operations with mathematical preconditions.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("shape mismatch: expected {expected}, got {got}")]
    ShapeMismatch { expected: String, got: String },
}

/// A dense `rows x cols` matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn scalar(n: usize, value: &Rat) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = value.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Integer convenience constructor, mostly for tests and fixed tables.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| Rat::from(n)).collect())
                .collect(),
        )
    }

    /// A column vector from integer entries.
    pub fn col_from_i64(entries: &[i64]) -> Self {
        Mat::from_fn(entries.len(), 1, |r, _| Rat::from(entries[r]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    if r == c {
                        self[(r, c)].is_one()
                    } else {
                        self[(r, c)].is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn map(&self, f: impl Fn(&Rat) -> Rat) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, s: &Rat) -> Mat {
        self.map(|v| v * s)
    }

    pub fn row(&self, r: usize) -> Mat {
        Mat::from_fn(1, self.cols, |_, c| self[(r, c)].clone())
    }

    pub fn col(&self, c: usize) -> Mat {
        Mat::from_fn(self.rows, 1, |r, _| self[(r, c)].clone())
    }

    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Mat {
        assert!(r0 <= r1 && r1 <= self.rows && c0 <= c1 && c1 <= self.cols);
        Mat::from_fn(r1 - r0, c1 - c0, |r, c| self[(r0 + r, c0 + c)].clone())
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Mat) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for r in 0..block.rows {
            for c in 0..block.cols {
                self[(r0 + r, c0 + c)] = block[(r, c)].clone();
            }
        }
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let mut m = Mat::zeros(self.rows, self.cols + other.cols);
        m.set_block(0, 0, self);
        m.set_block(0, self.cols, other);
        m
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols, "vstack col mismatch");
        let mut m = Mat::zeros(self.rows + other.rows, self.cols);
        m.set_block(0, 0, self);
        m.set_block(self.rows, 0, other);
        m
    }

    /// Block diagonal `diag(self, other)`.
    pub fn block_diag(&self, other: &Mat) -> Mat {
        let mut m = Mat::zeros(self.rows + other.rows, self.cols + other.cols);
        m.set_block(0, 0, self);
        m.set_block(self.rows, self.cols, other);
        m
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row >= m.rows {
                break;
            }
            let Some(found) = (pivot_row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, found);
            let inv = m[(pivot_row, col)].inv().expect("nonzero pivot");
            for c in col..m.cols {
                let v = &m[(pivot_row, c)] * &inv;
                m[(pivot_row, c)] = v;
            }
            for r in 0..m.rows {
                if r != pivot_row && !m[(r, col)].is_zero() {
                    let factor = m[(r, col)].clone();
                    for c in col..m.cols {
                        let v = &m[(r, c)] - &(&factor * &m[(pivot_row, c)]);
                        m[(r, c)] = v;
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Exact null space as a canonical `Subspace`.
    pub fn kernel(&self) -> Subspace {
        let (rref, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Mat::zeros(self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            basis[(fc, k)] = Rat::one();
            for (pr, &pc) in pivots.iter().enumerate() {
                basis[(pc, k)] = -&rref[(pr, fc)];
            }
        }
        Subspace::from_columns(self.cols, &basis)
    }

    /// Some `x` with `self * x = rhs`, or `None` if the system is inconsistent.
    /// Free variables are set to zero, so the answer is deterministic.
    pub fn solve(&self, rhs: &Mat) -> Option<Mat> {
        assert_eq!(self.rows, rhs.rows, "solve: row count mismatch");
        let aug = self.hstack(rhs);
        let (rref, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Mat::zeros(self.cols, rhs.cols);
        for (pr, &pc) in pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                x[(pc, c)] = rref[(pr, self.cols + c)].clone();
            }
        }
        Some(x)
    }

    pub fn det(&self) -> Rat {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let Some(found) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return Rat::zero();
            };
            if found != col {
                m.swap_rows(col, found);
                det = -det;
            }
            let pivot = m[(col, col)].clone();
            det *= &pivot;
            let inv = pivot.inv().expect("nonzero pivot");
            for r in col + 1..n {
                if !m[(r, col)].is_zero() {
                    let factor = &m[(r, col)] * &inv;
                    for c in col..n {
                        let v = &m[(r, c)] - &(&factor * &m[(col, c)]);
                        m[(r, c)] = v;
                    }
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Mat> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let aug = self.hstack(&Mat::identity(n));
        let (rref, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().take(n).enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(rref.submatrix(0, n, n, 2 * n))
    }

    /// Exact integer power; negative exponents require invertibility.
    pub fn pow(&self, e: i64) -> Result<Mat, LinalgError> {
        assert!(self.is_square(), "power of a non-square matrix");
        let base = if e < 0 {
            self.inverse().ok_or(LinalgError::NotInvertible)?
        } else {
            self.clone()
        };
        let mut result = Mat::identity(self.rows);
        let mut sq = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &sq;
            }
            k >>= 1;
            if k > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(result)
    }

    /// True iff `(self - I)^n = 0`, i.e. all eigenvalues are 1.
    pub fn is_unipotent(&self) -> bool {
        assert!(self.is_square(), "unipotence of a non-square matrix");
        let n = self.rows;
        let nilpotent = self - &Mat::identity(n);
        nilpotent.pow(n as i64).expect("nonnegative power").is_zero()
    }

    /// `ker((self - lambda I)^k)`, the degree-`k` generalized eigenspace.
    pub fn generalized_eigenspace(&self, lambda: &Rat, k: usize) -> Subspace {
        assert!(self.is_square() && k >= 1);
        let shifted = self - &Mat::scalar(self.rows, lambda);
        shifted
            .pow(k as i64)
            .expect("nonnegative power")
            .kernel()
    }

    /// Dimensions of the graded pieces `E_{lambda,k} / E_{lambda,k-1}` up to
    /// stabilization. The sequence is non-increasing; this is asserted, not
    /// assumed.
    pub fn jordan_filtration_dims(&self, lambda: &Rat) -> Vec<usize> {
        assert!(self.is_square());
        let shifted = self - &Mat::scalar(self.rows, lambda);
        let mut dims = Vec::new();
        let mut prev = 0usize;
        let mut power = Mat::identity(self.rows);
        loop {
            power = &power * &shifted;
            let d = self.rows - power.rank();
            if d == prev {
                break;
            }
            dims.push(d - prev);
            prev = d;
            if d == self.rows {
                break;
            }
        }
        assert!(
            dims.windows(2).all(|w| w[0] >= w[1]),
            "graded eigenspace dimensions must be non-increasing"
        );
        dims
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Entries as row-major rows of `"p/q"` strings (the wire format).
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self[(r, c)].to_string()).collect())
            .collect()
    }

    pub fn from_string_rows(rows: &[Vec<String>]) -> Result<Mat, super::scalar::ParseRatError> {
        let parsed: Result<Vec<Vec<Rat>>, _> = rows
            .iter()
            .map(|row| row.iter().map(|s| s.parse()).collect())
            .collect();
        Ok(Mat::from_rows(parsed?))
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = Rat;
    fn index(&self, (r, c): (usize, usize)) -> &Rat {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rat {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl Mul for &Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = &rhs[(k, c)];
                    if !b.is_zero() {
                        let v = &out[(r, c)] + &(a * b);
                        out[(r, c)] = v;
                    }
                }
            }
        }
        out
    }
}

impl Add for &Mat {
    type Output = Mat;
    fn add(self, rhs: &Mat) -> Mat {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "add shape mismatch");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Mat {
    type Output = Mat;
    fn sub(self, rhs: &Mat) -> Mat {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "sub shape mismatch");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        self.map(|v| -v)
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for Mat {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_string_rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Mat {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(deserializer)?;
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != c) {
            return Err(serde::de::Error::custom("ragged matrix rows"));
        }
        Mat::from_string_rows(&rows).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_identity_is_zero() {
        assert_eq!(Mat::identity(2).kernel().dim(), 0);
    }

    #[test]
    fn kernel_of_rank_one_symmetric() {
        let m = Mat::from_i64(&[&[1, 1], &[1, 1]]);
        let k = m.kernel();
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&Mat::col_from_i64(&[1, -1])));
    }

    #[test]
    fn solve_identity_returns_rhs() {
        let b = Mat::col_from_i64(&[3, -5]);
        assert_eq!(Mat::identity(2).solve(&b).unwrap(), b);
    }

    #[test]
    fn solve_detects_inconsistency() {
        let m = Mat::from_i64(&[&[1, 1], &[1, 1]]);
        assert!(m.solve(&Mat::col_from_i64(&[1, 0])).is_none());
    }

    #[test]
    fn power_and_inverse() {
        let m = Mat::from_i64(&[&[2, 0], &[0, 2]]);
        assert_eq!(m.pow(3).unwrap(), Mat::from_i64(&[&[8, 0], &[0, 8]]));
        assert_eq!(m.pow(0).unwrap(), Mat::identity(2));
        assert_eq!(&m.pow(-1).unwrap() * &m, Mat::identity(2));
        let singular = Mat::from_i64(&[&[1, 1], &[1, 1]]);
        assert_eq!(singular.pow(-2), Err(LinalgError::NotInvertible));
    }

    #[test]
    fn unipotence() {
        assert!(Mat::identity(3).is_unipotent());
        let jordan = Mat::from_i64(&[&[1, 1, 0], &[0, 1, 1], &[0, 0, 1]]);
        assert!(jordan.is_unipotent());
        let diag = Mat::from_i64(&[&[2, 0], &[0, 1]]);
        assert!(!diag.is_unipotent());
    }

    #[test]
    fn generalized_eigenspaces_of_jordan_block() {
        let jordan = Mat::from_i64(&[&[1, 1], &[0, 1]]);
        let one = Rat::one();
        assert_eq!(jordan.generalized_eigenspace(&one, 1).dim(), 1);
        assert_eq!(jordan.generalized_eigenspace(&one, 2).dim(), 2);
        assert_eq!(Mat::identity(4).generalized_eigenspace(&one, 1).dim(), 4);
    }

    #[test]
    fn jordan_filtration_examples() {
        let one = Rat::one();
        let j3 = Mat::from_i64(&[&[1, 1, 0], &[0, 1, 1], &[0, 0, 1]]);
        assert_eq!(j3.jordan_filtration_dims(&one), vec![1, 1, 1]);
        let j2_plus_j1 = Mat::from_i64(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(j2_plus_j1.jordan_filtration_dims(&one), vec![2, 1]);
    }

    #[test]
    fn det_and_rank() {
        let m = Mat::from_i64(&[&[1, 2], &[3, 4]]);
        assert_eq!(m.det(), Rat::from(-2));
        assert_eq!(m.rank(), 2);
        assert_eq!(Mat::from_i64(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn zero_dimension_edges() {
        let tall = Mat::zeros(3, 0);
        let wide = Mat::zeros(0, 3);
        assert_eq!((&tall * &wide), Mat::zeros(3, 3));
        assert_eq!(wide.kernel().dim(), 3);
    }
}

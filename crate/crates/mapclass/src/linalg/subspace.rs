//! Subspaces of rational vector spaces in canonical form.
//!
//! A `Subspace` stores a basis in reduced column-echelon form, so two
//! subspaces are equal exactly when their stored bases are identical. This
//! makes flag comparisons decidable and deterministic.

use super::matrix::Mat;

/// A linear subspace of `Q^ambient_dim`, with canonical echelon basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    /// `ambient_dim x dim` matrix whose columns form the canonical basis.
    basis: Mat,
}

impl Subspace {
    /// Span of the columns of `generators`; dependencies are discarded and
    /// the result is put in reduced column-echelon form.
    pub fn from_columns(ambient_dim: usize, generators: &Mat) -> Self {
        assert_eq!(generators.rows(), ambient_dim, "generator shape mismatch");
        // Column echelon = transposed row echelon of the transpose, with
        // zero rows dropped.
        let (rref, pivots) = generators.transpose().rref();
        let basis = rref.submatrix(0, pivots.len(), 0, ambient_dim).transpose();
        Subspace { ambient_dim, basis }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Mat::zeros(ambient_dim, 0),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Mat::identity(ambient_dim),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    /// The canonical basis as columns of an `ambient_dim x dim` matrix.
    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn contains(&self, v: &Mat) -> bool {
        assert_eq!(v.rows(), self.ambient_dim);
        assert_eq!(v.cols(), 1);
        if v.is_zero() {
            return true;
        }
        self.basis.solve(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        other.basis.solve(&self.basis).is_some()
    }

    /// Sum of subspaces.
    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        Subspace::from_columns(self.ambient_dim, &self.basis.hstack(&other.basis))
    }

    /// Intersection, via the kernel of `[A | -B]`.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.ambient_dim);
        }
        let stacked = self.basis.hstack(&(-&other.basis));
        let ker = stacked.kernel();
        // First block of kernel coordinates expresses the intersection in
        // terms of our basis.
        let coords = ker.basis().submatrix(0, self.dim(), 0, ker.dim());
        Subspace::from_columns(self.ambient_dim, &(&self.basis * &coords))
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Subspace(dim {} of Q^{}, basis {:?})",
            self.dim(),
            self.ambient_dim,
            self.basis
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Rat;

    #[test]
    fn canonical_form_is_deterministic() {
        // Two different generating sets for the same plane in Q^3.
        let g1 = Mat::from_i64(&[&[1, 1], &[0, 2], &[1, 3]]);
        let g2 = Mat::from_i64(&[&[2, 0], &[2, 2], &[4, 2]]);
        let s1 = Subspace::from_columns(3, &g1);
        let s2 = Subspace::from_columns(3, &g2);
        assert_eq!(s1.dim(), 2);
        assert_eq!(s1, s2);
    }

    #[test]
    fn membership_and_ordering() {
        let line = Subspace::from_columns(3, &Mat::col_from_i64(&[1, 2, 3]));
        assert!(line.contains(&Mat::col_from_i64(&[2, 4, 6])));
        assert!(!line.contains(&Mat::col_from_i64(&[1, 0, 0])));
        assert!(line.is_subspace_of(&Subspace::full(3)));
        assert!(Subspace::zero(3).is_subspace_of(&line));
        assert!(!Subspace::full(3).is_subspace_of(&line));
    }

    #[test]
    fn sum_and_intersection() {
        let e1 = Subspace::from_columns(3, &Mat::col_from_i64(&[1, 0, 0]));
        let plane = Subspace::from_columns(3, &Mat::from_i64(&[&[1, 0], &[0, 1], &[0, 0]]));
        assert_eq!(e1.sum(&plane), plane);
        assert_eq!(e1.intersect(&plane), e1);
        let e3 = Subspace::from_columns(3, &Mat::col_from_i64(&[0, 0, 1]));
        assert_eq!(e3.intersect(&plane).dim(), 0);
    }

    #[test]
    fn monotone_eigenspace_chain() {
        // E_{1,k} is increasing in k and stabilizes.
        let m = Mat::from_i64(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 2]]);
        let one = Rat::one();
        let e1 = m.generalized_eigenspace(&one, 1);
        let e2 = m.generalized_eigenspace(&one, 2);
        let e3 = m.generalized_eigenspace(&one, 3);
        assert!(e1.is_subspace_of(&e2));
        assert_eq!(e2, e3);
        assert_eq!(e2.dim(), 2);
    }
}

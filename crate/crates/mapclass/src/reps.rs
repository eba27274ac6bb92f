//! Core representations: symplectic transvections, duals, and direct sums
//! with trivial factors.

use crate::io;
use crate::linalg::{Mat, Rat};
use crate::surface::{CurveClass, Surface};

/// Errors from representation constructors.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepsError {
    #[error("curve {0:?} is separating; its homology transvection is the identity")]
    SeparatingCurve(String),
    #[error("generator image for {name:?} must be {dim}x{dim} and invertible")]
    BadImage { name: String, dim: usize },
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
}

/// A surface context plus a map from generator names to invertible exact
/// matrices, one per curve of the bundled generator system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    surface: Surface,
    dimension: usize,
    names: Vec<String>,
    images: Vec<Mat>,
    curve_system_hash: String,
}

impl Representation {
    /// Build from parallel name/image lists. Images must be square of equal
    /// size and invertible.
    pub fn new(
        surface: Surface,
        names: Vec<String>,
        images: Vec<Mat>,
        curve_system_hash: String,
    ) -> Result<Self, RepsError> {
        assert_eq!(names.len(), images.len());
        assert!(!images.is_empty());
        let dim = images[0].rows();
        for (name, m) in names.iter().zip(&images) {
            if m.rows() != dim || m.cols() != dim || m.det().is_zero() {
                return Err(RepsError::BadImage {
                    name: name.clone(),
                    dim,
                });
            }
        }
        Ok(Representation {
            surface,
            dimension: dim,
            names,
            images,
            curve_system_hash,
        })
    }

    pub fn surface(&self) -> &Surface {
        &self.surface
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn images(&self) -> &[Mat] {
        &self.images
    }

    pub fn curve_system_hash(&self) -> &str {
        &self.curve_system_hash
    }

    pub fn image(&self, name: &str) -> Result<&Mat, RepsError> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| &self.images[i])
            .ok_or_else(|| RepsError::UnknownGenerator(name.to_owned()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &Mat)> {
        self.names.iter().zip(self.images.iter())
    }

    pub fn is_trivial(&self) -> bool {
        self.images.iter().all(Mat::is_identity)
    }

    /// The conjugate representation `s -> x ρ(s) x^{-1}`.
    pub fn conjugate(&self, x: &Mat) -> Representation {
        let xi = x.inverse().expect("conjugator must be invertible");
        Representation {
            surface: self.surface,
            dimension: self.dimension,
            names: self.names.clone(),
            images: self.images.iter().map(|m| &(x * m) * &xi).collect(),
            curve_system_hash: self.curve_system_hash.clone(),
        }
    }
}

/// The matrix of `x -> x + <x, c> [c]` on `H_1` in the standard basis:
/// the homology action of the Dehn twist along a nonseparating curve.
/// Separating curves are rejected rather than silently mapped to the
/// identity.
pub fn transvection_matrix(surface: &Surface, curve: &CurveClass) -> Result<Mat, RepsError> {
    if !curve.nonseparating || curve.homology.iter().all(|&v| v == 0) {
        return Err(RepsError::SeparatingCurve(curve.name.clone()));
    }
    let n = surface.homology_rank();
    assert_eq!(curve.homology.len(), n, "homology vector length");
    let mut m = Mat::identity(n);
    for col in 0..n {
        let mut basis = vec![0i64; n];
        basis[col] = 1;
        let pairing = surface
            .intersection_pairing(&basis, &curve.homology)
            .expect("lengths checked");
        if pairing != 0 {
            for row in 0..n {
                let v = &m[(row, col)] + &(&Rat::from(pairing) * &Rat::from(curve.homology[row]));
                m[(row, col)] = v;
            }
        }
    }
    Ok(m)
}

/// The symplectic representation: every generator curve maps to its
/// transvection on `H_1`.
pub fn symplectic_rep(surface: &Surface) -> Representation {
    let system = surface.generator_curve_system();
    let hash = io::curve_system_hash(&system);
    let names = system.names();
    let images = system
        .curves
        .iter()
        .map(|c| transvection_matrix(surface, c).expect("generator curves are nonseparating"))
        .collect();
    Representation::new(*surface, names, images, hash).expect("transvections are invertible")
}

/// The dual representation `s -> ρ(s)^{-T}`.
pub fn dual_rep(rep: &Representation) -> Representation {
    Representation {
        surface: rep.surface,
        dimension: rep.dimension,
        names: rep.names.clone(),
        images: rep
            .images
            .iter()
            .map(|m| m.inverse().expect("images are invertible").transpose())
            .collect(),
        curve_system_hash: rep.curve_system_hash.clone(),
    }
}

/// Block-diagonal sum with a trivial representation of rank `k`, appended.
pub fn direct_sum_with_trivial(rep: &Representation, k: usize) -> Representation {
    if k == 0 {
        return rep.clone();
    }
    let eye = Mat::identity(k);
    Representation {
        surface: rep.surface,
        dimension: rep.dimension + k,
        names: rep.names.clone(),
        images: rep.images.iter().map(|m| m.block_diag(&eye)).collect(),
        curve_system_hash: rep.curve_system_hash.clone(),
    }
}

/// The Gram matrix of the intersection pairing in the standard basis.
pub fn pairing_gram(surface: &Surface) -> Mat {
    let n = surface.homology_rank();
    Mat::from_fn(n, n, |i, j| {
        let mut u = vec![0i64; n];
        let mut v = vec![0i64; n];
        u[i] = 1;
        v[j] = 1;
        Rat::from(surface.intersection_pairing(&u, &v).expect("lengths match"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn s3() -> Surface {
        Surface::new(3).unwrap()
    }

    #[test]
    fn transvection_along_x1() {
        let s = s3();
        let sys = s.generator_curve_system();
        let m = transvection_matrix(&s, sys.curve("a1").unwrap()).unwrap();
        // Identity except entry -1 in (row x_1, column y_1).
        let mut expected = Mat::identity(6);
        expected[(0, 3)] = Rat::from(-1);
        assert_eq!(m, expected);
    }

    #[test]
    fn transvection_along_y1() {
        let s = s3();
        let sys = s.generator_curve_system();
        let m = transvection_matrix(&s, sys.curve("a2").unwrap()).unwrap();
        // Psi(T_{y_1})(x_1) = x_1 + y_1.
        let mut x1 = Mat::zeros(6, 1);
        x1[(0, 0)] = Rat::one();
        let image = &m * &x1;
        let mut expected = Mat::zeros(6, 1);
        expected[(0, 0)] = Rat::one();
        expected[(3, 0)] = Rat::one();
        assert_eq!(image, expected);
    }

    #[test]
    fn separating_curve_is_flagged() {
        let s = s3();
        let sep = CurveClass::separating("d", 6);
        assert_eq!(
            transvection_matrix(&s, &sep),
            Err(RepsError::SeparatingCurve("d".to_owned()))
        );
    }

    #[test]
    fn transvections_are_unipotent_symplectomorphisms() {
        let s = s3();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let j = pairing_gram(&s);
        for _ in 0..10 {
            let mut h: Vec<i64> = (0..6).map(|_| rng.gen_range(-3..=3)).collect();
            if h.iter().all(|&v| v == 0) {
                h[0] = 1;
            }
            let c = CurveClass {
                name: "c".into(),
                homology: h,
                nonseparating: true,
            };
            let m = transvection_matrix(&s, &c).unwrap();
            assert_eq!(m.det(), Rat::one());
            let n = &m - &Mat::identity(6);
            assert!((&n * &n).is_zero(), "(M - I)^2 = 0");
            // Preserves the pairing: M^T J M = J.
            assert_eq!(&(&m.transpose() * &j) * &m, j);
        }
    }

    #[test]
    fn transvection_is_sign_independent() {
        let s = s3();
        let sys = s.generator_curve_system();
        let c = sys.curve("a3").unwrap();
        let neg = CurveClass {
            name: c.name.clone(),
            homology: c.homology.iter().map(|v| -v).collect(),
            nonseparating: true,
        };
        assert_eq!(
            transvection_matrix(&s, c).unwrap(),
            transvection_matrix(&s, &neg).unwrap()
        );
    }

    #[test]
    fn dual_is_involutive_and_conjugate_to_original() {
        let s = s3();
        let rep = symplectic_rep(&s);
        let dd = dual_rep(&dual_rep(&rep));
        assert_eq!(dd, rep);
        // J intertwines: J Psi(s) J^{-1} = Psi*(s).
        let j = pairing_gram(&s);
        let dual = dual_rep(&rep);
        let ji = j.inverse().unwrap();
        for (name, m) in rep.iter() {
            assert_eq!(&(&j * m) * &ji, *dual.image(name).unwrap());
        }
    }

    #[test]
    fn direct_sum_appends_identity_block() {
        let s = s3();
        let rep = symplectic_rep(&s);
        assert_eq!(direct_sum_with_trivial(&rep, 0), rep);
        let sum = direct_sum_with_trivial(&rep, 2);
        assert_eq!(sum.dimension(), 8);
        for (_, m) in sum.iter() {
            assert_eq!(m.submatrix(6, 8, 6, 8), Mat::identity(2));
            assert!(m.submatrix(0, 6, 6, 8).is_zero());
            assert!(m.submatrix(6, 8, 0, 6).is_zero());
        }
    }

    #[test]
    fn common_fixed_space_of_symplectic_is_zero() {
        let s = s3();
        let rep = symplectic_rep(&s);
        let mut fixed = crate::linalg::Subspace::full(6);
        for (_, m) in rep.iter() {
            fixed = fixed.intersect(&(m - &Mat::identity(6)).kernel());
        }
        assert_eq!(fixed.dim(), 0);
    }
}

//! Genus-`g` surface combinatorics: the symplectic homology basis, the
//! intersection pairing, standardly embedded chains, and the bundled
//! Humphries-type generator curve system.
//!
//! Homology classes live in `Z^{2g}` with basis ordered `x_1..x_g, y_1..y_g`
//! and sign convention `<x_i, y_i> = +1`.

use serde::{Deserialize, Serialize};

/// Errors from surface-level operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SurfaceError {
    #[error("genus must be at least 3, got {0}")]
    GenusTooSmall(usize),
    #[error("homology vectors must have length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("chain of length {requested} exceeds maximum {max}")]
    ChainTooLong { requested: usize, max: usize },
}

/// A genus-`g` surface with exactly one boundary component, `g >= 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Surface {
    genus: usize,
    boundary_components: usize,
}

impl Surface {
    pub fn new(genus: usize) -> Result<Self, SurfaceError> {
        if genus < 3 {
            return Err(SurfaceError::GenusTooSmall(genus));
        }
        Ok(Surface {
            genus,
            boundary_components: 1,
        })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn boundary_components(&self) -> usize {
        self.boundary_components
    }

    /// Rank of the first homology, `2g`.
    pub fn homology_rank(&self) -> usize {
        2 * self.genus
    }

    /// The algebraic intersection number `u^T J v`, where `J` is the standard
    /// symplectic Gram matrix with `<x_i, y_i> = +1`.
    pub fn intersection_pairing(&self, u: &[i64], v: &[i64]) -> Result<i64, SurfaceError> {
        let n = self.homology_rank();
        for w in [u, v] {
            if w.len() != n {
                return Err(SurfaceError::DimensionMismatch {
                    expected: n,
                    got: w.len(),
                });
            }
        }
        let g = self.genus;
        // <u, v> = sum_i (u_{x_i} v_{y_i} - u_{y_i} v_{x_i})
        Ok((0..g).map(|i| u[i] * v[g + i] - u[g + i] * v[i]).sum())
    }

    /// The first `k` homology classes of a standardly embedded chain:
    /// `x_1, y_1, x_1+x_2, y_2, x_2+x_3, y_3, ...`. Consecutive classes pair
    /// to `±1`, non-consecutive ones to `0`, and all are linearly independent.
    pub fn standard_chain(&self, k: usize) -> Result<Vec<CurveClass>, SurfaceError> {
        let max = self.homology_rank();
        if k > max {
            return Err(SurfaceError::ChainTooLong { requested: k, max });
        }
        Ok((1..=k).map(|i| self.chain_curve(i)).collect())
    }

    fn chain_curve(&self, index: usize) -> CurveClass {
        let g = self.genus;
        let mut h = vec![0i64; 2 * g];
        if index % 2 == 0 {
            // c_{2i} = y_i
            h[g + index / 2 - 1] = 1;
        } else if index == 1 {
            h[0] = 1; // c_1 = x_1
        } else {
            // c_{2i+1} = x_i + x_{i+1}
            let i = index / 2;
            h[i - 1] = 1;
            h[i] = 1;
        }
        CurveClass {
            name: format!("a{index}"),
            homology: h,
            nonseparating: true,
        }
    }

    /// The bundled Humphries-type configuration of `2g+1` curves: the chain
    /// `a1..a{2g}` plus the off-chain curve `a0` (homology class `x_2`)
    /// meeting only `a4`, once.
    pub fn generator_curve_system(&self) -> CurveSystem {
        let g = self.genus;
        let mut curves = Vec::with_capacity(2 * g + 1);
        let mut off_chain = vec![0i64; 2 * g];
        off_chain[1] = 1; // x_2
        curves.push(CurveClass {
            name: "a0".to_owned(),
            homology: off_chain,
            nonseparating: true,
        });
        for i in 1..=2 * g {
            curves.push(self.chain_curve(i));
        }
        let n = curves.len();
        let mut geometric = vec![vec![0u32; n]; n];
        for i in 1..2 * g {
            // consecutive chain curves meet once
            geometric[i][i + 1] = 1;
            geometric[i + 1][i] = 1;
        }
        geometric[0][4] = 1;
        geometric[4][0] = 1;
        let system = CurveSystem {
            surface: *self,
            curves,
            geometric_intersections: geometric,
        };
        debug_assert!(system.validate().is_ok());
        system
    }
}

/// A named simple closed curve, known through its homology class and its
/// geometric intersection data inside a `CurveSystem`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveClass {
    pub name: String,
    pub homology: Vec<i64>,
    pub nonseparating: bool,
}

impl CurveClass {
    /// A separating curve: zero homology class.
    pub fn separating(name: &str, homology_rank: usize) -> Self {
        CurveClass {
            name: name.to_owned(),
            homology: vec![0; homology_rank],
            nonseparating: false,
        }
    }

    pub fn is_primitive(&self) -> bool {
        let gcd = self
            .homology
            .iter()
            .fold(0i64, |acc, &v| num::integer::gcd(acc, v.abs()));
        gcd == 1
    }
}

/// An ordered configuration of curves with pairwise geometric intersection
/// counts, consistent with the homological pairing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveSystem {
    pub surface: Surface,
    pub curves: Vec<CurveClass>,
    pub geometric_intersections: Vec<Vec<u32>>,
}

impl CurveSystem {
    pub fn curve(&self, name: &str) -> Option<&CurveClass> {
        self.curves.iter().find(|c| c.name == name)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.curves.iter().position(|c| c.name == name)
    }

    pub fn names(&self) -> Vec<String> {
        self.curves.iter().map(|c| c.name.clone()).collect()
    }

    /// The chain curves `a1..a{2g}` in order.
    pub fn chain(&self) -> &[CurveClass] {
        &self.curves[1..]
    }

    pub fn geometric(&self, i: usize, j: usize) -> u32 {
        self.geometric_intersections[i][j]
    }

    /// Consistency: the matrix is symmetric with zero diagonal, homology
    /// vectors have the right length and are primitive for nonseparating
    /// curves, and `|<a,b>| <= i(a,b)` for all pairs.
    pub fn validate(&self) -> Result<(), SurfaceError> {
        let n = self.curves.len();
        assert_eq!(self.geometric_intersections.len(), n, "intersection matrix shape");
        for row in &self.geometric_intersections {
            assert_eq!(row.len(), n, "intersection matrix shape");
        }
        for i in 0..n {
            assert!(self.geometric_intersections[i][i] == 0);
            for j in 0..n {
                assert_eq!(
                    self.geometric_intersections[i][j],
                    self.geometric_intersections[j][i]
                );
                let pairing = self
                    .surface
                    .intersection_pairing(&self.curves[i].homology, &self.curves[j].homology)?;
                assert!(
                    pairing.unsigned_abs() as u32 <= self.geometric_intersections[i][j],
                    "homological pairing exceeds geometric intersection for ({}, {})",
                    self.curves[i].name,
                    self.curves[j].name
                );
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Mat;

    fn s3() -> Surface {
        Surface::new(3).unwrap()
    }

    #[test]
    fn genus_below_three_rejected() {
        assert!(Surface::new(2).is_err());
    }

    #[test]
    fn pairing_conventions() {
        let s = s3();
        let mut x1 = vec![0; 6];
        x1[0] = 1;
        let mut y1 = vec![0; 6];
        y1[3] = 1;
        let mut x2 = vec![0; 6];
        x2[1] = 1;
        assert_eq!(s.intersection_pairing(&x1, &y1).unwrap(), 1);
        assert_eq!(s.intersection_pairing(&x1, &x2).unwrap(), 0);
        assert_eq!(s.intersection_pairing(&y1, &x1).unwrap(), -1);
        assert!(s.intersection_pairing(&x1, &[0; 4]).is_err());
    }

    #[test]
    fn pairing_is_antisymmetric_and_unimodular() {
        let s = s3();
        // Gram matrix in the standard basis has determinant 1.
        let n = s.homology_rank();
        let gram = Mat::from_fn(n, n, |i, j| {
            let mut u = vec![0i64; n];
            let mut v = vec![0i64; n];
            u[i] = 1;
            v[j] = 1;
            crate::linalg::Rat::from(s.intersection_pairing(&u, &v).unwrap())
        });
        assert_eq!(gram.det(), crate::linalg::Rat::one());
        assert_eq!(&-&gram, &gram.transpose());
    }

    /// Oracle for "standardly embedded": consecutive classes pair to ±1,
    /// distant ones to 0, and the classes are linearly independent.
    fn assert_standardly_embedded(s: &Surface, chain: &[CurveClass]) {
        for (i, a) in chain.iter().enumerate() {
            for (j, b) in chain.iter().enumerate().skip(i + 1) {
                let p = s.intersection_pairing(&a.homology, &b.homology).unwrap();
                if j == i + 1 {
                    assert_eq!(p.abs(), 1, "consecutive pair ({i},{j})");
                } else {
                    assert_eq!(p, 0, "distant pair ({i},{j})");
                }
            }
        }
        let m = Mat::from_fn(s.homology_rank(), chain.len(), |r, c| {
            crate::linalg::Rat::from(chain[c].homology[r])
        });
        assert_eq!(m.rank(), chain.len(), "chain classes must be independent");
    }

    #[test]
    fn standard_chain_examples() {
        let s = s3();
        let chain = s.standard_chain(4).unwrap();
        let homs: Vec<Vec<i64>> = chain.iter().map(|c| c.homology.clone()).collect();
        assert_eq!(
            homs,
            vec![
                vec![1, 0, 0, 0, 0, 0],
                vec![0, 0, 0, 1, 0, 0],
                vec![1, 1, 0, 0, 0, 0],
                vec![0, 0, 0, 0, 1, 0],
            ]
        );
        assert_standardly_embedded(&s, &chain);

        assert_eq!(s.standard_chain(1).unwrap().len(), 1);
        assert!(s.standard_chain(7).is_err());

        let s4 = Surface::new(4).unwrap();
        let chain6 = s4.standard_chain(6).unwrap();
        let expect = vec![
            vec![1, 0, 0, 0, 0, 0, 0, 0],
            vec![0, 0, 0, 0, 1, 0, 0, 0],
            vec![1, 1, 0, 0, 0, 0, 0, 0],
            vec![0, 0, 0, 0, 0, 1, 0, 0],
            vec![0, 1, 1, 0, 0, 0, 0, 0],
            vec![0, 0, 0, 0, 0, 0, 1, 0],
        ];
        let homs6: Vec<Vec<i64>> = chain6.iter().map(|c| c.homology.clone()).collect();
        assert_eq!(homs6, expect);
        assert_standardly_embedded(&s4, &chain6);
    }

    #[test]
    fn standard_chain_passes_oracle_for_all_lengths() {
        for g in 3..=5 {
            let s = Surface::new(g).unwrap();
            for k in 1..=2 * g {
                assert_standardly_embedded(&s, &s.standard_chain(k).unwrap());
            }
        }
    }

    #[test]
    fn generator_system_shape() {
        let s = s3();
        let sys = s.generator_curve_system();
        assert_eq!(sys.curves.len(), 7);
        sys.validate().unwrap();
        // Consecutive chain pairs meet once geometrically.
        for i in 1..6 {
            assert_eq!(sys.geometric(i, i + 1), 1);
        }
        // Exactly one intersecting pair outside the chain pattern: (a0, a4).
        let mut off_chain_pairs = Vec::new();
        for i in 0..7 {
            for j in (i + 1)..7 {
                let adjacent_chain = i >= 1 && j == i + 1;
                if sys.geometric(i, j) != 0 && !adjacent_chain {
                    off_chain_pairs.push((i, j));
                }
            }
        }
        assert_eq!(off_chain_pairs, vec![(0, 4)]);
    }

    #[test]
    fn generator_homology_spans_everything() {
        for g in 3..=4 {
            let s = Surface::new(g).unwrap();
            let sys = s.generator_curve_system();
            let m = Mat::from_fn(s.homology_rank(), sys.curves.len(), |r, c| {
                crate::linalg::Rat::from(sys.curves[c].homology[r])
            });
            assert_eq!(m.rank(), s.homology_rank());
            for c in &sys.curves {
                assert!(c.is_primitive(), "{} not primitive", c.name);
            }
        }
    }
}

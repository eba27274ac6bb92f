//! Presentation-based computation of `Z^1`, `B^1`, and `H^1` for the mapping
//! class group with matrix-module coefficients, coboundary witnesses, and the
//! surface-group connecting-map evaluation.
//!
//! A cocycle is determined by its values on generators; extending it to a
//! word is linear in those values, so the cocycle condition over every
//! catalog relator is a finite exact linear system. `Z^1` is its kernel,
//! `B^1` the image of the coboundary map, and `H^1` the quotient dimension.

use crate::linalg::{Mat, Rat, Subspace};
use crate::presentation::{evaluate_cocycle, verify_representation, RelatorCatalog};
use crate::reps::{dual_rep, Representation};
use crate::surface::Surface;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Whether a cocycle obeys the left rule `f(gh) = f(g) + g f(h)` or the
/// right rule `f(gh) = f(h) + f(g) . h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Chirality {
    Left,
    Right,
}

/// Errors from cohomology operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CohomologyError {
    #[error("coefficient value shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("representation fails relator verification")]
    UnverifiedRepresentation,
    #[error("word evaluation failed: {0}")]
    Evaluation(#[from] crate::presentation::PresentationError),
}

/// A 1-cocycle: a coefficient action, a chirality, and one matrix value per
/// generator, extended to words by the cocycle rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocycle {
    base: Representation,
    chirality: Chirality,
    values: BTreeMap<String, Mat>,
}

impl Cocycle {
    /// Values must exist for exactly the base generators and share one
    /// shape, compatible with the chirality: `dim x b` for left cocycles,
    /// `a x dim` for right ones.
    pub fn new(
        base: Representation,
        chirality: Chirality,
        values: BTreeMap<String, Mat>,
    ) -> Result<Self, CohomologyError> {
        let dim = base.dimension();
        let mut shape: Option<(usize, usize)> = None;
        for name in base.names() {
            let v = values.get(name).ok_or_else(|| {
                CohomologyError::ShapeMismatch(format!("missing value for generator {name:?}"))
            })?;
            match shape {
                None => shape = Some((v.rows(), v.cols())),
                Some(s) => {
                    if s != (v.rows(), v.cols()) {
                        return Err(CohomologyError::ShapeMismatch(
                            "generator values differ in shape".to_owned(),
                        ));
                    }
                }
            }
        }
        if values.len() != base.names().len() {
            return Err(CohomologyError::ShapeMismatch(
                "values for unknown generators present".to_owned(),
            ));
        }
        let (vr, vc) = shape.expect("representations have generators");
        let compatible = match chirality {
            Chirality::Left => vr == dim,
            Chirality::Right => vc == dim,
        };
        if !compatible {
            return Err(CohomologyError::ShapeMismatch(format!(
                "value shape {vr}x{vc} incompatible with {chirality:?} action of dimension {dim}"
            )));
        }
        Ok(Cocycle {
            base,
            chirality,
            values,
        })
    }

    pub fn base(&self) -> &Representation {
        &self.base
    }

    pub fn chirality(&self) -> Chirality {
        self.chirality
    }

    pub fn values(&self) -> &BTreeMap<String, Mat> {
        &self.values
    }

    pub fn value(&self, name: &str) -> Option<&Mat> {
        self.values.get(name)
    }

    pub fn value_shape(&self) -> (usize, usize) {
        let v = self.values.values().next().expect("nonempty");
        (v.rows(), v.cols())
    }

    /// Entrywise sum (same base, chirality, and shape).
    pub fn add(&self, other: &Cocycle) -> Cocycle {
        assert_eq!(self.chirality, other.chirality);
        assert_eq!(self.value_shape(), other.value_shape());
        let values = self
            .values
            .iter()
            .map(|(k, v)| (k.clone(), v + other.values.get(k).expect("same generators")))
            .collect();
        Cocycle {
            base: self.base.clone(),
            chirality: self.chirality,
            values,
        }
    }

    pub fn scale(&self, s: &Rat) -> Cocycle {
        Cocycle {
            base: self.base.clone(),
            chirality: self.chirality,
            values: self.values.iter().map(|(k, v)| (k.clone(), v.scale(s))).collect(),
        }
    }

    /// Re-assert the defining invariant: the extension vanishes on every
    /// catalog relator.
    pub fn validate(&self, catalog: &RelatorCatalog) -> Result<(), CohomologyError> {
        for relator in &catalog.relators {
            let value = evaluate_cocycle(&self.base, self, &relator.word)?;
            if !value.is_zero() {
                return Err(CohomologyError::ShapeMismatch(format!(
                    "cocycle does not vanish on a {:?} relator",
                    relator.tag
                )));
            }
        }
        Ok(())
    }
}

/// The coboundary `δ(v)(s) = (ρ(s) - 1) v` of a coefficient `v` (left rule).
pub fn coboundary(rep: &Representation, v: &Mat) -> Result<Cocycle, CohomologyError> {
    if v.rows() != rep.dimension() {
        return Err(CohomologyError::ShapeMismatch(format!(
            "coefficient must have {} rows, got {}",
            rep.dimension(),
            v.rows()
        )));
    }
    let values = rep
        .iter()
        .map(|(name, m)| (name.clone(), &(m * v) - v))
        .collect();
    Cocycle::new(rep.clone(), Chirality::Left, values)
}

/// The right coboundary `δ(v)(s) = v . ρ(s) - v`.
pub fn right_coboundary(rep: &Representation, v: &Mat) -> Result<Cocycle, CohomologyError> {
    if v.cols() != rep.dimension() {
        return Err(CohomologyError::ShapeMismatch(format!(
            "coefficient must have {} columns, got {}",
            rep.dimension(),
            v.cols()
        )));
    }
    let values = rep
        .iter()
        .map(|(name, m)| (name.clone(), &(v * m) - v))
        .collect();
    Cocycle::new(rep.clone(), Chirality::Right, values)
}

/// Basis of the cocycle space together with the coboundary and cohomology
/// dimensions.
#[derive(Debug, Clone)]
pub struct CocycleSpace {
    pub z1_basis: Vec<Cocycle>,
    pub b1_dim: usize,
    pub h1_dim: usize,
}

/// Solve the relator constraints for vector-valued left cocycles
/// (`dim x 1` values). `z1_basis` spans the exact solution space; `b1_dim`
/// is the rank of the coboundary map; `h1_dim` the difference.
pub fn cocycle_space(
    rep: &Representation,
    catalog: &RelatorCatalog,
) -> Result<CocycleSpace, CohomologyError> {
    let report = verify_representation(rep, catalog)?;
    if !report.overall_pass {
        return Err(CohomologyError::UnverifiedRepresentation);
    }
    let kernel = cocycle_solution_space(rep, catalog);
    let z1_basis = (0..kernel.dim())
        .map(|k| {
            let col = kernel.basis().col(k);
            cocycle_from_stacked(rep, &col)
        })
        .collect::<Vec<_>>();
    let b1_dim = coboundary_rank(rep);
    let h1_dim = z1_basis.len() - b1_dim;
    Ok(CocycleSpace {
        z1_basis,
        b1_dim,
        h1_dim,
    })
}

/// Right-module counterpart, realized by transposition: a right cocycle for
/// `ρ` corresponds to a left cocycle `χ` for the dual action via
/// `φ(s) = -χ(s)^T ρ(s)`.
pub fn right_cocycle_space(
    rep: &Representation,
    catalog: &RelatorCatalog,
) -> Result<CocycleSpace, CohomologyError> {
    let dual = dual_rep(rep);
    let left = cocycle_space(&dual, catalog)?;
    let z1_basis = left
        .z1_basis
        .iter()
        .map(|chi| translate_left_dual_to_right(rep, chi))
        .collect();
    Ok(CocycleSpace {
        z1_basis,
        b1_dim: left.b1_dim,
        h1_dim: left.h1_dim,
    })
}

/// Translate a left cocycle for the dual representation into a right cocycle
/// for the representation itself.
pub fn translate_left_dual_to_right(rep: &Representation, chi: &Cocycle) -> Cocycle {
    assert_eq!(chi.chirality(), Chirality::Left);
    let values = rep
        .iter()
        .map(|(name, m)| {
            let v = chi.value(name).expect("same generators");
            (name.clone(), -&(&v.transpose() * m))
        })
        .collect();
    Cocycle::new(rep.clone(), Chirality::Right, values).expect("shapes agree")
}

/// Inverse translation: a right cocycle for `ρ` into a left cocycle for the
/// dual action.
pub fn translate_right_to_left_dual(rep: &Representation, phi: &Cocycle) -> Cocycle {
    assert_eq!(phi.chirality(), Chirality::Right);
    let dual = dual_rep(rep);
    let values = dual
        .iter()
        .map(|(name, mdual)| {
            let v = phi.value(name).expect("same generators");
            (name.clone(), -&(mdual * &v.transpose()))
        })
        .collect();
    Cocycle::new(dual, Chirality::Left, values).expect("shapes agree")
}

/// Witness `v` with `δ(v) = φ`, or `None` when the class is nontrivial.
pub fn is_coboundary(phi: &Cocycle) -> Option<Mat> {
    let rep = phi.base();
    let dim = rep.dimension();
    match phi.chirality() {
        Chirality::Left => {
            let mut lhs = Mat::zeros(0, dim);
            let (_, b) = phi.value_shape();
            let mut rhs = Mat::zeros(0, b);
            for (name, m) in rep.iter() {
                lhs = lhs.vstack(&(m - &Mat::identity(dim)));
                rhs = rhs.vstack(phi.value(name).expect("same generators"));
            }
            lhs.solve(&rhs)
        }
        Chirality::Right => {
            // v (ρ(s) - 1) = φ(s) transposes to (ρ(s) - 1)^T v^T = φ(s)^T.
            let mut lhs = Mat::zeros(0, dim);
            let (a, _) = phi.value_shape();
            let mut rhs = Mat::zeros(0, a);
            for (name, m) in rep.iter() {
                lhs = lhs.vstack(&(m - &Mat::identity(dim)).transpose());
                rhs = rhs.vstack(&phi.value(name).expect("same generators").transpose());
            }
            lhs.solve(&rhs).map(|vt| vt.transpose())
        }
    }
}

/// A deterministic representative of a nonzero class in `H^1` with
/// coefficients in the representation: the first kernel-echelon basis vector
/// independent of the coboundary space. `None` when `H^1 = 0`.
pub fn nontrivial_class(
    rep: &Representation,
    catalog: &RelatorCatalog,
    chirality: Chirality,
) -> Result<Option<Cocycle>, CohomologyError> {
    let space = match chirality {
        Chirality::Left => cocycle_space(rep, catalog)?,
        Chirality::Right => right_cocycle_space(rep, catalog)?,
    };
    Ok(space
        .z1_basis
        .into_iter()
        .find(|phi| is_coboundary(phi).is_none()))
}

/// The nontrivial class in `H^1` with first-homology coefficients for the
/// symplectic action; deterministic, and guaranteed by the one-dimensionality
/// of that cohomology.
pub fn nontrivial_h_class(surface: &Surface) -> Cocycle {
    let rep = crate::reps::symplectic_rep(surface);
    let catalog = crate::io::load_relator_catalog(surface.genus()).expect("catalog available");
    nontrivial_class(&rep, &catalog, Chirality::Left)
        .expect("symplectic representation verifies")
        .expect("H^1 with homology coefficients is nonzero")
}

// ---------------------------------------------------------------------------
// Solver internals
// ---------------------------------------------------------------------------

/// Stack of generator values: a cocycle with `d x 1` values becomes one
/// column of height `n*d`.
fn cocycle_from_stacked(rep: &Representation, stacked: &Mat) -> Cocycle {
    let d = rep.dimension();
    let values = rep
        .names()
        .iter()
        .enumerate()
        .map(|(i, name)| (name.clone(), stacked.submatrix(i * d, (i + 1) * d, 0, 1)))
        .collect();
    Cocycle::new(rep.clone(), Chirality::Left, values).expect("shapes agree")
}

/// Kernel of the relator-constraint system in the stacked generator values.
fn cocycle_solution_space(rep: &Representation, catalog: &RelatorCatalog) -> Subspace {
    let d = rep.dimension();
    let n = rep.names().len();
    let inverses: Vec<Mat> = rep
        .images()
        .iter()
        .map(|m| m.inverse().expect("images invertible"))
        .collect();
    let index: BTreeMap<&str, usize> = rep
        .names()
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_str(), i))
        .collect();
    let mut constraint = Mat::zeros(0, n * d);
    for relator in &catalog.relators {
        let mut blocks = vec![Mat::zeros(d, d); n];
        let mut prefix = Mat::identity(d);
        for (name, sign) in relator.word.steps() {
            let i = index[name];
            if sign > 0 {
                blocks[i] = &blocks[i] + &prefix;
                prefix = &prefix * &rep.images()[i];
            } else {
                prefix = &prefix * &inverses[i];
                blocks[i] = &blocks[i] - &prefix;
            }
        }
        let mut row = Mat::zeros(d, n * d);
        for (i, b) in blocks.iter().enumerate() {
            row.set_block(0, i * d, b);
        }
        constraint = constraint.vstack(&row);
    }
    constraint.kernel()
}

/// Rank of the coboundary map, i.e. `dim - dim(fixed space)`.
fn coboundary_rank(rep: &Representation) -> usize {
    let d = rep.dimension();
    let mut stacked = Mat::zeros(0, d);
    for (_, m) in rep.iter() {
        stacked = stacked.vstack(&(m - &Mat::identity(d)));
    }
    stacked.rank()
}

// ---------------------------------------------------------------------------
// The surface-group connecting map
// ---------------------------------------------------------------------------

/// Evaluate the connecting map for the coefficient sequence
/// `0 -> C -> C ⊕_φ H -> H -> 0` over the fundamental group of the closed
/// genus-`g` surface, acting through point-pushing (trivially on `H`,
/// pairing-twisted on the line), with `φ = λ . ab` the scaled abelianization
/// cocycle. The image of the abelianization class in degree-two cohomology
/// is identified with the coinvariant scalar; the result equals `2 g λ`.
pub fn connecting_map_surface_group(genus: usize, lambda: &Rat) -> Rat {
    connecting_map_with_lifts(genus, lambda, &vec![Rat::zero(); 2 * genus])
}

/// Same computation with explicit lift offsets in the line submodule; the
/// output does not depend on them.
pub fn connecting_map_with_lifts(genus: usize, lambda: &Rat, lift_offsets: &[Rat]) -> Rat {
    assert!(genus >= 3, "the standing assumption is genus >= 3");
    let h_rank = 2 * genus;
    assert_eq!(lift_offsets.len(), h_rank, "one offset per generator lift");
    let surface = Surface::new(genus).expect("genus >= 3");

    // Generator action on C ⊕_φ H: top-right row is λ <[z], .>.
    let action = |z: usize| -> Mat {
        let mut basis = vec![0i64; h_rank];
        basis[z] = 1;
        let mut m = Mat::identity(1 + h_rank);
        for c in 0..h_rank {
            let mut e = vec![0i64; h_rank];
            e[c] = 1;
            let pairing = surface.intersection_pairing(&basis, &e).expect("lengths");
            m[(0, 1 + c)] = lambda * &Rat::from(pairing);
        }
        m
    };
    // Index convention: generator 2i is x_{i+1}, generator 2i+1 is y_{i+1};
    // x_i has homology slot i-1, y_i slot genus + i - 1.
    let slot = |pair: usize, is_y: bool| -> usize {
        if is_y {
            genus + pair
        } else {
            pair
        }
    };
    let lift = |z: usize, offset: &Rat| -> Mat {
        let mut v = Mat::zeros(1 + h_rank, 1);
        v[(0, 0)] = offset.clone();
        v[(1 + z, 0)] = Rat::one();
        v
    };

    let eye = Mat::identity(1 + h_rank);
    let mut prefix = Mat::identity(1 + h_rank);
    let mut total = Mat::zeros(1 + h_rank, 1);
    for i in 0..genus {
        let gx = action(slot(i, false));
        let gy = action(slot(i, true));
        let lift_x = lift(slot(i, false), &lift_offsets[2 * i]);
        let lift_y = lift(slot(i, true), &lift_offsets[2 * i + 1]);
        let term = &(&(&eye - &gy) * &lift_x) + &(&(&gx - &eye) * &lift_y);
        total = &total + &(&prefix * &term);
        // Extend the prefix by the commutator [x_i, y_i].
        let commutator = &(&(&gx * &gy) * &gx.inverse().expect("invertible"))
            * &gy.inverse().expect("invertible");
        prefix = &prefix * &commutator;
    }
    // The value lands in the line submodule.
    for r in 1..=h_rank {
        assert!(total[(r, 0)].is_zero(), "connecting value must lie in the line");
    }
    total[(0, 0)].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::load_relator_catalog;
    use crate::reps::symplectic_rep;
    use rand::{Rng, SeedableRng};

    fn s3() -> Surface {
        Surface::new(3).unwrap()
    }

    #[test]
    fn coboundary_of_zero_is_zero() {
        let rep = symplectic_rep(&s3());
        let phi = coboundary(&rep, &Mat::zeros(6, 1)).unwrap();
        assert!(phi.values().values().all(Mat::is_zero));
    }

    #[test]
    fn coboundary_of_trivial_rep_is_zero() {
        let s = s3();
        let cat = load_relator_catalog(3).unwrap();
        let trivial = Representation::new(
            s,
            cat.generators.clone(),
            vec![Mat::identity(2); cat.generators.len()],
            cat.curve_system_hash.clone(),
        )
        .unwrap();
        let v = Mat::from_i64(&[&[3], &[-4]]);
        let phi = coboundary(&trivial, &v).unwrap();
        assert!(phi.values().values().all(Mat::is_zero));
    }

    #[test]
    fn coboundary_evaluates_as_rho_minus_one_on_words() {
        let s = s3();
        let rep = symplectic_rep(&s);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let v = Mat::from_fn(6, 1, |_, _| Rat::from(rng.gen_range(-4i64..=4)));
        let phi = coboundary(&rep, &v).unwrap();
        for _ in 0..12 {
            let w = crate::presentation::tests::random_word(&mut rng, &rep, 7);
            let lhs = evaluate_cocycle(&rep, &phi, &w).unwrap();
            let rho_w = crate::presentation::evaluate_word(&rep, &w).unwrap();
            let rhs = &(&rho_w * &v) - &v;
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn cocycle_identity_on_random_word_pairs() {
        let s = s3();
        let rep = symplectic_rep(&s);
        let cat = load_relator_catalog(3).unwrap();
        let space = cocycle_space(&rep, &cat).unwrap();
        let phi = &space.z1_basis[0];
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..12 {
            let w1 = crate::presentation::tests::random_word(&mut rng, &rep, 6);
            let w2 = crate::presentation::tests::random_word(&mut rng, &rep, 6);
            let lhs = evaluate_cocycle(&rep, phi, &w1.concat(&w2)).unwrap();
            let rho_w1 = crate::presentation::evaluate_word(&rep, &w1).unwrap();
            let rhs = &evaluate_cocycle(&rep, phi, &w1).unwrap()
                + &(&rho_w1 * &evaluate_cocycle(&rep, phi, &w2).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn connecting_map_matches_closed_form() {
        assert_eq!(connecting_map_surface_group(3, &Rat::one()), Rat::from(6));
        assert_eq!(connecting_map_surface_group(4, &Rat::zero()), Rat::zero());
        assert_eq!(
            connecting_map_surface_group(4, &Rat::from_frac(1, 2)),
            Rat::from(4)
        );
    }

    #[test]
    fn connecting_map_is_lift_independent() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        for g in [3usize, 4, 5] {
            let lambda = Rat::from_frac(rng.gen_range(-5i64..=5), rng.gen_range(1i64..=4));
            let offsets: Vec<Rat> = (0..2 * g)
                .map(|_| Rat::from_frac(rng.gen_range(-6i64..=6), rng.gen_range(1i64..=3)))
                .collect();
            assert_eq!(
                connecting_map_with_lifts(g, &lambda, &offsets),
                connecting_map_surface_group(g, &lambda)
            );
        }
    }
}

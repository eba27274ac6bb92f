//! Words in Dehn-twist generators, the relator catalog for the mapping class
//! group of a once-bounded surface, and evaluation of representations and
//! cocycles on words.
//!
//! The catalog is a Wajnryb-type finite presentation over the Humphries
//! generator curves: braid and commutation relations read off the geometric
//! intersection pattern, one three-chain relation, and one lantern relation.

use crate::cohomology::{Chirality, Cocycle};
use crate::linalg::Mat;
use crate::reps::Representation;
use crate::surface::{CurveSystem, Surface};
use serde::{Deserialize, Serialize};

/// Errors from word and relator evaluation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PresentationError {
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("generator image for {0:?} is not invertible")]
    NotInvertible(String),
    #[error("curve system hash mismatch: catalog {catalog}, representation {representation}")]
    HashMismatch {
        catalog: String,
        representation: String,
    },
}

/// A freely reduced word in named generators with integer exponents.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupWord {
    letters: Vec<(String, i64)>,
}

impl GroupWord {
    pub fn identity() -> Self {
        GroupWord {
            letters: Vec::new(),
        }
    }

    pub fn generator(name: &str, exponent: i64) -> Self {
        let mut w = GroupWord::identity();
        w.push(name, exponent);
        w
    }

    /// Build from a list of `(name, exponent)` pairs, reducing freely.
    pub fn from_letters<S: AsRef<str>>(letters: &[(S, i64)]) -> Self {
        let mut w = GroupWord::identity();
        for (name, e) in letters {
            w.push(name.as_ref(), *e);
        }
        w
    }

    /// Positive single letters in sequence, e.g. `of_gens(&["a4","a3"])`.
    pub fn of_gens<S: AsRef<str>>(names: &[S]) -> Self {
        let mut w = GroupWord::identity();
        for n in names {
            w.push(n.as_ref(), 1);
        }
        w
    }

    fn push(&mut self, name: &str, exponent: i64) {
        if exponent == 0 {
            return;
        }
        if let Some(last) = self.letters.last_mut() {
            if last.0 == name {
                last.1 += exponent;
                if last.1 == 0 {
                    self.letters.pop();
                }
                return;
            }
        }
        self.letters.push((name.to_owned(), exponent));
    }

    pub fn letters(&self) -> &[(String, i64)] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Total letter count with multiplicity.
    pub fn len(&self) -> usize {
        self.letters.iter().map(|(_, e)| e.unsigned_abs() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        let mut w = self.clone();
        for (name, e) in &other.letters {
            w.push(name, *e);
        }
        w
    }

    pub fn inverse(&self) -> GroupWord {
        let mut w = GroupWord::identity();
        for (name, e) in self.letters.iter().rev() {
            w.push(name, -e);
        }
        w
    }

    pub fn pow(&self, k: i64) -> GroupWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut w = GroupWord::identity();
        for _ in 0..k.unsigned_abs() {
            w = w.concat(&base);
        }
        w
    }

    /// `conj(w) = conjugator . w . conjugator^{-1}`.
    pub fn conjugated_by(&self, conjugator: &GroupWord) -> GroupWord {
        conjugator.concat(self).concat(&conjugator.inverse())
    }

    /// Exponent sum per generator, in the order given.
    pub fn exponent_sums(&self, names: &[String]) -> Vec<i64> {
        let mut sums = vec![0i64; names.len()];
        for (name, e) in &self.letters {
            if let Some(i) = names.iter().position(|n| n == name) {
                sums[i] += e;
            }
        }
        sums
    }

    /// Letters expanded to single `(name, ±1)` steps.
    pub fn steps(&self) -> impl Iterator<Item = (&str, i64)> {
        self.letters.iter().flat_map(|(name, e)| {
            let sign = e.signum();
            (0..e.unsigned_abs()).map(move |_| (name.as_str(), sign))
        })
    }
}

/// Relator classes in the catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RelatorTag {
    Braid,
    Commutation,
    Lantern,
    Chain,
    Other,
}

/// A tagged relator word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relator {
    pub tag: RelatorTag,
    pub word: GroupWord,
}

/// The bundled finite presentation over the generator curve system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelatorCatalog {
    pub surface: Surface,
    pub generators: Vec<String>,
    pub relators: Vec<Relator>,
    pub curve_system_hash: String,
}

/// The full relator catalog for the given surface. Complete in the sense
/// pinned by the cohomology acceptance checks: the first-cohomology
/// dimensions computed from it match the known values.
pub fn relator_catalog(surface: &Surface) -> RelatorCatalog {
    let system = surface.generator_curve_system();
    let hash = crate::io::curve_system_hash(&system);
    let mut relators = pairwise_relators(&system);
    relators.push(Relator {
        tag: RelatorTag::Chain,
        word: chain_relator(),
    });
    relators.push(Relator {
        tag: RelatorTag::Lantern,
        word: lantern_relator(),
    });
    RelatorCatalog {
        surface: *surface,
        generators: system.names(),
        relators,
        curve_system_hash: hash,
    }
}

/// Braid relators `aba b^-1 a^-1 b^-1` for intersection-one pairs and
/// commutators `ab a^-1 b^-1` for disjoint pairs.
fn pairwise_relators(system: &CurveSystem) -> Vec<Relator> {
    let n = system.curves.len();
    let mut relators = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let a = system.curves[i].name.as_str();
            let b = system.curves[j].name.as_str();
            match system.geometric(i, j) {
                0 => relators.push(Relator {
                    tag: RelatorTag::Commutation,
                    word: GroupWord::from_letters(&[(a, 1), (b, 1), (a, -1), (b, -1)]),
                }),
                1 => relators.push(Relator {
                    tag: RelatorTag::Braid,
                    word: GroupWord::from_letters(&[
                        (a, 1),
                        (b, 1),
                        (a, 1),
                        (b, -1),
                        (a, -1),
                        (b, -1),
                    ]),
                }),
                k => unreachable!("generator curves meet at most once, got {k}"),
            }
        }
    }
    relators
}

/// Three-chain relation: `(a1 a2 a3)^4 = a0 . (w a0 w^{-1})` with
/// `w = a4 a3 a2 a1^2 a2 a3 a4`; the two sides twist along the boundary
/// curves of a neighborhood of the chain `a1, a2, a3`.
fn chain_relator() -> GroupWord {
    let lhs = GroupWord::of_gens(&["a1", "a2", "a3"]).pow(4);
    let w = GroupWord::from_letters(&[("a4", 1), ("a3", 1), ("a2", 1), ("a1", 2), ("a2", 1), ("a3", 1), ("a4", 1)]);
    let b0 = GroupWord::generator("a0", 1).conjugated_by(&w);
    let rhs = GroupWord::generator("a0", 1).concat(&b0);
    lhs.concat(&rhs.inverse())
}

/// Lantern relation `a0 b2 b1 = a1 a3 a5 b0` over the four-holed sphere
/// bounded by `a1, a3, a5` and the second boundary curve of the three-chain
/// neighborhood.
fn lantern_relator() -> GroupWord {
    let w = GroupWord::from_letters(&[("a4", 1), ("a3", 1), ("a2", 1), ("a1", 2), ("a2", 1), ("a3", 1), ("a4", 1)]);
    let b0 = GroupWord::generator("a0", 1).conjugated_by(&w);
    let u1 = GroupWord::of_gens(&["a4", "a5", "a3", "a4"]);
    let b1 = GroupWord::generator("a0", 1).conjugated_by(&u1);
    let u2 = GroupWord::of_gens(&["a2", "a3", "a1", "a2"]);
    let b2 = b1.conjugated_by(&u2);
    let lhs = GroupWord::generator("a0", 1).concat(&b2).concat(&b1);
    let rhs = GroupWord::of_gens(&["a1", "a3", "a5"]).concat(&b0);
    lhs.concat(&rhs.inverse())
}

impl RelatorCatalog {
    /// Append a relator (used to check consequence-invariance of cohomology).
    pub fn with_extra_relator(&self, relator: Relator) -> RelatorCatalog {
        let mut cat = self.clone();
        cat.relators.push(relator);
        cat
    }
}

/// Ordered product of generator images and inverses over the word.
pub fn evaluate_word(rep: &Representation, word: &GroupWord) -> Result<Mat, PresentationError> {
    let mut product = Mat::identity(rep.dimension());
    for (name, exponent) in word.letters() {
        let image = rep
            .image(name)
            .map_err(|_| PresentationError::UnknownGenerator(name.clone()))?;
        let power = image
            .pow(*exponent)
            .map_err(|_| PresentationError::NotInvertible(name.clone()))?;
        product = &product * &power;
    }
    Ok(product)
}

/// Extend a cocycle from generator values to a word by the cocycle rule:
/// `f(gh) = f(g) + g f(h)` for left coefficients, `f(gh) = f(h) + f(g).h`
/// for right ones, with `f(s^{-1}) = -s^{-1} f(s)` resp. `-f(s) s^{-1}`.
pub fn evaluate_cocycle(
    rep: &Representation,
    phi: &Cocycle,
    word: &GroupWord,
) -> Result<Mat, PresentationError> {
    let (vr, vc) = phi.value_shape();
    match phi.chirality() {
        Chirality::Left => {
            let mut acc = Mat::zeros(vr, vc);
            let mut prefix = Mat::identity(rep.dimension());
            for (name, sign) in word.steps() {
                let image = rep
                    .image(name)
                    .map_err(|_| PresentationError::UnknownGenerator(name.to_owned()))?;
                let value = phi
                    .value(name)
                    .ok_or_else(|| PresentationError::UnknownGenerator(name.to_owned()))?;
                if sign > 0 {
                    acc = &acc + &(&prefix * value);
                    prefix = &prefix * image;
                } else {
                    prefix = &prefix
                        * &image
                            .inverse()
                            .ok_or_else(|| PresentationError::NotInvertible(name.to_owned()))?;
                    acc = &acc - &(&prefix * value);
                }
            }
            Ok(acc)
        }
        Chirality::Right => {
            let mut acc = Mat::zeros(vr, vc);
            let mut suffix = Mat::identity(rep.dimension());
            let steps: Vec<(&str, i64)> = word.steps().collect();
            for (name, sign) in steps.into_iter().rev() {
                let image = rep
                    .image(name)
                    .map_err(|_| PresentationError::UnknownGenerator(name.to_owned()))?;
                let value = phi
                    .value(name)
                    .ok_or_else(|| PresentationError::UnknownGenerator(name.to_owned()))?;
                if sign > 0 {
                    acc = &acc + &(value * &suffix);
                    suffix = image * &suffix;
                } else {
                    suffix = &image
                        .inverse()
                        .ok_or_else(|| PresentationError::NotInvertible(name.to_owned()))?
                        * &suffix;
                    acc = &acc - &(value * &suffix);
                }
            }
            Ok(acc)
        }
    }
}

/// Per-relator verification result, in catalog order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelatorResult {
    pub index: usize,
    pub tag: RelatorTag,
    pub pass: bool,
}

/// The outcome of checking every catalog relator against a representation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub overall_pass: bool,
    pub relators: Vec<RelatorResult>,
}

/// Evaluate every relator; a relator passes iff its image is exactly the
/// identity matrix.
pub fn verify_representation(
    rep: &Representation,
    catalog: &RelatorCatalog,
) -> Result<VerificationReport, PresentationError> {
    if rep.curve_system_hash() != catalog.curve_system_hash {
        return Err(PresentationError::HashMismatch {
            catalog: catalog.curve_system_hash.clone(),
            representation: rep.curve_system_hash().to_owned(),
        });
    }
    let mut results = Vec::with_capacity(catalog.relators.len());
    let mut overall = true;
    for (index, relator) in catalog.relators.iter().enumerate() {
        let image = evaluate_word(rep, &relator.word)?;
        let pass = image.is_identity();
        overall &= pass;
        results.push(RelatorResult {
            index,
            tag: relator.tag,
            pass,
        });
    }
    Ok(VerificationReport {
        overall_pass: overall,
        relators: results,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Rat;
    use crate::reps::{symplectic_rep, Representation};
    use crate::surface::Surface;
    use rand::{Rng, SeedableRng};

    fn s3() -> Surface {
        Surface::new(3).unwrap()
    }

    #[test]
    fn words_reduce_freely() {
        let w = GroupWord::from_letters(&[("a", 1), ("a", 1), ("b", 1), ("b", -1), ("a", -2)]);
        assert!(w.is_identity());
        let v = GroupWord::from_letters(&[("a", 2), ("b", 1)]);
        assert_eq!(v.inverse().letters(), &[("b".to_owned(), -1), ("a".to_owned(), -2)]);
        assert!(v.concat(&v.inverse()).is_identity());
    }

    #[test]
    fn catalog_shape_for_genus_three() {
        let cat = relator_catalog(&s3());
        assert_eq!(cat.generators.len(), 7);
        let braid = cat
            .relators
            .iter()
            .filter(|r| r.tag == RelatorTag::Braid)
            .count();
        let comm = cat
            .relators
            .iter()
            .filter(|r| r.tag == RelatorTag::Commutation)
            .count();
        // 5 adjacent chain pairs + the off-chain pair (a0, a4).
        assert_eq!(braid, 6);
        assert_eq!(comm, 21 - 6);
        assert!(cat.relators.iter().any(|r| r.tag == RelatorTag::Chain));
        assert!(cat.relators.iter().any(|r| r.tag == RelatorTag::Lantern));
    }

    #[test]
    fn braid_relators_match_intersection_pattern() {
        let s = s3();
        let sys = s.generator_curve_system();
        let cat = relator_catalog(&s);
        for r in cat.relators.iter().filter(|r| r.tag == RelatorTag::Braid) {
            let letters = r.word.letters();
            assert_eq!(letters.len(), 6);
            let a = &letters[0].0;
            let b = &letters[1].0;
            let i = sys.index_of(a).unwrap();
            let j = sys.index_of(b).unwrap();
            assert_eq!(sys.geometric(i, j), 1);
        }
        for r in cat
            .relators
            .iter()
            .filter(|r| r.tag == RelatorTag::Commutation)
        {
            let letters = r.word.letters();
            let i = sys.index_of(&letters[0].0).unwrap();
            let j = sys.index_of(&letters[1].0).unwrap();
            assert_eq!(sys.geometric(i, j), 0);
        }
    }

    #[test]
    fn empty_word_evaluates_to_identity() {
        let rep = symplectic_rep(&s3());
        let m = evaluate_word(&rep, &GroupWord::identity()).unwrap();
        assert!(m.is_identity());
        let single = evaluate_word(&rep, &GroupWord::generator("a1", 1)).unwrap();
        assert_eq!(&single, rep.image("a1").unwrap());
    }

    #[test]
    fn unknown_generator_is_reported() {
        let rep = symplectic_rep(&s3());
        let err = evaluate_word(&rep, &GroupWord::generator("z9", 1)).unwrap_err();
        assert_eq!(err, PresentationError::UnknownGenerator("z9".to_owned()));
    }

    #[test]
    fn braid_relator_holds_symplectically() {
        let s = s3();
        let rep = symplectic_rep(&s);
        let braid = GroupWord::from_letters(&[
            ("a1", 1),
            ("a2", 1),
            ("a1", 1),
            ("a2", -1),
            ("a1", -1),
            ("a2", -1),
        ]);
        assert!(evaluate_word(&rep, &braid).unwrap().is_identity());
    }

    #[test]
    fn evaluation_is_multiplicative_on_concatenation() {
        let s = s3();
        let rep = symplectic_rep(&s);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let w1 = random_word(&mut rng, &rep, 6);
            let w2 = random_word(&mut rng, &rep, 6);
            let lhs = evaluate_word(&rep, &w1.concat(&w2)).unwrap();
            let rhs = &evaluate_word(&rep, &w1).unwrap() * &evaluate_word(&rep, &w2).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn relator_rewrite_leaves_evaluation_unchanged() {
        let s = s3();
        let rep = symplectic_rep(&s);
        let cat = relator_catalog(&s);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..10 {
            let w = random_word(&mut rng, &rep, 8);
            let relator = &cat.relators[rng.gen_range(0..cat.relators.len())].word;
            // Insert the relator at an arbitrary cut point.
            let cut = rng.gen_range(0..=w.letters().len());
            let (head, tail) = w.letters().split_at(cut);
            let rewritten = GroupWord::from_letters(head)
                .concat(relator)
                .concat(&GroupWord::from_letters(tail));
            assert_eq!(
                evaluate_word(&rep, &w).unwrap(),
                evaluate_word(&rep, &rewritten).unwrap()
            );
        }
    }

    #[test]
    fn trivial_and_scaled_representations_verify_as_expected() {
        let s = s3();
        let cat = relator_catalog(&s);
        let names = cat.generators.clone();
        let hash = cat.curve_system_hash.clone();
        let trivial = Representation::new(
            s,
            names.clone(),
            vec![Mat::identity(3); names.len()],
            hash.clone(),
        )
        .unwrap();
        assert!(verify_representation(&trivial, &cat).unwrap().overall_pass);

        // One chain generator scaled to 2I breaks exactly the braid relators
        // touching it.
        let images: Vec<Mat> = names
            .iter()
            .map(|n| {
                if n == "a1" {
                    Mat::scalar(3, &Rat::from(2))
                } else {
                    Mat::identity(3)
                }
            })
            .collect();
        let scaled = Representation::new(s, names, images, hash).unwrap();
        let report = verify_representation(&scaled, &cat).unwrap();
        assert!(!report.overall_pass);
        for (result, relator) in report.relators.iter().zip(&cat.relators) {
            let touches_a1 = relator.word.letters().iter().any(|(n, _)| n == "a1");
            if relator.tag == RelatorTag::Braid {
                assert_eq!(result.pass, !touches_a1);
            }
            if relator.tag == RelatorTag::Commutation {
                assert!(result.pass);
            }
        }
    }

    pub(crate) fn random_word(
        rng: &mut impl Rng,
        rep: &Representation,
        max_len: usize,
    ) -> GroupWord {
        let names = rep.names();
        let len = rng.gen_range(0..=max_len);
        let letters: Vec<(String, i64)> = (0..len)
            .map(|_| {
                let name = names[rng.gen_range(0..names.len())].clone();
                let e = if rng.gen_bool(0.5) { 1 } else { -1 };
                (name, e)
            })
            .collect();
        GroupWord::from_letters(&letters)
    }
}

//! Exact-arithmetic construction, verification, and classification of
//! low-dimensional linear representations of the mapping class group of a
//! genus-`g` surface with one boundary component (`g >= 3`).
//!
//! Everything is computed over the rationals with no rounding: Dehn-twist
//! generators are given exact matrices, relators are checked by exact word
//! evaluation, first cohomology is computed from a bundled finite
//! presentation, and representations are classified up to conjugacy with
//! explicit certificates.
//!
//! The crate is organized around the pipeline:
//!
//! * [`linalg`] — exact rational matrices, kernels, echelon forms,
//!   generalized eigenspaces.
//! * [`surface`] — the symplectic homology basis, intersection pairing,
//!   standardly embedded chains, and the bundled Humphries-type curve
//!   system.
//! * [`presentation`] — words in Dehn-twist generators, the relator catalog,
//!   and evaluation of representations and cocycles on words.
//! * [`reps`] — symplectic transvections, duals, direct sums with trivial
//!   representations.
//! * [`cohomology`] — presentation-based `Z^1`/`B^1`/`H^1` computations,
//!   coboundary witnesses, and the surface-group connecting-map evaluation.
//! * [`suspension`] — affine, co-affine, and double cocycle suspensions;
//!   the unit tangent representation and its dual.
//! * [`transvection`] — extraction of rank-one twist structure and the
//!   chain-relation checks on separating twists.
//! * [`classify`] — the decision procedure sorting a verified representation
//!   into symplectic, unit-tangent, dual unit-tangent, or trivial summands,
//!   with an exact conjugating certificate.
//! * [`io`] — JSON file formats, hash-pinned bundled data, and report
//!   serialization.
//!
//! # Runnable examples
//!
//! Each major capability has a runnable example under `examples/`:
//!
//! ```text
//! cargo run --example symplectic_verification   # relator checks for the symplectic action
//! cargo run --example cohomology_dimensions     # H^1 with trivial and homological coefficients
//! cargo run --example unit_tangent_suspension   # building H-tilde and its dual from a cocycle
//! cargo run --example connecting_map            # the surface-group connecting map evaluation
//! cargo run --example transvection_identities   # braid/disjointness identities and chain normalization
//! cargo run --example johnson_kernel_check      # separating twists act trivially on suspensions
//! cargo run --example classify_representations  # end-to-end classification with certificates
//! cargo run --example generate_data             # regenerate the bundled curve/relator data
//! ```
//!
//! A thin command-line wrapper over the same pipeline ships as the `mapclass`
//! binary; see the README for its subcommands.

pub mod classify;
pub mod cohomology;
pub mod io;
pub mod linalg;
pub mod presentation;
pub mod reps;
pub mod surface;
pub mod suspension;
pub mod transvection;

//! Exact rational linear algebra: kernels, solving, echelon forms,
//! unipotence, and generalized-eigenspace filtrations.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::{LinalgError, Mat};
pub use scalar::{ParseRatError, Rat};
pub use subspace::Subspace;

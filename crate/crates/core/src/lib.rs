//! Two-term silting theory over finite-dimensional bound quiver algebras.
//!
//! The crate materializes `Λ = kQ/I` from a small text format, computes with
//! finite-dimensional modules and with the category `K_Λ` of 2-term complexes of
//! projectives, and connects silting objects, cotorsion pairs, thick subcategories,
//! torsion classes and wide subcategories. Three semistability notions for 2-term
//! complexes are provided.

pub mod algebra;
pub mod cli;
pub mod corr;
pub mod error;
pub mod field;
pub mod matrix;
pub mod rep;
pub mod silting;
pub mod stability;
pub mod twoterm;

pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use matrix::Matrix;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Default seed for every randomized search.
pub const DEFAULT_SEED: u64 = 0x5117;

pub(crate) fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small random scalar, used for generic combinations.
pub(crate) fn random_scalar<R: Rng>(field: Field, rng: &mut R) -> Scalar {
    field.from_i64(rng.random_range(-9..=9))
}

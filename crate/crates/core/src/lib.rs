//! Combinatorics of semistandard tableaux and exact truncated Schur multiple
//! zeta functions.
//!
//! The crate covers partitions and their strips, SSYT enumeration and
//! Littlewood–Richardson coefficients, the GL(N) tensor crystal, Schensted
//! row and column insertion with bumping routes, and truncated sums
//! `ζ^{(N)}_λ(s) = Σ 1/M^s` over SSYT with entries at most `N`. The symmetrized
//! Pieri and Littlewood–Richardson identities for these sums are checked as
//! exact rational equalities.
//!
//! Sums are generic over [`zeta::ZetaScalar`]: [`ExactRational`] with integer
//! exponents, or `f64`/`f32` with real exponents.

pub mod crystal;
pub mod error;
pub mod insertion;
pub mod partitions;
pub mod selftest;
pub mod tableaux;
pub mod zeta;

pub use error::{Error, Result};
pub use partitions::{Cell, Partition, RowSet};
pub use tableaux::{SkewTableau, Tableau, WeightVector, Word};

/// Arbitrary-precision rational used for exact evaluation.
pub type ExactRational = num_rational::BigRational;

/// Integer exponents, evaluated in [`ExactRational`].
pub type ExactAssignment = zeta::Assignment<u32>;

/// Real exponents, evaluated in `f64`.
pub type FloatAssignment = zeta::Assignment<f64>;

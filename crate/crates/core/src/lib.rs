//! Exact Hurwitz numbers and linear Hodge integrals.
//!
//! Connected Hurwitz numbers `H^g_α` are computed by counting ordered tuples of
//! transpositions in `S_d`, either by direct enumeration ([`engine::hurwitz_brute`])
//! or by propagating class vectors and sieving out disconnected tuples
//! ([`engine::hurwitz_class_algebra`]). The ELSV formula turns a family of such
//! numbers into values of a symmetric polynomial whose coefficients are the Hodge
//! integrals `∫ ψ_1^{d_1} ⋯ ψ_m^{d_m} λ_k`; [`hodge`] recovers them by exact
//! interpolation.
//!
//! The linear algebra ([`linalg`]) and symmetric-polynomial evaluation are generic
//! over a [`Scalar`] field so they can be exercised with floats as well, but every
//! public computation in this crate runs over [`ExactRational`].

pub mod combinatorics;
pub mod elsv;
pub mod engine;
pub mod error;
pub mod hodge;
pub mod linalg;
pub mod scalar;
pub mod verify;

pub use combinatorics::{Partition, Permutation};
pub use elsv::{HodgeIntegralTable, HodgeMonomial};
pub use engine::{CountReport, EngineChoice, EngineOptions, HurwitzInstance, Method};
pub use error::{Error, Result};
pub use hodge::ExtractionPlan;
pub use scalar::Scalar;

/// Arbitrary-precision rational in lowest terms with a positive denominator.
pub type ExactRational = num_rational::BigRational;

/// Nonnegative arbitrary-precision count of tuples.
pub type Count = num_bigint::BigUint;

/// Dense matrix over exact rationals.
pub type RationalMatrix = linalg::Matrix<ExactRational>;

/// Dense matrix over `f64`, mostly useful for comparing against the exact path.
pub type FloatMatrix = linalg::Matrix<f64>;

/// Version tag stamped on cached results; bump whenever counting logic changes.
pub const ENGINE_VERSION: &str = concat!("hurwitz-core/", env!("CARGO_PKG_VERSION"));

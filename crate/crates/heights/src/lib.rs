//! Heights on Mordell curves `y² = x³ + B`.
//!
//! Three height functions live here, all in nats:
//!
//! * the naive height `h(P) = log max(|a|, q)` of `x(P) = a/q`;
//! * the canonical height `ĥ`, normalized so that `ĥ([n]P) = n² ĥ(P)`
//!   and `ĥ ≈ ½h` up to a bounded difference;
//! * the explicit bound machinery: the congruence-class constants `C`
//!   with `ĥ(P) > (1/36) log|B| − C` for integral points (sharpened to
//!   slope `1/24` when `B` is a perfect cube), the lower end of the
//!   window for `½h(P) − ĥ(P)`, and the closed-form upper bounds on
//!   heights of points with integral multiples.
//!
//! Everything is pure and reentrant; the only floating-point arithmetic
//! is the final logarithms, with the rational bookkeeping exact.

pub mod bounds;
pub mod canonical;
pub mod diff;
pub mod error;
pub mod naive;

pub use bounds::{
    check_lower_bound, congruence_constant, lower_bound_constant, lower_bound_rules,
    multiple_height_upper_bound, LowerBoundRule,
};
pub use canonical::{canonical_height, height_estimate, HeightEstimate};
pub use diff::height_difference_interval;
pub use error::HeightError;
pub use naive::naive_height;

pub type Result<T> = std::result::Result<T, HeightError>;

//! Error type for the bounded Diophantine searches.

use thiserror::Error;

/// Failure modes of the Thue, quadratic-form, and Pell-type searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    /// The requested search box exceeds the resource guard.
    #[error("search bound {bound} exceeds the supported limit {limit}")]
    BoundTooLarge { bound: i64, limit: i64 },

    /// The quadratic form has nonnegative discriminant, so its level sets
    /// are unbounded and no finite sweep can be complete.
    #[error("quadratic form is not definite (discriminant {disc} >= 0)")]
    IndefiniteForm { disc: i128 },

    /// The coefficient list does not describe a usable binary form (empty,
    /// or with vanishing leading coefficient).
    #[error("malformed binary form: {0}")]
    MalformedForm(String),

    /// Bubbled-up failure from the polynomial root finder.
    #[error("root finding: {0}")]
    Roots(#[from] division_polynomials::DivisionPolyError),

    /// Bubbled-up failure from the exact curve arithmetic.
    #[error("curve arithmetic: {0}")]
    Curve(#[from] curve_core::CurveError),
}

//! Error type shared by the divisibility classifiers.

use thiserror::Error;

/// Failure modes of multiple classification and parametric construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifierError {
    /// The input point is torsion (or the identity). Multiples of torsion
    /// points cycle through a fixed finite set, so integrality statements
    /// about them carry no content and the classifiers refuse them.
    #[error("input point is torsion; classification applies to infinite-order points")]
    TorsionInput,

    /// `2y | 3x^2` fails, so `[2]P` already has a denominator and no
    /// doubling parameters exist.
    #[error("point is not two-divisible: 2y does not divide 3x^2")]
    NotTwoDivisible,

    /// Supplied parameters break a side condition of the construction.
    #[error("parameter invariant violated: {0}")]
    InvariantViolation(String),

    /// A routine was called outside its stated hypotheses.
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    /// The family parameter lies outside the admissible congruence class or
    /// produces a coefficient the library cannot represent.
    #[error("inadmissible family parameter: {0}")]
    InadmissibleParameter(String),

    /// The point is not an integral point on the given curve.
    #[error("point is not an integral point on the curve")]
    NotIntegralPoint,

    /// Bubbled-up failure from the exact curve arithmetic.
    #[error("curve arithmetic: {0}")]
    Curve(#[from] curve_core::CurveError),
}

//! Error type shared by the analytic routines.

use thiserror::Error;

/// Failures surfaced by periods, elliptic logarithms, and the
/// linear-form certificates.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalyticError {
    /// The Carlson iteration failed to contract (should not happen for
    /// arguments off the negative real axis).
    #[error("symmetric-integral iteration did not converge")]
    ConvergenceFailure,
    /// The requested `x` has `x³ + B < 0`, so no real point sits above it.
    #[error("x-coordinate lies off the real locus of the curve")]
    OffRealComponent,
    /// A stated hypothesis of the estimate is violated; the message names it.
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    /// An unknown string key was passed to a keyed formula.
    #[error("unknown bound kind `{0}`")]
    UnknownKind(String),
    /// Polynomial root extraction did not converge.
    #[error("root finding failed to converge")]
    RootFindingFailure,
    /// The index is outside the family the routine covers.
    #[error("index {n} is not supported here")]
    UnsupportedIndex { n: i64 },
    /// The point at infinity carries no elliptic logarithm data here.
    #[error("the identity has no affine elliptic logarithm")]
    IdentityPoint,
    /// The coordinates do not satisfy `y² = x³ + B`.
    #[error("point does not lie on the curve")]
    PointNotOnCurve,
    /// A keyed formula needed its index argument and none was given.
    #[error("this bound kind requires the multiple index n")]
    MissingIndex,
}

//! Error type for the division-polynomial machinery.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DivisionPolyError {
    /// Division polynomials are evaluated at affine points only.
    #[error("the identity has no division-polynomial values")]
    IdentityPoint,
    /// The point fails `y^2 = x^3 + B`.
    #[error("point does not lie on the curve")]
    PointNotOnCurve,
    /// `ψ_n(P) = 0`: `P` is `n`-torsion, so `[n]P` has no affine value.
    #[error("ψ_{n}(P) = 0: the multiple [{n}]P is the identity")]
    TorsionObstruction { n: i64 },
    /// The requested index is outside the structural family the operation
    /// supports (e.g. weighted forms need odd `n` coprime to 3).
    #[error("index {n} is not supported by this operation")]
    UnsupportedIndex { n: i64 },
    /// None of the valuation-law cases applies to the given `(P, n, p)`.
    #[error("no valuation case applies")]
    CaseNotApplicable,
    /// A stated hypothesis of the law being checked fails.
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    /// The numeric root finder did not converge.
    #[error("complex root finding failed to converge")]
    RootFindingFailure,
    /// A prime argument was not prime.
    #[error("{0} is not prime")]
    NotPrime(u64),
}

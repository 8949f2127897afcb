use thiserror::Error;

/// Errors from the height computations and bound lookups.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeightError {
    #[error("the identity has no affine height data")]
    IdentityPoint,
    #[error("torsion point where a non-torsion point is required")]
    TorsionPoint,
    #[error("point does not satisfy the curve equation")]
    PointNotOnCurve,
    #[error("coefficient is not sixth-power-free")]
    NotQuasiMinimal,
    #[error("unknown bound kind `{0}`")]
    UnknownKind(String),
    #[error("bound kind requires a multiplier index n")]
    MissingIndex,
}

//! Error type shared by the curve primitives.

use thiserror::Error;

/// Failure modes of the exact curve arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    /// `B = 0` does not define an elliptic curve (the cusp `y^2 = x^3`).
    #[error("B must be nonzero")]
    ZeroB,
    /// A point handed to the group law does not satisfy `y^2 = x^3 + B`.
    #[error("point does not lie on the curve")]
    PointNotOnCurve,
    /// A valuation was requested at a non-prime.
    #[error("{0} is not prime")]
    NotPrime(u64),
    /// The operation needs an affine point but received the identity.
    #[error("the identity has no affine coordinates")]
    IdentityPoint,
    /// The coordinates do not have the `(A/D^2, Y/D^3)` shape every point
    /// on a Weierstrass curve must have; the input was built by hand.
    #[error("coordinates are not of the form (A/D^2, Y/D^3)")]
    MalformedPoint,
}

//! Rational points and their denominator structure.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::CurveError;
use crate::numeric::perfect_square;
use crate::Result;

/// A point on a Mordell curve: either the identity (point at infinity) or an
/// affine point with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CurvePoint {
    Identity,
    Affine { x: BigRational, y: BigRational },
}

impl CurvePoint {
    /// Affine point from rational coordinates (stored reduced).
    pub fn affine(x: BigRational, y: BigRational) -> Self {
        CurvePoint::Affine { x, y }
    }

    /// Affine point from integer coordinates; handy for fixtures.
    pub fn affine_int(x: i64, y: i64) -> Self {
        CurvePoint::Affine {
            x: BigRational::from_integer(BigInt::from(x)),
            y: BigRational::from_integer(BigInt::from(y)),
        }
    }

    /// Affine point from big-integer coordinates.
    pub fn affine_big(x: BigInt, y: BigInt) -> Self {
        CurvePoint::Affine {
            x: BigRational::from_integer(x),
            y: BigRational::from_integer(y),
        }
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, CurvePoint::Identity)
    }

    /// `x`-coordinate of an affine point.
    pub fn x(&self) -> Option<&BigRational> {
        match self {
            CurvePoint::Identity => None,
            CurvePoint::Affine { x, .. } => Some(x),
        }
    }

    /// `y`-coordinate of an affine point.
    pub fn y(&self) -> Option<&BigRational> {
        match self {
            CurvePoint::Identity => None,
            CurvePoint::Affine { y, .. } => Some(y),
        }
    }

    /// Both coordinates are integers.
    pub fn is_integral(&self) -> bool {
        match self {
            CurvePoint::Identity => false,
            CurvePoint::Affine { x, y } => x.is_integer() && y.is_integer(),
        }
    }
}

impl std::fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CurvePoint::Identity => write!(f, "O"),
            CurvePoint::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

/// Splits a rational point into `x = A/D^2`, `y = Y/D^3` with `D >= 1` and
/// returns `(A, D)`.
///
/// Every point on a Weierstrass curve has this shape once coordinates are in
/// lowest terms; a mismatch means the input was never on a curve and is
/// reported as [`CurveError::MalformedPoint`]. The point is integral exactly
/// when `D = 1`.
pub fn denominator_profile(p: &CurvePoint) -> Result<(BigInt, BigInt)> {
    let (x, y) = match p {
        CurvePoint::Identity => return Err(CurveError::IdentityPoint),
        CurvePoint::Affine { x, y } => (x, y),
    };
    let d = perfect_square(x.denom()).ok_or(CurveError::MalformedPoint)?;
    if *y.denom() != &d * &d * &d {
        return Err(CurveError::MalformedPoint);
    }
    Ok((x.numer().clone(), d))
}

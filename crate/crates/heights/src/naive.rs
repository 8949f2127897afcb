//! Naive (Weil) height of the x-coordinate.

use curve_core::numeric::ln_big;
use curve_core::CurvePoint;
use num_traits::Signed;

use crate::error::HeightError;
use crate::Result;

/// `h(P) = log max(|a|, q)` where `x(P) = a/q` in lowest terms.
pub fn naive_height(point: &CurvePoint) -> Result<f64> {
    let x = match point {
        CurvePoint::Identity => return Err(HeightError::IdentityPoint),
        CurvePoint::Affine { x, .. } => x,
    };
    let num = x.numer().abs();
    let den = x.denom().abs();
    Ok(ln_big(&num.max(den)))
}

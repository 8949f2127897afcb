//! Exhaustive integral-point enumeration on `y^2 = x^3 + B`.
//!
//! For fixed `B` the integral points with bounded `x` are found by walking
//! every `x` in `[x_lo, x_max]`, where `x_lo` is the least integer with
//! `x^3 + B >= 0`, and testing `x^3 + B` for squareness exactly.  Points are
//! recorded once per `x` with `y >= 0`; the count tallies `(x, -y)` as well,
//! so it equals the number of affine integral points on the curve in the
//! window.
//!
//! The companion quality measure for a point with `x > 0` is `sqrt(x)/|B|`
//! (large values mean `x^3` and `y^2` agree to unusually many digits
//! relative to the size of `B`).

use curve_core::{numeric::perfect_square_u128, CurvePoint};
use num_traits::{Signed, ToPrimitive};

use crate::error::{HarnessError, Result};

/// Squares modulo 64 occupy only 12 residue classes; the mask makes the
/// x-walk cheap enough for the big consistency sweeps.
const SQUARE_MOD_64: u64 = {
    let mut mask = 0u64;
    let mut r = 0u64;
    while r < 64 {
        mask |= 1 << ((r * r) % 64);
        r += 1;
    }
    mask
};

/// Everything the enumeration found below the bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationResult {
    /// Curve coefficient.
    pub b: i64,
    /// Inclusive upper bound on the x-coordinate.
    pub x_max: i64,
    /// Points `(x, y)` with `y >= 0`, in increasing x order.
    pub points: Vec<(i64, i64)>,
    /// Number of affine integral points, counting `(x, y)` and `(x, -y)`
    /// separately when `y > 0`.
    pub count: usize,
}

/// Enumerates all integral points with `x <= x_max` exactly.
///
/// Bounds beyond `10^9` are clamped (the y-coordinate would still fit an
/// `i64` there, but a longer walk is outside desk scale anyway).
pub fn enumerate_integral_points(b: i64, x_max: i64) -> EnumerationResult {
    let x_cap = x_max.min(1_000_000_000) as i128;
    let bb = b as i128;

    // Least x with x^3 + B >= 0, found from a floating seed and fixed up
    // exactly.
    let mut lo = (-(b as f64)).cbrt().round() as i128;
    while lo * lo * lo + bb < 0 {
        lo += 1;
    }
    while (lo - 1) * (lo - 1) * (lo - 1) + bb >= 0 {
        lo -= 1;
    }

    let mut points = Vec::new();
    let mut count = 0usize;
    let mut x = lo;
    while x <= x_cap {
        let v = x * x * x + bb;
        debug_assert!(v >= 0);
        let v = v as u128;
        if SQUARE_MOD_64 >> (v % 64) & 1 == 1 {
            if let Some(y) = perfect_square_u128(v) {
                points.push((x as i64, y as i64));
                count += if y == 0 { 1 } else { 2 };
            }
        }
        x += 1;
    }

    EnumerationResult {
        b,
        x_max,
        points,
        count,
    }
}

/// Quality measure `sqrt(x)/|B|` of an integral point with `x > 0`.
///
/// The all-time record holder among published curves scores about `46.6`;
/// ordinary points score well below `1`.
pub fn hall_measure(point: &CurvePoint, b: i64) -> Result<f64> {
    if !point.is_integral() {
        return Err(HarnessError::NotIntegralPoint);
    }
    let x = point.x().expect("integral point is affine").to_integer();
    if !x.is_positive() {
        return Err(HarnessError::NonPositiveX);
    }
    let xf = x.to_f64().unwrap_or(f64::INFINITY);
    Ok(xf.sqrt() / (b as f64).abs())
}

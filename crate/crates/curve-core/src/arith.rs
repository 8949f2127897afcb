//! The chord–tangent group law, exact over the rationals.
//!
//! For `y^2 = x^3 + B` the slope formulas have no linear terms: doubling uses
//! `λ = 3x^2 / 2y` and addition `λ = (y2 - y1)/(x2 - x1)`, with
//! `x3 = λ^2 - x1 - x2`, `y3 = λ(x1 - x3) - y1`.

use num_rational::BigRational;

use crate::curve::MordellCurve;
use crate::error::CurveError;
use crate::point::CurvePoint;
use crate::Result;

/// `-P` (reflection across the x-axis).
pub fn negate(p: &CurvePoint) -> CurvePoint {
    match p {
        CurvePoint::Identity => CurvePoint::Identity,
        CurvePoint::Affine { x, y } => CurvePoint::Affine {
            x: x.clone(),
            y: -y.clone(),
        },
    }
}

fn add_unchecked(p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
    let (x1, y1) = match p {
        CurvePoint::Identity => return q.clone(),
        CurvePoint::Affine { x, y } => (x, y),
    };
    let (x2, y2) = match q {
        CurvePoint::Identity => return p.clone(),
        CurvePoint::Affine { x, y } => (x, y),
    };
    let lambda = if x1 == x2 {
        if *y1 == -y2.clone() {
            // Covers P + (-P) and doubling a 2-torsion point (y = 0).
            return CurvePoint::Identity;
        }
        let x1sq = x1 * x1;
        (BigRational::from_integer(3.into()) * x1sq) / (BigRational::from_integer(2.into()) * y1)
    } else {
        (y2 - y1) / (x2 - x1)
    };
    let x3 = &lambda * &lambda - x1 - x2;
    let y3 = &lambda * (x1 - &x3) - y1;
    CurvePoint::Affine { x: x3, y: y3 }
}

/// `P + Q`. Both points are validated against the curve first.
pub fn add(curve: &MordellCurve, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint> {
    if !curve.contains(p) || !curve.contains(q) {
        return Err(CurveError::PointNotOnCurve);
    }
    Ok(add_unchecked(p, q))
}

/// `[n]P` by double-and-add; negative `n` negates, `n = 0` gives the
/// identity. The input is validated once, after which the chord–tangent
/// steps are closed on the curve.
pub fn multiply(curve: &MordellCurve, p: &CurvePoint, n: i64) -> Result<CurvePoint> {
    if !curve.contains(p) {
        return Err(CurveError::PointNotOnCurve);
    }
    let (mut k, base) = if n < 0 {
        (n.unsigned_abs(), negate(p))
    } else {
        (n as u64, p.clone())
    };
    let mut acc = CurvePoint::Identity;
    let mut pow = base;
    while k > 0 {
        if k & 1 == 1 {
            acc = add_unchecked(&acc, &pow);
        }
        k >>= 1;
        if k > 0 {
            pow = add_unchecked(&pow, &pow);
        }
    }
    Ok(acc)
}

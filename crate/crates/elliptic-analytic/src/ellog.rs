//! The real elliptic logarithm and what the estimates do with it.
//!
//! For an affine real point `P = (x, y)` on the unbounded (only) real
//! component, the half-integral
//!
//! ```text
//! u(x) = ½ ∫_x^∞ dt / √(t³ + B) = Re R_F(x − e₁, x − e₁ρ, x − e₁ρ̄)
//! ```
//!
//! runs from `0` (as `x → ∞`) up to `ω/2` (at `x = e₁`), and the
//! logarithm itself is `z(P) = u` when `y ≤ 0` and `ω − u` when `y > 0`,
//! the sign convention that makes `P ↦ z(P)` a homomorphism onto
//! `ℝ/ωℤ ≅ [0, ω)` (on `(0, ω/2)` the Weierstrass `℘` is decreasing, so
//! `℘′ < 0` there).
//!
//! Two consumers live beside the logarithm: the far-point estimate
//! `|z(P)| ≤ 2^{3/2}/√x(P)` valid once `x(P) ≥ 2|B|^{1/3}` (with `|z|`
//! the distance to the lattice, i.e. folded to `min(z, ω − z)`), and the
//! reduction witness `m = round((z([n]P) − n·z(P))/ω)` of the linear form
//! `n·z(P) + m·ω`.

use curve_core::{multiply, CurvePoint, MordellCurve};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Signed;

use crate::carlson::carlson_rf;
use crate::error::AnalyticError;
use crate::period::{cubic_geometry, omega_of};
use crate::Result;

/// An elliptic logarithm value together with the point it belongs to.
#[derive(Debug, Clone, PartialEq)]
pub struct EllipticLog {
    /// `z(P) ∈ [0, ω)`.
    pub z: f64,
    /// The point the logarithm was taken at.
    pub target: CurvePoint,
}

/// `u(x)` for a real abscissa on the unbounded component.
pub(crate) fn half_integral_from_x(b: i64, x: f64, tol: f64) -> Result<f64> {
    let (e1, rho) = cubic_geometry(b);
    let e1c = Complex64::new(e1, 0.0);
    let xc = Complex64::new(x, 0.0);
    let rf = carlson_rf(xc - e1c, xc - e1c * rho, xc - e1c * rho.conj(), tol)?;
    Ok(rf.re)
}

/// The elliptic logarithm `z(P) ∈ [0, ω)` of an affine rational point.
pub fn elliptic_log(curve: &MordellCurve, point: &CurvePoint, tol: f64) -> Result<EllipticLog> {
    let (x, y) = match (point.x(), point.y()) {
        (Some(x), Some(y)) => (x, y),
        _ => return Err(AnalyticError::IdentityPoint),
    };
    let cubic = (x * x) * x + BigRational::from_integer(curve.b_big());
    if cubic.is_negative() {
        return Err(AnalyticError::OffRealComponent);
    }
    if !curve.contains(point) {
        return Err(AnalyticError::PointNotOnCurve);
    }
    let u = half_integral_from_x(curve.b(), curve_core::numeric::ratio_to_f64(x), tol)?;
    let z = if y.is_positive() {
        omega_of(curve.b(), tol)? - u
    } else {
        u
    };
    Ok(EllipticLog {
        z,
        target: point.clone(),
    })
}

/// Checks `log|z(P)| ≤ (3/2)·log 2 − ½·log x(P)` for a far-out point,
/// where `|z|` is the distance from `z(P)` to the period lattice.  The
/// hypothesis `x(P) ≥ 2|B|^{1/3}` is verified exactly (as `x³ ≥ 8|B|`)
/// and its failure is an error, not a `false`.
pub fn tza_bound_holds(curve: &MordellCurve, point: &CurvePoint) -> Result<bool> {
    let x = point.x().ok_or(AnalyticError::IdentityPoint)?;
    let x3 = (x * x) * x;
    let floor = BigRational::from_integer(BigInt::from(8) * curve.b_big().abs());
    if !x.is_positive() || x3 < floor {
        return Err(AnalyticError::HypothesisViolated(
            "x(P) < 2|B|^{1/3}".into(),
        ));
    }
    let log = elliptic_log(curve, point, 1e-10)?;
    let omega = omega_of(curve.b(), 1e-10)?;
    let folded = log.z.min(omega - log.z);
    let xf = curve_core::numeric::ratio_to_f64(x);
    Ok(folded.ln() <= 1.5 * 2f64.ln() - 0.5 * xf.ln() + 1e-6)
}

/// Logs `[n]P` and reports `(z([n]P), m)` with the reduction witness
/// `m = round((z([n]P) − n·z(P)) / ω)`, so that `n·z(P) + m·ω ≈ z([n]P)`.
pub fn multiple_log_reduction(
    curve: &MordellCurve,
    point: &CurvePoint,
    n: i64,
) -> Result<(f64, i64)> {
    let z_p = elliptic_log(curve, point, 1e-12)?.z;
    let image = multiply(curve, point, n).map_err(|_| AnalyticError::PointNotOnCurve)?;
    let z_np = elliptic_log(curve, &image, 1e-12)?.z;
    let omega = omega_of(curve.b(), 1e-12)?;
    let m = ((z_np - n as f64 * z_p) / omega).round() as i64;
    Ok((z_np, m))
}

//! Canonical height, evaluated through a local decomposition at `[6]P`.
//!
//! On `y² = x³ + B` the component group of the Néron model at every
//! finite place has exponent dividing 6 (types II/II*/I₀*/III/III*/IV/IV*
//! only), so `Q = [6]P` reduces into the identity component everywhere.
//! On a globally minimal model that makes the finite part of the height
//! exactly the denominator logarithm, and the archimedean part a
//! telescoping series along the x-coordinate doubling map:
//!
//! ```text
//! ĥ(Q) = log D(Q) + Σ_{k≥0} 4^{−(k+1)} · log|ψ₂(q_k)| ,
//! ```
//!
//! where `x(Q) = A/D²` in lowest terms, `q_0 = Q`,
//! `x(q_{k+1}) = (x⁴ − 2b₆x)/(4x³ + b₆)` and `|ψ₂| = √(4x³ + b₆)`.
//! The series is the exact telescoping of the denominator recursion
//! `D_{k+1} = |ψ₂(q_k)|·D_k⁴`, which is cancellation-free precisely
//! because `Q` sits on the identity component at every place.
//!
//! The standard model has `b₆ = 4B` and is globally minimal unless
//! `B ≡ 16 (mod 64)`; in that case `X = x/4`, `Y = (y − 4)/8` lands on
//! the minimal model `Y² + Y = X³ + (B−16)/64`, which has `b₂ = b₄ = 0`
//! and `b₆ = B/16`, so the identical series runs on `(X, b₆)`.
//!
//! Finally `ĥ(P) = ĥ([6]P)/36`.  Torsion points short-circuit to an
//! exact `0`, and a sixth power in `B` is pulled out first (heights are
//! invariant under `(x, y) ↦ (x/u², y/u³)`).

use curve_core::numeric::{ln_big, ln_ratio, perfect_square, ratio_to_f64};
use curve_core::{make_curve, multiply, sixth_power_free_reduce, CurvePoint, MordellCurve};
use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::HeightError;
use crate::naive::naive_height;
use crate::Result;

/// Naive and canonical height of one point, with the tolerance the
/// canonical value was computed to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeightEstimate {
    pub naive: f64,
    pub canonical: f64,
    pub tol: f64,
}

/// `ĥ(P)` in the normalization with `ĥ([n]P) = n²ĥ(P)`, accurate to
/// `tol`.  Torsion points (including the identity) return exactly `0`.
pub fn canonical_height(curve: &MordellCurve, point: &CurvePoint, tol: f64) -> Result<f64> {
    assert!(tol > 0.0, "tolerance must be positive");
    if point.is_identity() {
        return Ok(0.0);
    }
    if !curve.contains(point) {
        return Err(HeightError::PointNotOnCurve);
    }
    if !curve.quasi_minimal() {
        // Pull the sixth power out of B; the height is unchanged.
        let (b_red, u) = sixth_power_free_reduce(curve.b())
            .expect("curve coefficient is nonzero");
        let reduced = make_curve(b_red).expect("reduced coefficient is nonzero");
        let u2 = BigRational::from_integer(BigInt::from(u * u));
        let u3 = BigRational::from_integer(BigInt::from(u * u * u));
        let mapped = CurvePoint::affine(point.x().unwrap() / u2, point.y().unwrap() / u3);
        return canonical_height(&reduced, &mapped, tol);
    }
    if curve.is_torsion_point(point) {
        return Ok(0.0);
    }
    let q = multiply(curve, point, 6).map_err(|_| HeightError::PointNotOnCurve)?;
    let x_q = q.x().expect("[6]P of a non-torsion point is affine").clone();

    // Minimal-model data: b₆ and the x-coordinate to iterate on.
    let b = curve.b_big();
    let (b6, x0) = if curve.b().rem_euclid(64) == 16 {
        (
            BigRational::from_integer(&b / BigInt::from(16)),
            x_q / BigRational::from_integer(BigInt::from(4)),
        )
    } else {
        (BigRational::from_integer(BigInt::from(4) * &b), x_q)
    };

    let d_root = perfect_square(x0.denom())
        .expect("denominator of a 6-divisible point is a square on the minimal model");
    let mut height = ln_big(&d_root);

    let steps = 45usize.max((1.0 / tol).log(4.0).ceil() as usize + 10);
    // The first two terms exactly: the starting coordinate can be an
    // extreme rational, and these terms carry almost all of its weight.
    let mut x_exact = x0;
    for k in 0..2usize {
        let x3 = &x_exact * &x_exact * &x_exact;
        let psi2_sq = BigRational::from_integer(BigInt::from(4)) * &x3 + &b6;
        height += 0.25_f64.powi(k as i32 + 1) * 0.5 * ln_ratio(&psi2_sq);
        let num = &x_exact * &x3 - BigRational::from_integer(BigInt::from(2)) * &b6 * &x_exact;
        x_exact = num / psi2_sq;
    }
    let b6_f = ratio_to_f64(&b6);
    let mut x = ratio_to_f64(&x_exact);
    for k in 2..steps {
        if x > 1e18 {
            // Remaining tail of the series: Σ_{j≥k} 4^{−(j+1)} log ψ₂²(q_j)
            // collapses to 4^{−k} log x_k + O(x_k^{−3}) since the iterate
            // then just quarters toward the real connected component.
            height += 0.25_f64.powi(k as i32) * 0.5 * x.ln();
            break;
        }
        let psi2_sq = (4.0 * x * x * x + b6_f).max(1e-300);
        height += 0.25_f64.powi(k as i32 + 1) * 0.5 * psi2_sq.ln();
        x = (x * x * x * x - 2.0 * b6_f * x) / psi2_sq;
    }
    Ok(height / 36.0)
}

/// Bundles `h(P)` and `ĥ(P)` for reporting.
pub fn height_estimate(
    curve: &MordellCurve,
    point: &CurvePoint,
    tol: f64,
) -> Result<HeightEstimate> {
    Ok(HeightEstimate {
        naive: naive_height(point)?,
        canonical: canonical_height(curve, point, tol)?,
        tol,
    })
}

//! Size control for division-polynomial values at integral points whose
//! `n`-th multiple is again integral.
//!
//! For such a point `P = (a, b)` with `n` odd and coprime to 3, the value
//! `ψ_n(P)` is supported on the primes dividing `6B`, and the local
//! valuation bounds multiply out to a clean global inequality:
//!
//! ```text
//! |ψ_n(P)|^6 < 3^{3(n²−1)/2} · 4^{n²−1} · |B|^{n²−1}.
//! ```
//!
//! The check below evaluates both sides as exact integers; no rounding is
//! involved at any size.

use curve_core::{multiply, CurvePoint, MordellCurve};
use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::DivisionPolyError;
use crate::evaluator::DivisionPolyEvaluator;
use crate::Result;

/// Verifies `|ψ_n(P)|^6 < 3^{3(n²−1)/2} · 4^{n²−1} · |B|^{n²−1}` exactly.
///
/// Requires `n ≥ 2` odd with `3 ∤ n`, `P` integral, and `[n]P` integral;
/// each failed hypothesis is reported rather than silently ignored, since
/// the inequality has no content outside this regime.
pub fn psi_size_bound_check(curve: &MordellCurve, point: &CurvePoint, n: i64) -> Result<bool> {
    if n < 2 {
        return Err(DivisionPolyError::UnsupportedIndex { n });
    }
    if n % 2 == 0 || n % 3 == 0 {
        return Err(DivisionPolyError::HypothesisViolated(format!(
            "index {n} must be odd and coprime to 3"
        )));
    }
    if point.is_identity() {
        return Err(DivisionPolyError::IdentityPoint);
    }
    if !point.is_integral() {
        return Err(DivisionPolyError::HypothesisViolated(
            "base point must be integral".into(),
        ));
    }
    let image = multiply(curve, point, n).map_err(|_| DivisionPolyError::PointNotOnCurve)?;
    if !image.is_integral() {
        return Err(DivisionPolyError::HypothesisViolated(format!(
            "multiple [{n}]P must be integral"
        )));
    }
    let mut ev = DivisionPolyEvaluator::new(curve, point)?;
    let psi = ev.psi(n as usize);
    debug_assert!(psi.is_integer());
    let lhs = psi.to_integer().abs().pow(6u32);
    let e = (n * n - 1) as u32;
    let rhs = BigInt::from(3).pow(3 * e / 2) * BigInt::from(4).pow(e) * curve.b_big().abs().pow(e);
    Ok(lhs < rhs)
}

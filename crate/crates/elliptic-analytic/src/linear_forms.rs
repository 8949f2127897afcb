//! Closed-form two-sided estimates on the linear form `Λ = n·z(P) + m·ω`
//! attached to an integral multiple `[n]P`, and the index caps they force.
//!
//! The upper bounds come from height inequalities: each keyed formula
//! bounds `log|Λ|` from above using only `|B|` (and `n`), with the
//! congruence-class constant `C` entering through the slope-`1/36` height
//! lower bound.  These are certificates about arbitrary nonzero `B` — no
//! quasi-minimality requirement and no cube sharpening, by design.
//!
//! The lower bounds are David-type absolute estimates.  Two regimes are
//! exposed: for `2·log n ≤ (e − 2/3)·log|B|` the conservative constant
//! `5.944·10⁴²` applies with `log|Λ| ≥ −5.944·10⁴²·log(4|B|)⁶` (this
//! constant covers the whole range, subsuming the sharper middle strip),
//! and above it `log|Λ| ≥ −4.144·10⁴²·(log n)⁵·log(4|B|)`.  Comparing the
//! two sides caps `n` by `max(3·10²²·(log|B|)^{5/2}, 7.511·10²⁶)`, and the
//! same comparison applied to a *second* integral multiple yields a lower
//! bound on `log n₂` that usually exceeds the cap — the gap argument.

use num_bigint::BigInt;
use num_traits::Signed;

use curve_core::numeric::ln_big;
use curve_core::MordellCurve;
use heights::congruence_constant;

use crate::error::AnalyticError;
use crate::period::omega1_value;
use crate::Result;

use std::f64::consts::E;

/// The quantities a David-type estimate is instantiated with.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearFormParams {
    /// Height gauge of the first logarithm (the period): `log V₁`.
    pub v1: f64,
    /// Height gauge of the second logarithm: `log V₂ = h_E`.
    pub v2: f64,
    /// The coefficient-size gauge `𝓑`.
    pub b_david: f64,
    /// The absolute constant `4·10⁴¹` of the estimate.
    pub c_abs: f64,
    /// The curve-height stand-in `h_E = log(4|B|)`.
    pub h_e: f64,
}

fn require_index(n: Option<i64>) -> Result<i64> {
    n.ok_or(AnalyticError::MissingIndex)
}

/// Upper bounds on `log|Λ|` for the linear form of an integral multiple.
///
/// * `"general_n"` (needs `n ≥ 11`): `−n²(log|B|/36 − C) + log|B|/6 + 1.339`;
/// * `"four_mult"`: `−log|B|/3 + 0.921` when `[4]P` is integral;
/// * `"two_three_mult"`: `−0.22·log|B| + (3/2)·log 2` when `[2]P` or
///   `[3]P` is integral.
pub fn linear_form_upper(curve: &MordellCurve, kind: &str, n: Option<i64>) -> Result<f64> {
    let log_b = (curve.b().unsigned_abs() as f64).ln();
    match kind {
        "general_n" => {
            let n = require_index(n)?;
            if n < 11 {
                return Err(AnalyticError::HypothesisViolated(format!(
                    "index n = {n} below 11"
                )));
            }
            let c = congruence_constant(curve.b());
            Ok(-((n * n) as f64) * (log_b / 36.0 - c) + log_b / 6.0 + 1.339)
        }
        "four_mult" => Ok(-log_b / 3.0 + 0.921),
        "two_three_mult" => Ok(-0.22 * log_b + 1.5 * 2f64.ln()),
        other => Err(AnalyticError::UnknownKind(other.to_string())),
    }
}

fn david_preconditions(curve: &MordellCurve, n: i64) -> Result<(f64, f64, f64)> {
    if curve.b().unsigned_abs() <= 8 {
        return Err(AnalyticError::HypothesisViolated(
            "|B| > 8 required".into(),
        ));
    }
    if n < 11 {
        return Err(AnalyticError::HypothesisViolated(format!(
            "index n = {n} below 11"
        )));
    }
    let log_b = (curve.b().unsigned_abs() as f64).ln();
    let lb4 = (4.0 * curve.b().unsigned_abs() as f64).ln();
    Ok(((n as f64).ln(), log_b, lb4))
}

/// Is `(n, B)` in the conservative (small-`n`) regime?  Boundary cases —
/// within `10⁻⁹` relative — count as both, and the caller takes the min.
fn david_regime(log_n: f64, log_b: f64) -> (bool, bool) {
    let t = 2.0 * log_n;
    let hi = (E - 2.0 / 3.0) * log_b;
    let eps = 1e-9 * hi.abs().max(1.0);
    (t <= hi + eps, t >= hi - eps)
}

/// David-type absolute lower bound on `log|n·z(P) + m·ω|`.
pub fn david_lower(curve: &MordellCurve, n: i64) -> Result<f64> {
    let (log_n, log_b, lb4) = david_preconditions(curve, n)?;
    let (small, large) = david_regime(log_n, log_b);
    let conservative = -5.944e42 * lb4.powi(6);
    let sparse = -4.144e42 * log_n.powi(5) * lb4;
    Ok(match (small, large) {
        (true, false) => conservative,
        (false, true) => sparse,
        _ => conservative.min(sparse),
    })
}

/// The gauges behind [`david_lower`] at the same `(curve, n)`.
pub fn david_params(curve: &MordellCurve, n: i64) -> Result<LinearFormParams> {
    let (log_n, log_b, lb4) = david_preconditions(curve, n)?;
    let (small, _) = david_regime(log_n, log_b);
    let four_b = 4.0 * curve.b().unsigned_abs() as f64;
    let params = if small {
        LinearFormParams {
            v1: four_b,
            v2: four_b,
            b_david: (E * lb4).exp(),
            c_abs: 4e41,
            h_e: lb4,
        }
    } else {
        let log_v1 = 6.0 * E / (3.0 * E - 2.0) * log_n - 1.119;
        let log_bd = E * (6.0 / (3.0 * E - 2.0) * log_n + 4f64.ln());
        LinearFormParams {
            v1: log_v1.exp(),
            v2: four_b,
            b_david: log_bd.exp(),
            c_abs: 4e41,
            h_e: lb4,
        }
    };
    Ok(params)
}

/// The absolute cap on the index of an integral multiple on `E_B`
/// (`|B| > 75`): `n < max(3·10²²·(log|B|)^{5/2}, 7.511·10²⁶)`.
pub fn n_upper_bound(b: &BigInt) -> Result<f64> {
    if b.abs() <= BigInt::from(75) {
        return Err(AnalyticError::HypothesisViolated(
            "|B| > 75 required".into(),
        ));
    }
    let log_b = ln_big(&b.abs());
    Ok((3e22 * log_b.powf(2.5)).max(7.511e26))
}

/// Lower bound on `log n₂` for a second integral multiple `[n₂]P` once
/// `[n₁]P` is integral (`n₁ ≥ 11`, `|B| > 75`):
///
/// ```text
/// log n₂ > n₁²(log|B|/36 − C) + log ω₁ − log|B|/3 − 1.399.
/// ```
///
/// When this exceeds `log` of [`n_upper_bound`], no second multiple can
/// exist — the gap argument closes.
pub fn gap_lower_bound_on_log_n2(n1: i64, b: i64) -> Result<f64> {
    if n1 < 11 {
        return Err(AnalyticError::HypothesisViolated(format!(
            "index n1 = {n1} below 11"
        )));
    }
    if b.unsigned_abs() <= 75 {
        return Err(AnalyticError::HypothesisViolated(
            "|B| > 75 required".into(),
        ));
    }
    let log_b = (b.unsigned_abs() as f64).ln();
    let c = congruence_constant(b);
    Ok((n1 * n1) as f64 * (log_b / 36.0 - c) + omega1_value().ln() - log_b / 3.0 - 1.399)
}

#[cfg(test)]
mod tests {
    use super::*;
    use curve_core::make_curve;

    #[test]
    fn keyed_upper_bounds_are_frozen() {
        let e106 = make_curve(1_000_000).unwrap();
        let v = linear_form_upper(&e106, "general_n", Some(11)).unwrap();
        let log_b = 1e6f64.ln();
        // 10⁶ is a sixth power and a cube; the certificate still uses the
        // plain congruence constant 0.0431 with the 1/36 slope.
        let expected = -121.0 * (log_b / 36.0 - 0.0431) + log_b / 6.0 + 1.339;
        assert!((v - expected).abs() < 1e-12);
        assert!((v + 37.5788).abs() < 1e-3);

        let e80 = make_curve(80).unwrap();
        let v = linear_form_upper(&e80, "four_mult", None).unwrap();
        assert!((v - (-(80f64).ln() / 3.0 + 0.921)).abs() < 1e-12);
        assert!((v + 0.53968).abs() < 1e-4);

        let e108 = make_curve(108).unwrap();
        let v = linear_form_upper(&e108, "two_three_mult", None).unwrap();
        assert!((v - (-0.22 * 108f64.ln() + 1.5 * 2f64.ln())).abs() < 1e-12);
        assert!((v - 0.00965).abs() < 1e-4);
    }

    #[test]
    fn upper_bound_error_paths() {
        let curve = make_curve(1_000_000).unwrap();
        assert_eq!(
            linear_form_upper(&curve, "general_n", None),
            Err(AnalyticError::MissingIndex)
        );
        assert!(matches!(
            linear_form_upper(&curve, "general_n", Some(5)),
            Err(AnalyticError::HypothesisViolated(_))
        ));
        assert_eq!(
            linear_form_upper(&curve, "bogus", None),
            Err(AnalyticError::UnknownKind("bogus".into()))
        );
    }

    #[test]
    fn david_regimes_split_where_stated() {
        // B = 10⁶, n = 11: 2·log 11 ≈ 4.796 < (e − 2/3)·log|B| ≈ 28.35,
        // so the conservative constant applies.
        let e106 = make_curve(1_000_000).unwrap();
        let v = david_lower(&e106, 11).unwrap();
        let expected = -5.944e42 * (4e6f64).ln().powi(6);
        assert!((v / expected - 1.0).abs() < 1e-12);

        // B = 100, n = 10⁶: 2·log n ≈ 27.6 > (e − 2/3)·log 100 ≈ 9.45.
        let e100 = make_curve(100).unwrap();
        let v = david_lower(&e100, 1_000_000).unwrap();
        let expected = -4.144e42 * 1e6f64.ln().powi(5) * 400f64.ln();
        assert!((v / expected - 1.0).abs() < 1e-12);
    }

    #[test]
    fn david_hypotheses_are_enforced() {
        let small_b = make_curve(8).unwrap();
        assert!(matches!(
            david_lower(&small_b, 11),
            Err(AnalyticError::HypothesisViolated(_))
        ));
        let fine = make_curve(108).unwrap();
        assert!(matches!(
            david_lower(&fine, 10),
            Err(AnalyticError::HypothesisViolated(_))
        ));
    }

    #[test]
    fn david_params_satisfy_the_gauge_inequalities() {
        for (b, n) in [(1_000_000i64, 11i64), (100, 1_000_000), (108, 13)] {
            let curve = make_curve(b).unwrap();
            let p = david_params(&curve, n).unwrap();
            assert_eq!(p.c_abs, 4e41);
            assert!((p.h_e - (4.0 * b.unsigned_abs() as f64).ln()).abs() < 1e-12);
            // log V₁ ≥ log V₂ ≥ h_E and log 𝓑 ≥ e·h_E.
            assert!(p.v1.ln() >= p.v2.ln() - 1e-9, "b = {b}, n = {n}");
            assert!(p.v2.ln() >= p.h_e - 1e-9);
            assert!(p.b_david.ln() >= E * p.h_e - 1e-9);
        }
    }

    #[test]
    fn index_cap_examples() {
        assert!((n_upper_bound(&BigInt::from(76)).unwrap() - 7.511e26).abs() < 1.0);
        assert!((n_upper_bound(&BigInt::from(-1_000_000)).unwrap() - 7.511e26).abs() < 1.0);
        // Only astronomically large |B| activates the first branch.
        let huge = BigInt::from(10).pow(300u32);
        let v = n_upper_bound(&huge).unwrap();
        let expected = 3e22 * (300.0 * 10f64.ln()).powf(2.5);
        assert!((v / expected - 1.0).abs() < 1e-9);
        assert!(v > 7.511e26);
        assert!(matches!(
            n_upper_bound(&BigInt::from(75)),
            Err(AnalyticError::HypothesisViolated(_))
        ));
    }

    #[test]
    fn gap_argument_closes_past_the_threshold() {
        // Worst congruence constant C = 0.2262 (B ≡ 15120 mod 15552): the
        // gap bound first beats the index cap just above B ≈ 6.2675·10¹².
        let mut b0: i64 = 6_267_500_000_000;
        b0 += (15120 - b0.rem_euclid(15552)).rem_euclid(15552);
        assert_eq!(congruence_constant(b0), 0.2262);
        let gap = gap_lower_bound_on_log_n2(11, b0).unwrap();
        let cap = n_upper_bound(&BigInt::from(b0)).unwrap().ln();
        assert!(gap > cap, "gap {gap} should exceed cap {cap}");

        // Far below the threshold the same class is inconclusive.
        let mut b1: i64 = 10_000_000_000;
        b1 += (15120 - b1.rem_euclid(15552)).rem_euclid(15552);
        assert!(gap_lower_bound_on_log_n2(11, b1).unwrap() < cap);

        // B = 10¹³ falls in the default class C = 0.0431 and clears the
        // cap with plenty of room.
        let b2: i64 = 10_000_000_000_000;
        let gap2 = gap_lower_bound_on_log_n2(11, b2).unwrap();
        assert!((gap2 - 85.456).abs() < 1e-2);
        assert!(gap2 > n_upper_bound(&BigInt::from(b2)).unwrap().ln());
    }

    #[test]
    fn gap_hypotheses_are_enforced() {
        assert!(matches!(
            gap_lower_bound_on_log_n2(10, 1_000_000),
            Err(AnalyticError::HypothesisViolated(_))
        ));
        assert!(matches!(
            gap_lower_bound_on_log_n2(11, 75),
            Err(AnalyticError::HypothesisViolated(_))
        ));
    }
}

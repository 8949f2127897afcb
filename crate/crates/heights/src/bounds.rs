//! Explicit height bounds: the congruence-class lower-bound constants
//! for integral points, and the closed-form upper bounds satisfied by
//! points whose small multiples stay integral.
//!
//! The lower bound has the shape `ĥ(P) > (1/36) log|B| − C` with `C`
//! depending only on a congruence class of `B`; the classes below are
//! checked top to bottom and the first match wins, with `C = 0.0431` as
//! the fallback.  When `B` is a perfect cube the stronger slope
//! `ĥ(P) > (1/24) log|B| − C'` applies (`C' = 0.002` for odd `B`,
//! `C' = −0.2290` for even `B`); whichever bound is larger at the given
//! `B` is the one returned.

use curve_core::numeric::perfect_cube;
use curve_core::{sixth_power_free_reduce, CurvePoint, MordellCurve};
use num_bigint::BigInt;

use crate::canonical::canonical_height;
use crate::error::HeightError;
use crate::Result;

/// One congruence rule `B ≡ r (mod m) for some r ∈ residues ⇒ C`.
#[derive(Debug, Clone)]
pub struct LowerBoundRule {
    pub modulus: i64,
    pub residues: &'static [i64],
    pub c: f64,
    /// Marks the perfect-cube override rather than a congruence class.
    pub cube_variant: bool,
}

/// The dispatch table, in match order.
pub fn lower_bound_rules() -> Vec<LowerBoundRule> {
    let rule = |modulus, residues, c| LowerBoundRule {
        modulus,
        residues,
        c,
        cube_variant: false,
    };
    vec![
        rule(15552, &[15120, 3024, 1296], 0.2262),
        rule(576, &[80, 208], 0.1347),
        rule(15552, &[13392, 9936], 0.1347),
        rule(7776, &[6372, 2052, 324], 0.1107),
        rule(3888, &[108, 540], 0.1107),
        rule(1944, &[1809, 297], 0.1107),
        rule(1728, &[144], 0.1107),
    ]
}

const FALLBACK_C: f64 = 0.0431;

/// The congruence-class constant `C` alone: no cube sharpening and no
/// quasi-minimality requirement.  The linear-form certificates plug this
/// into slope-`1/36` estimates for arbitrary nonzero `B`, so unlike
/// [`lower_bound_constant`] it never rejects its input.
pub fn congruence_constant(b: i64) -> f64 {
    for rule in lower_bound_rules() {
        if rule.residues.contains(&b.rem_euclid(rule.modulus)) {
            return rule.c;
        }
    }
    FALLBACK_C
}

/// `(coefficient, C)` with `ĥ(P) > coefficient·log|B| − C` for every
/// integral non-torsion `P`.  Perfect cubes get the `1/24` slope when it
/// beats the congruence bound at this `B` (it always does).
pub fn lower_bound_constant(b: i64) -> Result<(f64, f64)> {
    let (_, u) = sixth_power_free_reduce(b).map_err(|_| HeightError::NotQuasiMinimal)?;
    if u != 1 {
        return Err(HeightError::NotQuasiMinimal);
    }
    let c_cong = congruence_constant(b);
    let log_b = (b.unsigned_abs() as f64).ln();
    if perfect_cube(&BigInt::from(b)).is_some() {
        let c_cube = if b % 2 == 0 { -0.2290 } else { 0.002 };
        if log_b / 24.0 - c_cube >= log_b / 36.0 - c_cong {
            return Ok((1.0 / 24.0, c_cube));
        }
    }
    Ok((1.0 / 36.0, c_cong))
}

/// Checks `ĥ(P) > coefficient·log|B| − C` for a non-torsion point, with
/// the canonical height taken at tolerance `10⁻⁶` and the comparison
/// slackened by the same amount.
pub fn check_lower_bound(curve: &MordellCurve, point: &CurvePoint) -> Result<bool> {
    if point.is_identity() || curve.is_torsion_point(point) {
        return Err(HeightError::TorsionPoint);
    }
    let (coeff, c) = lower_bound_constant(curve.b())?;
    let h = canonical_height(curve, point, 1e-6)?;
    Ok(h > coeff * (curve.b().unsigned_abs() as f64).ln() - c - 1e-6)
}

/// Closed-form height bounds attached to integral small multiples:
///
/// * `"two_div_point"` — upper bound `(7/18)log|B| + 0.68277` on `ĥ(P)`
///   when `[2]P` is integral;
/// * `"four_div_floor"` — lower bound `(2/3)log|B| − 0.239` on the naive
///   height of `[4]P` when it is integral (the label carries direction);
/// * `"n_mult_witness"` — upper bound on `ĥ(P)` when `[n]P` is integral:
///   `log n + (1/3)log B − 0.597` for `B > 0`, and
///   `log n + (1/6)log|B| − 0.617` for `B < 0`.
pub fn multiple_height_upper_bound(kind: &str, b: i64, n: Option<i64>) -> Result<f64> {
    let log_b = (b.unsigned_abs() as f64).ln();
    match kind {
        "two_div_point" => Ok(7.0 / 18.0 * log_b + 0.68277),
        "four_div_floor" => Ok(2.0 / 3.0 * log_b - 0.239),
        "n_mult_witness" => {
            let n = n.ok_or(HeightError::MissingIndex)?;
            let log_n = (n as f64).ln();
            if b > 0 {
                Ok(log_n + log_b / 3.0 - 0.597)
            } else {
                Ok(log_n + log_b / 6.0 - 0.617)
            }
        }
        other => Err(HeightError::UnknownKind(other.to_string())),
    }
}

//! The claimed `x`-range of `n`-torsion: every `Q ∈ E_B[n] \ {O}` over ℂ
//! is said to satisfy `|x(Q)| < (n²/7)·|B|^{1/3}`.
//!
//! The check runs in the rescaled variable `u = x³/|B|`, where the
//! `n`-torsion abscissae are the roots of a `B`-independent polynomial
//! `F(u)` (only the sign of `B` enters), and the claim becomes
//! `|u| < (n²/7)³` for every complex root.  The estimates downstream only
//! ever need `n ≥ 11` coprime to `6`, so that is the supported family.
//!
//! **The claimed cap is false, and this check reports that honestly.**
//! The period lattice of a Mordell curve is hexagonal with the *real*
//! period `ω` as its long diagonal — the shortest lattice vector is
//! `ω/√3`, not `ω` — so the nonzero `n`-torsion gets as close as
//! `ω/(√3 n)` to a pole of `℘` and the extremal abscissa is
//! `max |x(Q)| ≈ (3n²/ω₁²)·|B|^{1/3} ≈ (n²/5.9)·|B|^{1/3}`, which
//! exceeds the `(n²/7)` cap by a factor `≈ 1.187` at every `n ≥ 11`
//! (measured: `1.18679` at `n = 11`, `1.18678` at `n = 13`, against the
//! lattice prediction to 5·10⁻⁵).  The cap *is* comfortably satisfied by
//! the torsion with real abscissa, where the relevant lattice distance is
//! the full `ω/n` and `|x| ≲ (n²/17.7)·|B|^{1/3}`; only the complex
//! abscissae break it.  The tests below pin all three facts.

use num_complex::Complex64;
use num_traits::ToPrimitive;

use division_polynomials::{complex_roots, psi_weighted_form};

use crate::error::AnalyticError;
use crate::Result;

fn rescaled_root_moduli(n: i64, b_negative: bool) -> Result<Vec<f64>> {
    let form = psi_weighted_form(n).map_err(|_| AnalyticError::UnsupportedIndex { n })?;
    let coeffs: Vec<Complex64> = form
        .rescaled_coeffs(b_negative)
        .iter()
        .map(|c| Complex64::new(c.to_f64().unwrap_or(f64::INFINITY), 0.0))
        .collect();
    let roots = complex_roots(&coeffs).map_err(|_| AnalyticError::RootFindingFailure)?;
    Ok(roots.iter().map(|u| u.norm()).collect())
}

/// Checks `|x| < (n²/7)|B|^{1/3}` over all complex `n`-torsion of `E_B`,
/// comparing moduli with relative slack `tol`.  Returns `false` for every
/// `n ≥ 11`: the extremal complex torsion abscissa genuinely reaches
/// `≈ (n²/5.9)|B|^{1/3}` (see the module docs), and this function reports
/// what the roots do, not what the cap hopes.
pub fn torsion_x_bound_check(n: i64, b: i64, tol: f64) -> Result<bool> {
    if b == 0 {
        return Err(AnalyticError::HypothesisViolated(
            "B must be nonzero".into(),
        ));
    }
    if n < 11 {
        return Err(AnalyticError::HypothesisViolated(format!(
            "index n = {n} below 11"
        )));
    }
    if n % 2 == 0 || n % 3 == 0 {
        return Err(AnalyticError::UnsupportedIndex { n });
    }
    let cap = (n as f64 * n as f64 / 7.0).powi(3);
    let moduli = rescaled_root_moduli(n, b < 0)?;
    Ok(moduli.iter().all(|m| *m < cap * (1.0 + tol)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::period::omega1_value;

    #[test]
    fn the_claimed_cap_fails_on_complex_torsion() {
        for n in [11i64, 13] {
            for b in [108i64, 80, -13500, -21168, 1_000_003, -1_000_003] {
                assert_eq!(
                    torsion_x_bound_check(n, b, 1e-9),
                    Ok(false),
                    "n = {n}, B = {b}"
                );
            }
        }
    }

    #[test]
    fn extremal_modulus_matches_the_hexagonal_lattice() {
        // Shortest lattice vector ω₁/√3 ⇒ max |x| ≈ 3n²/ω₁² (in u-space,
        // cubed).  The residual is the z⁴ Laurent correction: g₂ = 0.
        let omega1 = omega1_value();
        for n in [11i64, 13] {
            for negative in [false, true] {
                let moduli = rescaled_root_moduli(n, negative).unwrap();
                let max = moduli.iter().cloned().fold(0.0f64, f64::max);
                let predicted = (3.0 * (n * n) as f64 / (omega1 * omega1)).powi(3);
                assert!(
                    (max / predicted - 1.0).abs() < 1e-3,
                    "n = {n}: max |u| = {max}, lattice predicts {predicted}"
                );
                // The failure factor over the claimed cap is ≈ 1.6716 in u.
                let cap = (n as f64 * n as f64 / 7.0).powi(3);
                assert!(max / cap > 1.6 && max / cap < 1.75);
            }
        }
    }

    #[test]
    fn real_points_do_obey_the_cap() {
        // For B > 0 a real point needs u = x³/B real with u ≥ −1 (so that
        // y² = B(u+1) ≥ 0).  Those abscissae stay below (n²/17.7)³ in
        // u-space — far under the cap.  The violating roots are real in u
        // but sit at u < −1: real x, imaginary y, no real point.
        let form = psi_weighted_form(11).unwrap();
        let coeffs: Vec<Complex64> = form
            .rescaled_coeffs(false)
            .iter()
            .map(|c| Complex64::new(c.to_f64().unwrap(), 0.0))
            .collect();
        let roots = complex_roots(&coeffs).unwrap();
        let cap = (121.0f64 / 7.0).powi(3);
        let strong = (121.0f64 / 16.0).powi(3);
        let (mut saw_real_point, mut saw_far_ghost) = (false, false);
        for u in roots {
            if u.im.abs() < 1e-6 * u.norm().max(1.0) {
                if u.re >= -1.0 {
                    saw_real_point = true;
                    assert!(
                        u.norm() < strong,
                        "real-point root |u| = {} vs {strong}",
                        u.norm()
                    );
                } else if u.norm() > cap {
                    saw_far_ghost = true;
                }
            }
        }
        assert!(saw_real_point);
        assert!(saw_far_ghost, "the cap-breaking abscissae carry no real point");
    }

    #[test]
    fn hypotheses_are_enforced() {
        assert!(matches!(
            torsion_x_bound_check(5, 108, 1e-9),
            Err(AnalyticError::HypothesisViolated(_))
        ));
        assert!(matches!(
            torsion_x_bound_check(7, 108, 1e-9),
            Err(AnalyticError::HypothesisViolated(_))
        ));
        assert_eq!(
            torsion_x_bound_check(15, 108, 1e-9),
            Err(AnalyticError::UnsupportedIndex { n: 15 })
        );
        assert_eq!(
            torsion_x_bound_check(14, 108, 1e-9),
            Err(AnalyticError::UnsupportedIndex { n: 14 })
        );
        assert!(matches!(
            torsion_x_bound_check(11, 0, 1e-9),
            Err(AnalyticError::HypothesisViolated(_))
        ));
    }
}

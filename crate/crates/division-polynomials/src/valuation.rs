//! The valuation law for `ord_p(ψ_n(P))` at an integral point.
//!
//! For an integral point `P = (a, b)` whose multiple `[n]P` is integral, the
//! only primes dividing `ψ_n(P)` divide `6B`, and the exact power is dictated
//! by the binary-form structure of `ψ_n` in `(a³, 4B)` together with the
//! local analysis at 2 and 3. The case table implemented here:
//!
//! - `p = 2`: if `ord₂(a³) ≠ ord₂(4B)` the form has a unique minimal term and
//!   `ord₂ = (n²−1)/6 · min(ord₂ a³, ord₂ 4B)`; if both equal 6 the value is
//!   `n²−1` (for `3 ∤ n`; only `≥ n²` is known when `3 | n`).
//! - `p = 3`: with `va = ord₃ a`, `vb = ord₃ b`, `vB = ord₃ B`:
//!   `0` when `3 ∤ abB`; `(n²−1)/4` when `3 ∤ aB`, `3 | b` (odd `n`, `≥ n²/4`
//!   even); `min`-rule when `3va ≠ vB`; and for the balanced case
//!   `ord₃ a³ = ord₃ B = 3`: `(2/3)(n²−1)` if `vb = 2`, `(3/4)(n²−1)` if
//!   `vb ≥ 3` (odd `n`; only lower bounds otherwise).
//! - `p > 3`, `p ∤ n`: `(n²−1)/6 · min(ord_p a³, ord_p B)` when `p | gcd(a,B)`,
//!   else `0`.
//!
//! The integrality of `[n]P` is a caller-asserted hypothesis; it is what
//! forces the "0" cases (no primes outside `6B` divide `ψ_n(P)`).

use curve_core::valuation::bigint_valuation;
use curve_core::{factor::is_prime_u64, CurvePoint, MordellCurve};

use num_traits::Zero;

use crate::error::DivisionPolyError;
use crate::Result;

/// An exact valuation or a lower bound, as the case table provides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prediction {
    Exact(u64),
    AtLeast(u64),
}

/// Predicts `ord_p(ψ_n(P))` from the case table above.
///
/// `P` must be an integral affine point of the curve with `y ≠ 0`; cases the
/// table does not cover report [`DivisionPolyError::CaseNotApplicable`].
pub fn predicted_psi_valuation(
    curve: &MordellCurve,
    point: &CurvePoint,
    n: i64,
    p: u64,
) -> Result<Prediction> {
    if !is_prime_u64(p) {
        return Err(DivisionPolyError::NotPrime(p));
    }
    if n < 2 {
        return Err(DivisionPolyError::UnsupportedIndex { n });
    }
    if !curve.contains(point) {
        return Err(DivisionPolyError::PointNotOnCurve);
    }
    let (a, b) = match point {
        CurvePoint::Identity => return Err(DivisionPolyError::IdentityPoint),
        CurvePoint::Affine { x, y } => {
            if !x.is_integer() || !y.is_integer() {
                return Err(DivisionPolyError::HypothesisViolated(
                    "the valuation law is stated for integral points".into(),
                ));
            }
            (x.to_integer(), y.to_integer())
        }
    };
    if a.is_zero() || b.is_zero() {
        // x = 0 or y = 0 are torsion configurations outside the table.
        return Err(DivisionPolyError::CaseNotApplicable);
    }
    let n_u = n as u64;
    let nn = n_u * n_u;
    let big_b = curve.b_big();
    let odd = n % 2 == 1;
    let coprime_to_3 = n % 3 != 0;

    match p {
        2 => {
            let va3 = 3 * bigint_valuation(&a, 2);
            let v4b = 2 + bigint_valuation(&big_b, 2);
            if va3 != v4b {
                if odd && coprime_to_3 {
                    return Ok(Prediction::Exact((nn - 1) / 6 * va3.min(v4b)));
                }
                return Err(DivisionPolyError::CaseNotApplicable);
            }
            if va3 == 6 {
                if !coprime_to_3 {
                    return Ok(Prediction::AtLeast(nn));
                }
                if odd {
                    return Ok(Prediction::Exact(nn - 1));
                }
            }
            Err(DivisionPolyError::CaseNotApplicable)
        }
        3 => {
            let va = bigint_valuation(&a, 3);
            let vb = bigint_valuation(&b, 3);
            let v_b = bigint_valuation(&big_b, 3);
            if va == 0 && v_b == 0 {
                if vb == 0 {
                    return Ok(if coprime_to_3 {
                        Prediction::Exact(0)
                    } else {
                        Prediction::AtLeast(0)
                    });
                }
                // 3 | y forces a cancellation of fixed depth.
                return Ok(if odd {
                    Prediction::Exact((nn - 1) / 4)
                } else {
                    Prediction::AtLeast(nn / 4)
                });
            }
            if 3 * va != v_b {
                if odd && coprime_to_3 {
                    return Ok(Prediction::Exact((nn - 1) / 6 * (3 * va).min(v_b)));
                }
                return Err(DivisionPolyError::CaseNotApplicable);
            }
            if va == 1 && v_b == 3 {
                // Balanced case; b² = a³ + B has ord₃ ≥ 4, so vb ≥ 2.
                if vb == 2 {
                    return Ok(if coprime_to_3 {
                        Prediction::Exact(2 * (nn - 1) / 3)
                    } else {
                        Prediction::AtLeast(2 * nn / 3)
                    });
                }
                return Ok(if odd {
                    Prediction::Exact(3 * (nn - 1) / 4)
                } else {
                    Prediction::AtLeast(3 * nn / 4)
                });
            }
            Err(DivisionPolyError::CaseNotApplicable)
        }
        _ => {
            let v_b = bigint_valuation(&big_b, p);
            if v_b == 0 {
                // Prime support of ψ_n(P) lies in 6B when [n]P is integral.
                return Ok(Prediction::Exact(0));
            }
            if !odd || !coprime_to_3 {
                return Err(DivisionPolyError::CaseNotApplicable);
            }
            let va3 = 3 * bigint_valuation(&a, p);
            if va3 == 0 {
                // Minimal form term is n·a^{3d}; needs p ∤ n to stay a unit.
                if n_u.is_multiple_of(p) {
                    return Err(DivisionPolyError::CaseNotApplicable);
                }
                return Ok(Prediction::Exact(0));
            }
            // p | gcd(a, B): the minimal term has unit coefficient (±1 or the
            // balanced case reduces to a pure power of 3), so no p ∤ n needed.
            Ok(Prediction::Exact((nn - 1) / 6 * va3.min(v_b)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evaluator::eval_division_polys;
    use curve_core::make_curve;

    fn exact_ord(b: i64, point: (i64, i64), n: i64, p: u64) -> u64 {
        let curve = make_curve(b).unwrap();
        let pt = CurvePoint::affine_int(point.0, point.1);
        let vals = eval_division_polys(&curve, &pt, n).unwrap();
        let v = vals[(n - 1) as usize].psi.to_integer();
        bigint_valuation(&v, p)
    }

    fn predict(b: i64, point: (i64, i64), n: i64, p: u64) -> Prediction {
        let curve = make_curve(b).unwrap();
        let pt = CurvePoint::affine_int(point.0, point.1);
        predicted_psi_valuation(&curve, &pt, n, p).unwrap()
    }

    #[test]
    fn balanced_three_adic_case_on_e108() {
        // (6,18) on E₁₀₈: ord₃a³ = ord₃B = 3, ord₃b = 2 → (2/3)(n²−1) = 16.
        assert_eq!(predict(108, (6, 18), 5, 3), Prediction::Exact(16));
        assert_eq!(exact_ord(108, (6, 18), 5, 3), 16);
    }

    #[test]
    fn two_adic_min_rule_on_e108() {
        // ord₂(a³) = 3 ≠ 4 = ord₂(4B) → 4·min = 12.
        assert_eq!(predict(108, (6, 18), 5, 2), Prediction::Exact(12));
        assert_eq!(exact_ord(108, (6, 18), 5, 2), 12);
    }

    #[test]
    fn deep_y_divisibility_case() {
        // (1,3) on E₈: 3 ∤ aB, 3 | b → (n²−1)/4 = 6 for n = 5.
        assert_eq!(predict(8, (1, 3), 5, 3), Prediction::Exact(6));
        assert_eq!(exact_ord(8, (1, 3), 5, 3), 6);
        // Even n only gives the bound n²/4 = 4; the value is exactly 4 here.
        assert_eq!(predict(8, (1, 3), 4, 3), Prediction::AtLeast(4));
        assert_eq!(exact_ord(8, (1, 3), 4, 3), 4);
    }

    #[test]
    fn large_prime_min_rule() {
        // (60, 450) on E₋₁₃₅₀₀: ord₅(B) = 3 = min(3·1, 3) → 4·3 = 12.
        assert_eq!(predict(-13500, (60, 450), 5, 5), Prediction::Exact(12));
        assert_eq!(exact_ord(-13500, (60, 450), 5, 5), 12);
        // p outside 6B with [n]P integral: prediction 0.
        assert_eq!(predict(108, (6, 18), 5, 7), Prediction::Exact(0));
        assert_eq!(exact_ord(108, (6, 18), 5, 7), 0);
    }

    #[test]
    fn inapplicable_cases_are_reported() {
        let curve = make_curve(108).unwrap();
        let p = CurvePoint::affine_int(6, 18);
        // p | n at a prime dividing B but not a: the minimal form term
        // carries a factor of n, so the table gives no prediction.
        let c80 = make_curve(80).unwrap();
        let g80 = CurvePoint::affine_int(4, 12);
        assert_eq!(
            predicted_psi_valuation(&c80, &g80, 5, 5).unwrap_err(),
            DivisionPolyError::CaseNotApplicable
        );
        assert_eq!(
            predicted_psi_valuation(&curve, &p, 5, 10).unwrap_err(),
            DivisionPolyError::NotPrime(10)
        );
        // 2-torsion point (y = 0).
        let c8 = make_curve(8).unwrap();
        let t = CurvePoint::affine_int(-2, 0);
        assert_eq!(
            predicted_psi_valuation(&c8, &t, 5, 2).unwrap_err(),
            DivisionPolyError::CaseNotApplicable
        );
    }
}

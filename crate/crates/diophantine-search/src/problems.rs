//! The concrete Thue problems controlling `[5]P`, `[7]P`, and `[4]P + T`.
//!
//! For an integral point `P = (a, b)` on `y² = x³ + B` with `[n]P` integral
//! (odd `n` coprime to 3), write `g = gcd(a³, 4B)`, `𝒳 = a³/g`, `ℬ = 4B/g`.
//! The weighted form `Ψₙ(𝒳, ℬ)` then divides a fixed power-smooth constant,
//! so `(𝒳, ℬ)` solves one of finitely many Thue equations:
//!
//! - `n = 5`: `Ψ₅(𝒳, ℬ) = ±3^α 5^γ` with `α ∈ {0, 4, 6}`, `γ ∈ {0, 1}` —
//!   twelve equations ([`psi5_problems`]);
//! - `n = 7`: `Ψ₇ = 𝒢₇ · ℱ₇` splits, giving the simultaneous system
//!   `ℱ₇(𝒳, ℬ) = ±3^{α₁}`, `𝒢₇(𝒳, ℬ) = 3^{α₂} 7^γ` over five exponent
//!   pairs ([`psi7_system_solve`]);
//! - the translated problem `[4]P + T` on curves with two-torsion reduces to
//!   a single octic Thue family ([`four_torsion_thue`]).
//!
//! A Thue solution is only *relevant* if it lifts back to an infinite-order
//! integral point whose `n`-th multiple is in fact integral; most solutions
//! instead force torsion configurations or no curve at all.
//! [`multiple_witness`] decides relevance constructively by searching the
//! lift with exact arithmetic.

use curve_core::arith::multiply;
use curve_core::numeric::perfect_square;
use curve_core::{make_curve, CurvePoint, MordellCurve};
use division_polynomials::psi_weighted_form;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use std::collections::BTreeSet;

use crate::thue::{thue_solve_bounded, Solution, ThueProblem};
use crate::Result;

/// Search box used by the reference problem set.
pub const PSI5_REFERENCE_BOUND: i64 = 100;

/// Ascending coefficients of the sextic factor `ℱ₇` of `Ψ₇`:
/// `x⁶ + 141x⁵y − 363x⁴y² − 1924x³y³ − 741x²y⁴ − 48xy⁵ + y⁶`.
pub const PSI7_SEXTIC: [i64; 7] = [1, -48, -741, -1924, -363, 141, 1];

/// Exponent pairs `(α₁, α₂)` compatible with `ℱ₇ · 𝒢₇ = ±3^α 7^γ`.
pub const PSI7_EXPONENT_PAIRS: [(u32, u32); 5] = [(0, 0), (5, 3), (6, 2), (9, 3), (10, 2)];

/// Ascending coefficients of the translated four-torsion octic:
/// `x⁸ + 8x⁷y − 32x⁶y² − 16x⁵y³ − 56x⁴y⁴ − 64x³y⁵ + 64x²y⁶ − 64xy⁷ − 32y⁸`.
pub const FOUR_TORSION_OCTIC: [i64; 9] = [-32, -64, 64, -64, -56, -16, -32, 8, 1];

/// The twelve Thue problems `Ψ₅(𝒳, ℬ) = ±3^α 5^γ`.
///
/// Each problem carries the reference box `|𝒳|, |ℬ| ≤ 100`; callers may
/// widen `bound` before solving.
pub fn psi5_problems() -> Vec<ThueProblem> {
    let form = psi_weighted_form(5)
        .expect("5 is odd and coprime to 3")
        .coeffs;
    let mut out = Vec::with_capacity(12);
    for sign in [1i64, -1] {
        for alpha in [0u32, 4, 6] {
            for gamma in [0u32, 1] {
                let rhs = BigInt::from(sign)
                    * BigInt::from(3).pow(alpha)
                    * BigInt::from(5).pow(gamma);
                out.push(ThueProblem {
                    form: form.clone(),
                    rhs_set: vec![rhs],
                    bound: PSI5_REFERENCE_BOUND,
                    primitive_only: true,
                });
            }
        }
    }
    out
}

/// The quadratic factor `𝒢₇(x, y) = 7x² − xy + y²` of `Ψ₇`.
pub fn psi7_companion(x: i64, y: i64) -> i128 {
    let (x, y) = (x as i128, y as i128);
    7 * x * x - x * y + y * y
}

/// Primitive solutions of the simultaneous `n = 7` system inside the box.
///
/// A pair `(x, y)` qualifies when `ℱ₇(x, y) = ±3^{α₁}`, the companion value
/// `𝒢₇(x, y)` equals `3^{α₂}` or `7·3^{α₂}` for the paired exponent, and
/// `xy ≠ 0` (axis pairs cannot come from a point: they force `a = 0` or
/// `B = 0`).
pub fn psi7_system_solve(bound: i64) -> Result<Vec<Solution>> {
    let form: Vec<BigInt> = PSI7_SEXTIC.iter().map(|&c| BigInt::from(c)).collect();
    let mut out: BTreeSet<Solution> = BTreeSet::new();
    for (a1, a2) in PSI7_EXPONENT_PAIRS {
        let sextic_rhs = BigInt::from(3).pow(a1);
        let sols = thue_solve_bounded(&ThueProblem {
            form: form.clone(),
            rhs_set: vec![sextic_rhs.clone(), -sextic_rhs],
            bound,
            primitive_only: true,
        })?;
        let companion_rhs = 3i128.pow(a2);
        for s in sols {
            if s.x == 0 || s.y == 0 {
                continue;
            }
            let g = psi7_companion(s.x, s.y);
            if g == companion_rhs || g == 7 * companion_rhs {
                out.insert(s);
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Primitive solutions of the four-torsion octic against all eight
/// right-hand sides `±2^α 3^β`, `α ∈ {0, 5}`, `β ∈ {0, 4}`.
pub fn four_torsion_thue(bound: i64) -> Result<Vec<Solution>> {
    let form = FOUR_TORSION_OCTIC.iter().map(|&c| BigInt::from(c)).collect();
    let mut rhs_set = Vec::with_capacity(8);
    for sign in [1i64, -1] {
        for alpha in [0u32, 5] {
            for beta in [0u32, 4] {
                rhs_set.push(
                    BigInt::from(sign)
                        * BigInt::from(2).pow(alpha)
                        * BigInt::from(3).pow(beta),
                );
            }
        }
    }
    thue_solve_bounded(&ThueProblem {
        form,
        rhs_set,
        bound,
        primitive_only: true,
    })
}

/// Searches for an integral witness behind a Thue solution class `±(𝒳, ℬ)`.
///
/// The lift inverts `𝒳 = a³/g`, `ℬ = 4B/g`: for each `|a| ≤ a_limit` it
/// reconstructs `g` and `B`, verifies that `g` really is `gcd(a³, 4B)`,
/// that the curve is quasi-minimal, that `a³ + B` is a perfect square, and
/// that the resulting infinite-order point has integral `[n]`-th multiple.
/// Both signs of the class are tried, since the even-degree forms cannot
/// tell `(𝒳, ℬ)` from `(−𝒳, −ℬ)`.  `Some(_)` is a constructive witness;
/// `None` means no witness exists with `|a| ≤ a_limit`.
pub fn multiple_witness(
    sol_x: i64,
    sol_y: i64,
    n: i64,
    a_limit: i64,
) -> Result<Option<(MordellCurve, CurvePoint)>> {
    for sign in [1i64, -1] {
        let script_x = sign * sol_x;
        let script_b = sign * sol_y;
        if script_x == 0 || script_b == 0 {
            // a = 0 gives the three-torsion point (0, ±√B); B = 0 no curve.
            continue;
        }
        for mag in 1..=a_limit.max(0) {
            for a in [mag, -mag] {
                let a3 = (a as i128).pow(3);
                if a3 % script_x as i128 != 0 {
                    continue;
                }
                let g = a3 / script_x as i128;
                if g <= 0 {
                    continue;
                }
                let four_b = script_b as i128 * g;
                if four_b % 4 != 0 {
                    continue;
                }
                let Ok(b_coeff) = i64::try_from(four_b / 4) else {
                    continue;
                };
                if b_coeff == 0 {
                    continue;
                }
                if BigInt::from(a3).gcd(&BigInt::from(four_b)) != BigInt::from(g) {
                    continue;
                }
                let Ok(curve) = make_curve(b_coeff) else {
                    continue;
                };
                if !curve.quasi_minimal() {
                    continue;
                }
                let y_sq = BigInt::from(a3 + b_coeff as i128);
                let Some(y) = perfect_square(&y_sq) else {
                    continue;
                };
                let y = y.to_i64().expect("|y| <= sqrt(a_limit^3 + |B|)");
                let p = CurvePoint::affine_int(a, y);
                if curve.is_torsion_point(&p) {
                    continue;
                }
                if multiply(&curve, &p, n)?.is_integral() {
                    return Ok(Some((curve, p)));
                }
            }
        }
    }
    Ok(None)
}

/// Relevance filter for `[5]P`: the witness search at `n = 5`.
pub fn psi5_point_witness(
    sol_x: i64,
    sol_y: i64,
    a_limit: i64,
) -> Result<Option<(MordellCurve, CurvePoint)>> {
    multiple_witness(sol_x, sol_y, 5, a_limit)
}

//! Bounded solver for Thue equations `F(x, y) = c`.
//!
//! The searches below never need the full Baker–Davenport machinery: every
//! equation of interest has all of its solutions inside a tiny box, and the
//! surrounding theory only consumes the *complete list inside a stated box*.
//! So the solver slices the box by `y`.  On the slice `y ≠ 0` the
//! substitution `x = zy` turns `F(x, y) = c` into
//!
//! ```text
//!     Σ f_i z^i  =  c / y^d,
//! ```
//!
//! a polynomial in `z` whose coefficients do not grow with `y`, hence stays
//! well conditioned; its complex roots bracket every integer candidate, and
//! each candidate is confirmed in exact arithmetic.  Floating point can
//! therefore cost time, never truth.  The slice `y = 0` degenerates to
//! `f_d x^d = c` and is handled by an exact integer root.

use std::collections::BTreeSet;

use division_polynomials::complex_roots;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::SearchError;
use crate::Result;

/// Hard ceiling on the search box (resource guard).
pub const BOUND_LIMIT: i64 = 1_000_000;

/// Find integer pairs with `F(x, y)` in a finite set of right-hand sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThueProblem {
    /// `form[i]` multiplies `x^i y^{d−i}`, where `d = form.len() − 1`.
    pub form: Vec<BigInt>,
    /// Right-hand sides accepted simultaneously.
    pub rhs_set: Vec<BigInt>,
    /// Search box `|x|, |y| ≤ bound`.
    pub bound: i64,
    /// Keep only primitive solutions, `gcd(x, y) = 1`.
    pub primitive_only: bool,
}

/// One solution, tagged with the right-hand side it attained.
///
/// The derived order is lexicographic in `(x, y)`, which is also the output
/// order of the solver.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Solution {
    pub x: i64,
    pub y: i64,
    pub rhs: BigInt,
}

/// Exact value of a binary form at integer arguments.
pub fn eval_form(form: &[BigInt], x: i64, y: i64) -> BigInt {
    let d = form.len() - 1;
    let (x, y) = (BigInt::from(x), BigInt::from(y));
    let mut acc = BigInt::zero();
    let mut xp = BigInt::one();
    for (i, c) in form.iter().enumerate() {
        acc += c * &xp * y.pow((d - i) as u32);
        xp *= &x;
    }
    acc
}

/// All (primitive) solutions inside the box, in lexicographic `(x, y)` order.
pub fn thue_solve_bounded(problem: &ThueProblem) -> Result<Vec<Solution>> {
    if problem.bound > BOUND_LIMIT {
        return Err(SearchError::BoundTooLarge {
            bound: problem.bound,
            limit: BOUND_LIMIT,
        });
    }
    let d = match problem.form.len() {
        0 => return Err(SearchError::MalformedForm("empty coefficient list".into())),
        n => n - 1,
    };
    let lead = problem.form.last().expect("nonempty");
    if d == 0 || lead.is_zero() {
        return Err(SearchError::MalformedForm(
            "leading coefficient (of x^d) must be nonzero and d >= 1".into(),
        ));
    }
    let bound = problem.bound;
    let mut out: BTreeSet<Solution> = BTreeSet::new();
    if bound < 0 {
        return Ok(Vec::new());
    }

    // No right-hand side beyond this magnitude is attainable inside the box.
    let box_big = BigInt::from(bound);
    let attainable: BigInt = problem
        .form
        .iter()
        .map(|c| c.abs() * box_big.pow(d as u32))
        .sum();
    let rhs_live: Vec<&BigInt> = problem
        .rhs_set
        .iter()
        .filter(|r| r.abs() <= attainable)
        .collect();

    let mut push = |x: i64, y: i64, rhs: &BigInt| {
        if x.abs() > bound || y.abs() > bound {
            return;
        }
        if problem.primitive_only && x.unsigned_abs().gcd(&y.unsigned_abs()) != 1 {
            return;
        }
        if &eval_form(&problem.form, x, y) == rhs {
            out.insert(Solution {
                x,
                y,
                rhs: rhs.clone(),
            });
        }
    };

    // y = 0: the form collapses to lead * x^d.
    for rhs in &rhs_live {
        let (q, rem) = rhs.div_rem(lead);
        if !rem.is_zero() {
            continue;
        }
        if q.is_zero() {
            push(0, 0, rhs);
            continue;
        }
        if q.is_negative() && d % 2 == 0 {
            continue;
        }
        let root = q.abs().nth_root(d as u32);
        if root.pow(d as u32) != q.abs() {
            continue;
        }
        if let Some(r) = root.to_i64() {
            let r = if q.is_negative() && d % 2 == 1 { -r } else { r };
            push(r, 0, rhs);
            if d % 2 == 0 {
                push(-r, 0, rhs);
            }
        }
    }

    // y ≠ 0: roots in z = x / y.
    let f_coeffs: Vec<f64> = problem
        .form
        .iter()
        .map(|c| c.to_f64().unwrap_or(f64::INFINITY))
        .collect();
    if f_coeffs.iter().any(|c| !c.is_finite()) {
        return Err(SearchError::MalformedForm(
            "coefficients exceed floating-point range".into(),
        ));
    }
    for y in -bound..=bound {
        if y == 0 {
            continue;
        }
        let yd = (y as f64).powi(d as i32);
        for rhs in &rhs_live {
            let shift = rhs.to_f64().unwrap_or(f64::INFINITY) / yd;
            if !shift.is_finite() {
                continue;
            }
            let mut coeffs: Vec<Complex64> =
                f_coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect();
            coeffs[0] -= shift;
            let roots = complex_roots(&coeffs)?;
            for root in roots {
                if root.im.abs() > 1e-6 * (1.0 + root.re.abs()) {
                    continue;
                }
                let x_real = root.re * y as f64;
                if !x_real.is_finite() || x_real.abs() > bound as f64 + 3.0 {
                    continue;
                }
                let x0 = x_real.round() as i64;
                for x in x0.saturating_sub(2)..=x0.saturating_add(2) {
                    push(x, y, rhs);
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use division_polynomials::psi_weighted_form;

    fn psi5_coeffs() -> Vec<BigInt> {
        psi_weighted_form(5).expect("5 is odd, coprime to 3").coeffs
    }

    fn pairs(sols: &[Solution]) -> Vec<(i64, i64)> {
        sols.iter().map(|s| (s.x, s.y)).collect()
    }

    #[test]
    fn quintic_form_convention_matches_hand_value() {
        // 5·1 + 95·2 − 15·4 − 25·8 − 16 = −81 at (x, y) = (1, 2).
        assert_eq!(eval_form(&psi5_coeffs(), 1, 2), BigInt::from(-81));
        assert_eq!(eval_form(&psi5_coeffs(), -1, 1), BigInt::from(-81));
    }

    #[test]
    fn quintic_rhs_minus_81_has_exactly_four_primitive_solutions() {
        let sols = thue_solve_bounded(&ThueProblem {
            form: psi5_coeffs(),
            rhs_set: vec![BigInt::from(-81)],
            bound: 100,
            primitive_only: true,
        })
        .unwrap();
        assert_eq!(pairs(&sols), vec![(-1, -2), (-1, 1), (1, -1), (1, 2)]);
    }

    #[test]
    fn quintic_rhs_plus_one_is_empty_in_the_box() {
        let sols = thue_solve_bounded(&ThueProblem {
            form: psi5_coeffs(),
            rhs_set: vec![BigInt::from(1)],
            bound: 100,
            primitive_only: true,
        })
        .unwrap();
        assert!(sols.is_empty());
    }

    #[test]
    fn zero_bound_yields_nothing() {
        let sols = thue_solve_bounded(&ThueProblem {
            form: psi5_coeffs(),
            rhs_set: vec![BigInt::from(-81), BigInt::from(5)],
            bound: 0,
            primitive_only: false,
        })
        .unwrap();
        assert!(sols.is_empty());
    }

    #[test]
    fn oversized_bound_is_rejected() {
        let err = thue_solve_bounded(&ThueProblem {
            form: psi5_coeffs(),
            rhs_set: vec![BigInt::from(1)],
            bound: BOUND_LIMIT + 1,
            primitive_only: true,
        })
        .unwrap_err();
        assert_eq!(
            err,
            SearchError::BoundTooLarge {
                bound: BOUND_LIMIT + 1,
                limit: BOUND_LIMIT
            }
        );
    }

    #[test]
    fn degenerate_forms_are_rejected() {
        for form in [Vec::new(), vec![BigInt::from(3)], vec![BigInt::from(1), BigInt::zero()]] {
            let err = thue_solve_bounded(&ThueProblem {
                form,
                rhs_set: vec![BigInt::from(1)],
                bound: 10,
                primitive_only: false,
            })
            .unwrap_err();
            assert!(matches!(err, SearchError::MalformedForm(_)));
        }
    }

    #[test]
    fn axis_solutions_and_primitivity_filtering() {
        // x² + y² = 4 is solved only by (0, ±2), (±2, 0) — all imprimitive.
        let circle = ThueProblem {
            form: vec![BigInt::from(1), BigInt::zero(), BigInt::from(1)],
            rhs_set: vec![BigInt::from(4)],
            bound: 3,
            primitive_only: false,
        };
        let all = thue_solve_bounded(&circle).unwrap();
        assert_eq!(pairs(&all), vec![(-2, 0), (0, -2), (0, 2), (2, 0)]);
        let primitive = thue_solve_bounded(&ThueProblem {
            primitive_only: true,
            ..circle
        })
        .unwrap();
        assert!(primitive.is_empty());
    }

    #[test]
    fn multiple_right_hand_sides_are_tagged() {
        let sols = thue_solve_bounded(&ThueProblem {
            form: psi5_coeffs(),
            rhs_set: vec![BigInt::from(-81), BigInt::from(5)],
            bound: 100,
            primitive_only: true,
        })
        .unwrap();
        assert_eq!(
            pairs(&sols),
            vec![(-1, -2), (-1, 0), (-1, 1), (1, -1), (1, 0), (1, 2)]
        );
        for s in &sols {
            let expect = if s.y == 0 { 5 } else { -81 };
            assert_eq!(s.rhs, BigInt::from(expect));
        }
    }
}

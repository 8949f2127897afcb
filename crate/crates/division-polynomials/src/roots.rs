//! Torsion x-coordinates as complex roots, and the product identity
//!
//! ```text
//! ψ_n(P)² = n² · ∏_{Q ∈ E[n] \ {O}} (x(P) − x(Q))
//! ```
//!
//! checked numerically against the exact integer value of `ψ_n(P)`.
//!
//! Root extraction is a plain Durand–Kerner simultaneous iteration: the
//! polynomials here are small (degree ≤ 28 for the indices we accept) and
//! their roots are well separated, so nothing fancier is warranted.  For
//! odd indices coprime to 6 the product is evaluated through the weighted
//! form in `u = x³/|B|`, which keeps the iteration's coefficients at unit
//! scale regardless of `B` and collapses each triple of conjugate cube
//! roots into the single exact factor `x(P)³ − |B|·u_j`.

use curve_core::numeric::{ln_big, ln_ratio};
use curve_core::{CurvePoint, MordellCurve};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::DivisionPolyError;
use crate::evaluator::DivisionPolyEvaluator;
use crate::weighted::psi_weighted_form;
use crate::Result;

/// All complex roots of the polynomial with little-endian coefficients
/// `coeffs[k]·z^k`, via Durand–Kerner.  A constant polynomial has no
/// roots; failure to converge in 500 sweeps is reported as an error.
pub fn complex_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    let mut cs: Vec<Complex64> = coeffs.to_vec();
    while cs.len() > 1 && cs.last().is_some_and(|c| c.norm() == 0.0) {
        cs.pop();
    }
    let deg = cs.len().saturating_sub(1);
    if deg == 0 {
        return Ok(Vec::new());
    }
    let lead = cs[deg];
    if !lead.is_finite() || lead.norm() < 1e-300 {
        return Err(DivisionPolyError::RootFindingFailure);
    }
    let monic: Vec<Complex64> = cs.iter().map(|c| c / lead).collect();
    let eval = |z: Complex64| {
        monic
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
    };
    // Fujiwara bound on root magnitude, so the starting spiral encloses
    // every root even for the rescaled forms (roots out to ~(n²/7)³).
    let radius = monic[..deg]
        .iter()
        .enumerate()
        .map(|(i, c)| 2.0 * c.norm().powf(1.0 / (deg - i) as f64))
        .fold(1.0f64, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (1..=deg)
        .map(|k| seed.powu(k as u32) * radius)
        .collect();
    for _ in 0..1000 {
        let mut worst = 0.0f64;
        for i in 0..deg {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..deg {
                if j != i {
                    denom *= z[i] - z[j];
                }
            }
            if denom.norm() == 0.0 {
                // Coincident iterates: nudge apart and keep sweeping.
                z[i] += Complex64::new(1e-8, 1e-8) * (radius + 1.0);
                worst = f64::INFINITY;
                continue;
            }
            let step = eval(z[i]) / denom;
            z[i] -= step;
            let rel = step.norm() / (1.0 + z[i].norm());
            if rel.is_nan() {
                worst = f64::INFINITY;
            } else {
                worst = worst.max(rel);
            }
        }
        if worst < 1e-13 {
            return Ok(z);
        }
    }
    Err(DivisionPolyError::RootFindingFailure)
}

fn cubic_roots(constant: f64) -> Result<Vec<Complex64>> {
    // z³ + constant
    complex_roots(&[
        Complex64::new(constant, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(1.0, 0.0),
    ])
}

/// Residual `|1 − n²·∏_Q |x(P) − x(Q)| / ψ_n(P)²|` over the nonzero
/// `n`-torsion.  Exactly `0.0` when `ψ_n(P) = 0` (the point meets the
/// torsion x-coordinates and both sides of the identity vanish).
///
/// Supported indices: `2`, `3`, `4`, and odd `n ≥ 5` coprime to 3.
pub fn torsion_product_residual(
    curve: &MordellCurve,
    point: &CurvePoint,
    n: i64,
) -> Result<f64> {
    if n < 2 {
        return Err(DivisionPolyError::UnsupportedIndex { n });
    }
    let x = match point {
        CurvePoint::Identity => return Err(DivisionPolyError::IdentityPoint),
        CurvePoint::Affine { x, .. } => x.clone(),
    };
    let mut ev = DivisionPolyEvaluator::new(curve, point)?;
    let psi = ev.psi(n as usize);
    if psi.is_zero() {
        return Ok(0.0);
    }
    let b = curve.b() as f64;
    let x_f = curve_core::numeric::ratio_to_f64(&x);
    // log of the product side, accumulated as Σ mult·ln|x_P − root|.
    let mut log_product = 2.0 * (n as f64).ln();
    match n {
        2 => {
            for r in cubic_roots(b)? {
                log_product += (Complex64::new(x_f, 0.0) - r).norm().ln();
            }
        }
        3 => {
            log_product += 2.0 * x_f.abs().ln();
            for r in cubic_roots(4.0 * b)? {
                log_product += 2.0 * (Complex64::new(x_f, 0.0) - r).norm().ln();
            }
        }
        4 => {
            for r in cubic_roots(b)? {
                log_product += (Complex64::new(x_f, 0.0) - r).norm().ln();
            }
            // Exact order 4: x⁶ + 20Bx³ − 8B².
            let sextic = [
                Complex64::new(-8.0 * b * b, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(20.0 * b, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(1.0, 0.0),
            ];
            for r in complex_roots(&sextic)? {
                log_product += 2.0 * (Complex64::new(x_f, 0.0) - r).norm().ln();
            }
        }
        _ if n % 2 == 1 && n % 3 != 0 => {
            // ψ_n(x) = n·∏_j (x³ − |B|u_j) over the roots u_j of the
            // rescaled weighted form, so each factor triple is exact.
            let form = psi_weighted_form(n)?;
            let b_abs = curve.b_big().abs();
            let coeffs: Vec<Complex64> = form
                .rescaled_coeffs(curve.b() < 0)
                .iter()
                .map(|c| Complex64::new(c.to_f64().expect("rescaled coefficient"), 0.0))
                .collect();
            let u_roots = complex_roots(&coeffs)?;
            let degree = u_roots.len() as f64;
            let u_p = &x * &x * &x / BigRational::from_integer(b_abs.clone());
            let u_f = curve_core::numeric::ratio_to_f64(&u_p);
            log_product += 2.0 * degree * ln_big(&b_abs);
            for u in u_roots {
                log_product += 2.0 * (Complex64::new(u_f, 0.0) - u).norm().ln();
            }
        }
        _ => return Err(DivisionPolyError::UnsupportedIndex { n }),
    }
    let log_psi_sq = 2.0 * ln_ratio(&psi.abs());
    Ok((1.0 - (log_product - log_psi_sq).exp()).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use curve_core::make_curve;

    fn assert_residual(b: i64, x: i64, y: i64, n: i64, tol: f64) {
        let curve = make_curve(b).unwrap();
        let p = CurvePoint::affine_int(x, y);
        let res = torsion_product_residual(&curve, &p, n).unwrap();
        assert!(
            res <= tol,
            "residual {res:e} over tolerance {tol:e} for n = {n}, B = {b}"
        );
    }

    #[test]
    fn roots_of_benchmarks() {
        // z³ − 1: the cube roots of unity.
        let roots = complex_roots(&[
            Complex64::new(-1.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
        ])
        .unwrap();
        assert_eq!(roots.len(), 3);
        for r in &roots {
            assert!((r.powu(3) - Complex64::new(1.0, 0.0)).norm() < 1e-10);
        }
        let mut real_count = 0;
        for r in &roots {
            if r.im.abs() < 1e-10 {
                real_count += 1;
                assert!((r.re - 1.0).abs() < 1e-10);
            }
        }
        assert_eq!(real_count, 1);
        // Constant polynomial: no roots.
        assert!(complex_roots(&[Complex64::new(3.0, 0.0)])
            .unwrap()
            .is_empty());
    }

    #[test]
    fn product_identity_small_indices() {
        for n in [2, 3, 4, 5] {
            assert_residual(108, 6, 18, n, 1e-9);
        }
        assert_residual(80, 4, 12, 5, 1e-9);
        assert_residual(8, 1, 3, 7, 1e-9);
        assert_residual(-2160, 24, 108, 7, 1e-9);
    }

    #[test]
    fn product_identity_large_indices() {
        assert_residual(108, 6, 18, 11, 1e-6);
        assert_residual(-13500, 60, 450, 11, 1e-6);
        assert_residual(108, 6, 18, 13, 1e-6);
    }

    #[test]
    fn torsion_point_gives_exact_zero() {
        // (0, 4) is 3-torsion on y² = x³ + 16: ψ₃ vanishes and the
        // residual is pinned to zero rather than computed.
        let curve = make_curve(16).unwrap();
        let p = CurvePoint::affine_int(0, 4);
        assert_eq!(torsion_product_residual(&curve, &p, 3).unwrap(), 0.0);
    }

    #[test]
    fn unsupported_indices_are_rejected() {
        let curve = make_curve(108).unwrap();
        let p = CurvePoint::affine_int(6, 18);
        for n in [6, 8, 9, 15] {
            assert_eq!(
                torsion_product_residual(&curve, &p, n).unwrap_err(),
                DivisionPolyError::UnsupportedIndex { n }
            );
        }
        assert_eq!(
            torsion_product_residual(&curve, &CurvePoint::Identity, 2).unwrap_err(),
            DivisionPolyError::IdentityPoint
        );
    }
}

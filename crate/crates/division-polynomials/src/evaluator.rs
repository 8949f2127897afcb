//! Exact evaluation of `(ψ_n, φ_n, ω_n)` at a rational point, and the
//! multiple map `[n]P = (φ_n/ψ_n², ω_n/ψ_n³)` as an independent route to
//! point multiples.

use curve_core::{denominator_profile, CurvePoint, MordellCurve};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::DivisionPolyError;
use crate::Result;

/// The three division-polynomial values at one index, plus the normalized
/// integral forms for rational points.
///
/// Writing `x(P) = a/d²` in lowest terms, `ψ̂_n = d^{n²−1} ψ_n(P)` and
/// `φ̂_n = d^{2n²} φ_n(P)` are integers even when `P` is non-integral (the
/// division polynomials are weighted-homogeneous). For integral `P` all of
/// `psi`, `phi`, `omega` are integers and `psi_hat = psi`, `phi_hat = phi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionPolyValue {
    pub n: i64,
    pub psi: BigRational,
    pub phi: BigRational,
    pub omega: BigRational,
    pub psi_hat: BigInt,
    pub phi_hat: BigInt,
}

/// Memoized evaluator for one `(curve, point)` session: computing the values
/// up to `n` costs `O(n)` recurrence steps in total.
pub struct DivisionPolyEvaluator {
    x: BigRational,
    y: BigRational,
    /// `f = x³ + B = y²` at the point.
    f: BigRational,
    /// Denominator scale: `x = a/d²`.
    d: BigInt,
    /// `vals[n]` is `ψ_n(P)` for odd `n`, `ψ_n(P)/y` for even `n`.
    vals: Vec<BigRational>,
}

impl DivisionPolyEvaluator {
    pub fn new(curve: &MordellCurve, point: &CurvePoint) -> Result<Self> {
        let (x, y) = match point {
            CurvePoint::Identity => return Err(DivisionPolyError::IdentityPoint),
            CurvePoint::Affine { x, y } => (x.clone(), y.clone()),
        };
        if !curve.contains(point) {
            return Err(DivisionPolyError::PointNotOnCurve);
        }
        let (_, d) =
            denominator_profile(point).map_err(|_| DivisionPolyError::PointNotOnCurve)?;
        let b = BigRational::from_integer(curve.b_big());
        let f = &x * &x * &x + b.clone();
        // Seeds: ψ0, ψ1, ψ2/y, ψ3, ψ4/y.
        let x3 = &x * &x * &x;
        let psi3 = BigRational::from_integer(3.into()) * &x * &x3
            + BigRational::from_integer(12.into()) * &b * &x;
        let psi4_red = BigRational::from_integer(4.into()) * &x3 * &x3
            + BigRational::from_integer(80.into()) * &b * &x3
            - BigRational::from_integer(32.into()) * &b * &b;
        Ok(DivisionPolyEvaluator {
            x,
            y,
            f,
            d,
            vals: vec![
                BigRational::zero(),
                BigRational::one(),
                BigRational::from_integer(2.into()),
                psi3,
                psi4_red,
            ],
        })
    }

    fn val(&mut self, n: usize) -> BigRational {
        self.extend_to(n);
        self.vals[n].clone()
    }

    fn extend_to(&mut self, n: usize) {
        while self.vals.len() <= n {
            let k = self.vals.len();
            let m = k / 2;
            let next = if k % 2 == 1 {
                let f2 = &self.f * &self.f;
                let (a, b, c, d) = (
                    self.vals[m + 2].clone(),
                    self.vals[m].clone(),
                    self.vals[m - 1].clone(),
                    self.vals[m + 1].clone(),
                );
                let cube = |v: &BigRational| v * v * v;
                if m.is_multiple_of(2) {
                    f2 * (a * cube(&b)) - c * cube(&d)
                } else {
                    a * cube(&b) - f2 * (c * cube(&d))
                }
            } else {
                let sq = |v: &BigRational| v * v;
                let inner = &self.vals[m + 2] * sq(&self.vals[m - 1])
                    - &self.vals[m - 2] * sq(&self.vals[m + 1]);
                (&self.vals[m] * inner) / BigRational::from_integer(2.into())
            };
            self.vals.push(next);
        }
    }

    /// `ψ_n(P)` with the `y` factor of even indices reinstated.
    pub fn psi(&mut self, n: usize) -> BigRational {
        let v = self.val(n);
        if n.is_multiple_of(2) {
            v * &self.y
        } else {
            v
        }
    }

    /// `φ_n(P) = x ψ_n² − ψ_{n+1} ψ_{n−1}`.
    pub fn phi(&mut self, n: usize) -> BigRational {
        assert!(n >= 1);
        let psin = self.val(n);
        let mut psin_sq = &psin * &psin;
        if n.is_multiple_of(2) {
            psin_sq *= &self.f;
        }
        let cross = if n == 1 {
            // ψ_0 = 0.
            BigRational::zero()
        } else {
            let up = self.val(n + 1);
            let down = self.val(n - 1);
            if n.is_multiple_of(2) {
                up * down
            } else {
                &self.f * (up * down)
            }
        };
        &self.x * psin_sq - cross
    }

    /// `ω_n(P) = (ψ_{n+2} ψ_{n−1}² − ψ_{n−2} ψ_{n+1}²)/4y`, evaluated with
    /// the `y²`-reductions pulled through so no division by `y` occurs.
    pub fn omega(&mut self, n: usize) -> BigRational {
        assert!(n >= 1);
        let four = BigRational::from_integer(4.into());
        if n == 1 {
            // ω_1 = y via ψ_{-1} = −1, ψ_0 = 0, ψ_2 = 2y, ψ_3 pure.
            return self.y.clone();
        }
        let sq = |v: &BigRational| v * v;
        if n % 2 == 1 {
            // ψ_{n±2} pure, ψ_{n∓1} carry y.
            let t = &self.val(n + 2) * sq(&self.val(n - 1))
                - &self.val(n - 2) * sq(&self.val(n + 1));
            &self.y * t / four
        } else {
            // ψ_{n±2} carry y, ψ_{n∓1} pure; the y's cancel against 4y.
            let t = &self.val(n + 2) * sq(&self.val(n - 1))
                - &self.val(n - 2) * sq(&self.val(n + 1));
            t / four
        }
    }
}

/// Evaluates `(ψ_n, φ_n, ω_n, ψ̂_n, φ̂_n)` for `n = 1..=n_max` at a rational
/// point, in one memoized sweep.
pub fn eval_division_polys(
    curve: &MordellCurve,
    point: &CurvePoint,
    n_max: i64,
) -> Result<Vec<DivisionPolyValue>> {
    if n_max < 1 {
        return Err(DivisionPolyError::UnsupportedIndex { n: n_max });
    }
    let mut ev = DivisionPolyEvaluator::new(curve, point)?;
    let mut out = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let psi = ev.psi(n as usize);
        let phi = ev.phi(n as usize);
        let omega = ev.omega(n as usize);
        let nn = n as u32;
        let psi_hat_r = &psi * BigRational::from_integer(ev.d.pow(nn * nn - 1));
        let phi_hat_r = &phi * BigRational::from_integer(ev.d.pow(2 * nn * nn));
        assert!(
            psi_hat_r.is_integer() && phi_hat_r.is_integer(),
            "normalized division-polynomial values must be integral"
        );
        out.push(DivisionPolyValue {
            n,
            psi,
            phi,
            omega,
            psi_hat: psi_hat_r.to_integer(),
            phi_hat: phi_hat_r.to_integer(),
        });
    }
    Ok(out)
}

/// `[n]P` computed through division polynomials only — the designated
/// cross-check route against the chord–tangent `multiply`.
pub fn multiple_via_division_polys(
    curve: &MordellCurve,
    point: &CurvePoint,
    n: i64,
) -> Result<CurvePoint> {
    if n == 0 {
        return Ok(CurvePoint::Identity);
    }
    let (n_abs, flip) = (n.unsigned_abs() as usize, n < 0);
    let mut ev = DivisionPolyEvaluator::new(curve, point)?;
    let psi = ev.psi(n_abs);
    if psi.is_zero() {
        return Err(DivisionPolyError::TorsionObstruction { n });
    }
    let phi = ev.phi(n_abs);
    let omega = ev.omega(n_abs);
    let psi_sq = &psi * &psi;
    let x = phi / &psi_sq;
    let mut y = omega / (psi_sq * psi);
    if flip {
        y = -y;
    }
    Ok(CurvePoint::affine(x, y))
}

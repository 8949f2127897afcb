//! The real period of `y² = x³ + B`.
//!
//! The cubic `t³ + B` has one real root `e₁ = −∛B` and a conjugate pair
//! `e₁ρ, e₁ρ̄` (`ρ = e^{2πi/3}`), so the discriminant is negative, the
//! real locus is a single unbounded component, and the lattice is
//! hexagonal: `τ = ½ + i·√3/2` independently of `B`.  The real period is
//! the complete integral
//!
//! ```text
//! ω = ∫_{e₁}^∞ dt / √(t³ + B) = 2·Re R_F(0, e₁ − e₁ρ, e₁ − e₁ρ̄),
//! ```
//!
//! and twisting by a sixth power rescales it: `ω(u⁶B) = ω(B)/u`.

use std::sync::OnceLock;

use num_complex::Complex64;

use crate::carlson::carlson_rf;
use crate::error::AnalyticError;
use crate::Result;

/// Period data of `E_B`, plus the constants every estimate reuses.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeriodData {
    /// The real period `ω` of `E_B`.
    pub omega_real: f64,
    /// The real period of `E_1`, `ω₁ = 4.20654…`.
    pub omega1: f64,
    /// `Im τ = √3/2` for the hexagonal lattice (every `B`).
    pub tau_im: f64,
}

/// The real root `e₁ = −∛B` and the primitive cube root of unity, as the
/// ingredients of every `R_F` call in this crate.
pub(crate) fn cubic_geometry(b: i64) -> (f64, Complex64) {
    let e1 = -(b as f64).cbrt();
    let rho = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
    (e1, rho)
}

pub(crate) fn omega_of(b: i64, tol: f64) -> Result<f64> {
    let (e1, rho) = cubic_geometry(b);
    let e1c = Complex64::new(e1, 0.0);
    let rf = carlson_rf(Complex64::new(0.0, 0.0), e1c - e1c * rho, e1c - e1c * rho.conj(), tol)?;
    Ok(2.0 * rf.re)
}

static OMEGA1: OnceLock<f64> = OnceLock::new();

pub(crate) fn omega1_value() -> f64 {
    *OMEGA1.get_or_init(|| omega_of(1, 1e-12).expect("the period of B = 1 converges"))
}

/// Computes the real period of `E_B` for any nonzero integer `B`
/// (quasi-minimality is irrelevant here — twisting only rescales `ω`).
pub fn real_period(b: i64, tol: f64) -> Result<PeriodData> {
    if b == 0 {
        return Err(AnalyticError::HypothesisViolated(
            "B must be nonzero".into(),
        ));
    }
    Ok(PeriodData {
        omega_real: omega_of(b, tol)?,
        omega1: omega1_value(),
        tau_im: 3f64.sqrt() / 2.0,
    })
}

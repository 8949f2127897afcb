//! The weighted binary-form view of odd-index division polynomials.
//!
//! Give `x` weight 2 and `4B` weight 6. For odd `n` not divisible by 3,
//! `ψ_n` is isobaric of weight `n²−1`, hence a binary form of degree
//! `d = (n²−1)/6` in `(x³, 4B)`:
//!
//! ```text
//! ψ_n(x, B) = Σ_{i=0}^{d} c_i · (x³)^i · (4B)^{d−i},   c_d = n, c_0 = ±1.
//! ```
//!
//! Dividing by `gcd(x³, 4B)` turns integral-multiple constraints into Thue
//! equations `Ψ_n(X, Y) = (small explicit constant)`; the searches in the
//! Diophantine crate consume exactly these coefficient vectors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::DivisionPolyError;
use crate::sympoly::SymbolicPsi;
use crate::Result;

/// A binary form `Σ c_i X^i Y^{d−i}` extracted from `ψ_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedBinaryForm {
    pub n: i64,
    pub degree: usize,
    /// `coeffs[i]` multiplies `X^i Y^{d−i}`.
    pub coeffs: Vec<BigInt>,
}

impl WeightedBinaryForm {
    /// Exact evaluation at integer arguments.
    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        let mut xp = BigInt::one();
        // Horner-free but exact; degrees here are tiny (≤ 28).
        for (i, c) in self.coeffs.iter().enumerate() {
            let yp = y.pow((self.degree - i) as u32);
            acc += c * &xp * yp;
            xp *= x;
        }
        acc
    }

    /// Coefficients of the univariate polynomial `F(u) = Σ c_i u^i (±4)^{d−i}`
    /// obtained by substituting `x³ = |B| u`: its roots are the rescaled
    /// `x`-coordinates of the nonzero `n`-torsion, independent of `|B|`.
    pub fn rescaled_coeffs(&self, b_negative: bool) -> Vec<BigInt> {
        let s = BigInt::from(if b_negative { -4i64 } else { 4 });
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * s.pow((self.degree - i) as u32))
            .collect()
    }
}

/// Extracts the binary form of `ψ_n` for odd `n` with `3 ∤ n`.
///
/// The coefficients are read off the symbolic `ψ_n` at `B = 1`: the `x^{3i}`
/// coefficient equals `c_i · 4^{d−i}`, every other coefficient vanishes, and
/// both facts are asserted during extraction.
pub fn psi_weighted_form(n: i64) -> Result<WeightedBinaryForm> {
    if n < 1 || n % 2 == 0 || n % 3 == 0 {
        return Err(DivisionPolyError::UnsupportedIndex { n });
    }
    let d = ((n * n - 1) / 6) as usize;
    let poly = SymbolicPsi::new(BigInt::one()).part(n as usize);
    let mut coeffs = vec![BigInt::zero(); d + 1];
    if let Some(deg) = poly.degree() {
        for k in 0..=deg {
            let c = poly.coeff(k);
            if c.is_zero() {
                continue;
            }
            assert!(k % 3 == 0, "ψ_{n} has a non-isobaric term x^{k}");
            let i = k / 3;
            let scale = BigInt::from(4).pow((d - i) as u32);
            let (q, r) = c.div_rem(&scale);
            assert!(r.is_zero(), "coefficient of x^{k} in ψ_{n} not divisible by 4^{}", d - i);
            coeffs[i] = q;
        }
    }
    let form = WeightedBinaryForm {
        n,
        degree: d,
        coeffs,
    };
    // Structural invariants of the family.
    assert_eq!(form.coeffs[d], BigInt::from(n), "leading coefficient must be n");
    assert!(form.coeffs[0].abs().is_one(), "trailing coefficient must be ±1");
    Ok(form)
}

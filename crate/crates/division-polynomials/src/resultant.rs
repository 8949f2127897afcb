//! The resultant law `Res(φ_m, ψ_m²) = ±(432 B²)^{m²(m²−1)/6}`.
//!
//! `432 B² = |Δ|/4` for `y² = x³ + B`, so this pins the exact power of the
//! discriminant shared by the multiple map's numerator and denominator — the
//! reason `x([m]P)` can only lose height at primes dividing `6B`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::DivisionPolyError;
use crate::sympoly::{Poly, SymbolicPsi};
use crate::Result;

/// Fraction-free (Bareiss) determinant of a square integer matrix.
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            // Pivot search below row k.
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                let (q, r) = num_integer::Integer::div_rem(&num, &prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                m[i][j] = q;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Resultant of two integer polynomials via the Sylvester matrix.
fn resultant(p: &Poly, q: &Poly) -> BigInt {
    let (dp, dq) = match (p.degree(), q.degree()) {
        (Some(a), Some(b)) => (a, b),
        _ => return BigInt::zero(),
    };
    let n = dp + dq;
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for row in 0..dq {
        for k in 0..=dp {
            m[row][row + k] = p.coeff(dp - k);
        }
    }
    for row in 0..dp {
        for k in 0..=dq {
            m[dq + row][row + k] = q.coeff(dq - k);
        }
    }
    bareiss_det(m)
}

/// Verifies `|Res(φ_m, ψ_m²)| = (432 B²)^{m²(m²−1)/6}` for `m ∈ {2, 3, 4}`.
pub fn resultant_check(m: i64, b: i64) -> Result<bool> {
    if !(2..=4).contains(&m) {
        return Err(DivisionPolyError::UnsupportedIndex { n: m });
    }
    if b == 0 {
        return Err(DivisionPolyError::HypothesisViolated("B must be nonzero".into()));
    }
    let mut s = SymbolicPsi::new(BigInt::from(b));
    let phi = s.phi(m as usize);
    let psi_sq = s.psi_squared(m as usize);
    let res = resultant(&phi, &psi_sq);
    let exponent = (m * m * (m * m - 1) / 6) as u32;
    let base = BigInt::from(432) * BigInt::from(b) * BigInt::from(b);
    Ok(res.abs() == base.pow(exponent))
}

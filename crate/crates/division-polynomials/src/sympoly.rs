//! Symbolic division polynomials over `Z[x]`, with `y` handled structurally.
//!
//! Every `ψ_n` is either a polynomial in `x` alone (odd `n`) or `y` times
//! one (even `n`), because `y` only ever enters through `y^2 = x^3 + B`.
//! We therefore carry the reduced object: `psi_part(n) = ψ_n` for odd `n`
//! and `ψ_n / y` for even `n`, eliminating all divisions except by the
//! integer 2. This is the engine behind coefficient extraction (weighted
//! forms) and the resultant check; numeric evaluation at a point uses the
//! same recurrences over rationals in `evaluator`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Dense univariate polynomial over `Z`, little-endian coefficients, no
/// trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly(pub Vec<BigInt>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn constant(c: i64) -> Self {
        Poly::from_big(BigInt::from(c))
    }

    pub fn from_big(c: BigInt) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly(vec![c])
        }
    }

    /// `c * x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        Poly(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.0.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    fn trim(mut v: Vec<BigInt>) -> Poly {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        Poly(v)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) + other.coeff(i));
        }
        Poly::trim(v)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) - other.coeff(i));
        }
        Poly::trim(v)
    }

    pub fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Poly::trim(v)
    }

    /// Division by an integer that must divide every coefficient.
    pub fn div_int_exact(&self, k: i64) -> Poly {
        let k = BigInt::from(k);
        Poly(
            self.0
                .iter()
                .map(|c| {
                    let (q, r) = num_integer::Integer::div_rem(c, &k);
                    assert!(r.is_zero(), "inexact integer division in ψ recurrence");
                    q
                })
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::constant(1);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

/// The reduced division-polynomial sequence for `y^2 = x^3 + B` with a fixed
/// integer `B`: `part(n) = ψ_n` (odd `n`) or `ψ_n / y` (even `n`).
pub struct SymbolicPsi {
    b: BigInt,
    /// `f = x^3 + B`, i.e. `y^2`.
    f: Poly,
    parts: Vec<Poly>,
}

impl SymbolicPsi {
    pub fn new(b: BigInt) -> Self {
        let f = Poly(vec![b.clone(), BigInt::zero(), BigInt::zero(), BigInt::one()]);
        // Seeds: ψ0 = 0, ψ1 = 1, ψ2/y = 2, ψ3 = 3x^4 + 12Bx,
        // ψ4/y = 4x^6 + 80Bx^3 - 32B^2.
        let psi3 =
            Poly::monomial(BigInt::from(3), 4).add(&Poly::monomial(BigInt::from(12) * &b, 1));
        let psi4 = Poly::monomial(BigInt::from(4), 6)
            .add(&Poly::monomial(BigInt::from(80) * &b, 3))
            .add(&Poly::from_big(BigInt::from(-32) * &b * &b));
        SymbolicPsi {
            b,
            f,
            parts: vec![Poly::zero(), Poly::constant(1), Poly::constant(2), psi3, psi4],
        }
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    /// Reduced part of `ψ_n` (see struct docs), memoized.
    pub fn part(&mut self, n: usize) -> Poly {
        while self.parts.len() <= n {
            let k = self.parts.len();
            let m = k / 2;
            let next = if k % 2 == 1 {
                // k = 2m+1: ψ_{m+2} ψ_m^3 − ψ_{m−1} ψ_{m+1}^3, where the pair
                // of even indices contributes y^4 = f^2.
                let (a, b, c, d) = (
                    self.part(m + 2),
                    self.part(m),
                    self.part(m - 1),
                    self.part(m + 1),
                );
                let f2 = self.f.mul(&self.f);
                if m.is_multiple_of(2) {
                    f2.mul(&a.mul(&b.pow(3))).sub(&c.mul(&d.pow(3)))
                } else {
                    a.mul(&b.pow(3)).sub(&f2.mul(&c.mul(&d.pow(3))))
                }
            } else {
                // k = 2m: ψ_m (ψ_{m+2} ψ_{m−1}^2 − ψ_{m−2} ψ_{m+1}^2) / 2y.
                let (pm, pp2, pm1, pm2, pp1) = (
                    self.part(m),
                    self.part(m + 2),
                    self.part(m - 1),
                    self.part(m - 2),
                    self.part(m + 1),
                );
                let inner = pp2.mul(&pm1.pow(2)).sub(&pm2.mul(&pp1.pow(2)));
                pm.mul(&inner).div_int_exact(2)
            };
            self.parts.push(next);
        }
        self.parts[n].clone()
    }

    /// Full `ψ_n^2` as a polynomial in `x` (the `y` factor of even indices
    /// squares into `f`).
    pub fn psi_squared(&mut self, n: usize) -> Poly {
        let p = self.part(n);
        let sq = p.mul(&p);
        if n.is_multiple_of(2) {
            sq.mul(&self.f.clone())
        } else {
            sq
        }
    }

    /// `φ_n = x ψ_n^2 − ψ_{n+1} ψ_{n−1}` as a polynomial in `x`.
    pub fn phi(&mut self, n: usize) -> Poly {
        let x = Poly::monomial(BigInt::one(), 1);
        let xpsi2 = x.mul(&self.psi_squared(n));
        let (up, down) = (self.part(n + 1), self.part(n - 1));
        let cross = if n.is_multiple_of(2) {
            up.mul(&down)
        } else {
            // both neighbors are even-index: ψ_{n+1}ψ_{n−1} = f · parts
            self.f.mul(&up.mul(&down))
        };
        xpsi2.sub(&cross)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn psi_named(b: i64, n: usize) -> Poly {
        SymbolicPsi::new(BigInt::from(b)).part(n)
    }

    #[test]
    fn quintic_matches_closed_form() {
        // ψ5 = 5x^12 + 380Bx^9 − 240B^2x^6 − 1600B^3x^3 − 256B^4 at B = 2.
        let p = psi_named(2, 5);
        let expect = Poly::monomial(BigInt::from(5), 12)
            .add(&Poly::monomial(BigInt::from(760), 9))
            .add(&Poly::monomial(BigInt::from(-960), 6))
            .add(&Poly::monomial(BigInt::from(-12800), 3))
            .add(&Poly::from_big(BigInt::from(-4096)));
        assert_eq!(p, expect);
    }

    #[test]
    fn degrees_follow_the_index_law() {
        let mut s = SymbolicPsi::new(BigInt::from(7));
        for n in 1..=16usize {
            // deg ψ_n^2 = n^2 − 1 in x.
            assert_eq!(s.psi_squared(n).degree(), Some(n * n - 1), "n = {n}");
            // deg φ_n = n^2, with leading coefficient 1.
            let phi = s.phi(n);
            assert_eq!(phi.degree(), Some(n * n), "n = {n}");
            assert_eq!(phi.coeff(n * n), BigInt::one(), "n = {n}");
        }
    }

    #[test]
    fn leading_coefficient_of_psi_is_n() {
        let mut s = SymbolicPsi::new(BigInt::from(-13));
        for n in (5..=13usize).step_by(2) {
            let p = s.part(n);
            assert_eq!(p.coeff(p.degree().unwrap()), BigInt::from(n as i64));
        }
    }
}

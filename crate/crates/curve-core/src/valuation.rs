//! `p`-adic valuations of integers and rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::CurveError;
use crate::factor::is_prime_u64;
use crate::Result;

/// `ord_p` of a rational: finite for nonzero inputs, `+∞` at zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

/// `ord_p(n)` for a nonzero integer.
pub fn bigint_valuation(n: &BigInt, p: u64) -> u64 {
    assert!(!n.is_zero(), "valuation of zero is infinite");
    let p = BigInt::from(p);
    let mut v = 0u64;
    let mut m = n.clone();
    loop {
        let (q, r) = num_integer::Integer::div_rem(&m, &p);
        if !r.is_zero() {
            return v;
        }
        v += 1;
        m = q;
    }
}

/// `ord_p(q)` of a rational, extended by `ord_p(0) = +∞`.
pub fn valuation(q: &BigRational, p: u64) -> Result<Valuation> {
    if !is_prime_u64(p) {
        return Err(CurveError::NotPrime(p));
    }
    if q.is_zero() {
        return Ok(Valuation::Infinite);
    }
    let num = bigint_valuation(q.numer(), p) as i64;
    let den = bigint_valuation(q.denom(), p) as i64;
    Ok(Valuation::Finite(num - den))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn valuations_of_rationals() {
        assert_eq!(valuation(&rat(12, 1), 2).unwrap(), Valuation::Finite(2));
        assert_eq!(valuation(&rat(12, 1), 3).unwrap(), Valuation::Finite(1));
        assert_eq!(valuation(&rat(5, 8), 2).unwrap(), Valuation::Finite(-3));
        assert_eq!(valuation(&rat(7, 9), 5).unwrap(), Valuation::Finite(0));
        assert_eq!(valuation(&rat(0, 1), 7).unwrap(), Valuation::Infinite);
    }

    #[test]
    fn composite_modulus_is_rejected() {
        assert_eq!(
            valuation(&rat(1, 1), 6).unwrap_err(),
            CurveError::NotPrime(6)
        );
        assert_eq!(
            valuation(&rat(1, 1), 1).unwrap_err(),
            CurveError::NotPrime(1)
        );
    }

    #[test]
    fn negative_integers_carry_valuations_too() {
        assert_eq!(bigint_valuation(&BigInt::from(-176319369216i64), 2), 12);
        assert_eq!(bigint_valuation(&BigInt::from(-176319369216i64), 3), 16);
    }
}

//! Integer and big-rational numeric helpers.
//!
//! The height machinery needs logarithms of integers and rationals far too
//! large for `f64` conversion (thousands of digits), so the log helpers here
//! scale by bit length instead of converting directly.

use num_bigint::{BigInt, Sign};

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Floor square root of a non-negative big integer.
pub fn sqrt_floor(n: &BigInt) -> BigInt {
    debug_assert!(!n.is_negative());
    n.sqrt()
}

/// Exact square root: `Some(r)` with `r >= 0` iff `n = r^2`.
pub fn perfect_square(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Exact cube root: `Some(r)` iff `n = r^3` (works for negative `n`).
pub fn perfect_cube(n: &BigInt) -> Option<BigInt> {
    let r = cbrt_trunc(n);
    if &r * &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Cube root truncated toward zero, defined for all signs.
pub fn cbrt_trunc(n: &BigInt) -> BigInt {
    if n.is_negative() {
        -(-n).cbrt()
    } else {
        n.cbrt()
    }
}

/// Smallest integer `x` with `x^3 + b >= 0`, i.e. `ceil(cbrt(-b))`.
pub fn cube_start(b: &BigInt) -> BigInt {
    let m = -b; // we need ceil(cbrt(m))
    let t = cbrt_trunc(&m);
    if m.is_positive() && &t * &t * &t != m {
        t + 1
    } else {
        // For m <= 0 truncation toward zero is already the ceiling.
        t
    }
}

/// Exact square root of a `u128`, if one exists.
pub fn perfect_square_u128(n: u128) -> Option<u128> {
    let r = n.isqrt();
    if r * r == n {
        Some(r)
    } else {
        None
    }
}

/// Natural log of `|n|` for nonzero `n`, stable for integers of any size.
pub fn ln_big(n: &BigInt) -> f64 {
    assert!(!n.is_zero(), "ln of zero");
    let bits = n.bits();
    if bits <= 63 {
        return (n.abs().to_f64().unwrap()).ln();
    }
    let shift = bits - 63;
    let head = (n.abs() >> shift).to_f64().unwrap();
    head.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Natural log of `|q|` for a nonzero rational of any size.
pub fn ln_ratio(q: &BigRational) -> f64 {
    ln_big(q.numer()) - ln_big(q.denom())
}

/// Lossy `f64` value of a rational whose numerator/denominator may each be
/// thousands of bits long (plain `to_f64` overflows to `inf/inf`).
pub fn ratio_to_f64(q: &BigRational) -> f64 {
    if q.is_zero() {
        return 0.0;
    }
    let sign = if q.numer().sign() == Sign::Minus {
        -1.0
    } else {
        1.0
    };
    let (n, d) = (q.numer().abs(), q.denom().clone());
    let (nb, db) = (n.bits(), d.bits());
    let ns = nb.saturating_sub(63);
    let ds = db.saturating_sub(63);
    let nh = (n >> ns).to_f64().unwrap();
    let dh = (d >> ds).to_f64().unwrap();
    let exp = ns as i64 - ds as i64;
    if exp > 2000 {
        return sign * f64::INFINITY;
    }
    if exp < -2000 {
        return 0.0;
    }
    sign * (nh / dh) * (exp as f64 * std::f64::consts::LN_2).exp()
}

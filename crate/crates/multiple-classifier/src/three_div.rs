//! Tripling patterns: the seven coordinate shapes with an integral `[3]P`.
//!
//! An integral point `P = (x, y)` of infinite order on `y^2 = x^3 + B` has
//! integral `[3]P` exactly when `(x, y, B)` factors through one of seven
//! patterns built from pairwise-coprime integers `M, N, K` (with `M`, `N`
//! odd, `3` dividing neither `N` nor `K`, and `K` odd outside pattern II):
//!
//! ```text
//!        x      B              y        square          congruence
//! I    2MN    M^3 N^2 K      MNs    s^2 = M(8N+K)     2N +  K = +-3
//! II    MN    M^3 N^2 K      MNs    s^2 = M(N+K)       N + 4K = +-3
//! III  4MN    4 M^3 N^2 K   2MNs    s^2 = M(16N+K)    4N +  K = +-3
//! IV   2MN    4 M^3 N^2 K   2MNs    s^2 = M(2N+K)      N + 2K = +-3
//! V    2MN    8 M^3 N^2 K   2MNs    s^2 = 2M(N+K)      N + 4K = +-3
//! VI   4MN   16 M^3 N^2 K   4MNs    s^2 = M(4N+K)      N +  K = +-6
//! VII  8MN   16 M^3 N^2 K   4MNs    s^2 = M(32N+K)    8N +  K = +-3
//! ```
//!
//! The seven patterns occupy distinct `(ord_2 x, ord_2 B)` signatures, so a
//! candidate pattern is determined by two-adic data alone and only the
//! divisor split `x/c = M * N` remains to be searched.  Negating all of
//! `(M, N, K)` at once preserves every condition, so `M > 0` is adopted as
//! the canonical representative when classifying.

use curve_core::numeric::perfect_square;
use curve_core::{multiply, CurvePoint, MordellCurve};
use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::ClassifierError;
use crate::{integral_affine, Result};

/// The seven tripling patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TypeTag {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
}

/// A tripling pattern together with its witness parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThreeDivisibilityType {
    pub tag: TypeTag,
    pub m: i64,
    pub n: i64,
    pub k: i64,
}

/// Static description of one pattern row: coordinate scales, the congruence
/// `|cn*N + ck*K| = rhs`, and the square form `s^2 = mult * M * (sn*N + sk*K)`.
struct Row {
    tag: TypeTag,
    c_x: i128,
    c_b: i128,
    c_y: i128,
    cong: (i128, i128, i128),
    sq: (i128, i128, i128),
    k_may_be_even: bool,
}

const ROWS: [Row; 7] = [
    Row { tag: TypeTag::I,   c_x: 2, c_b: 1,  c_y: 1, cong: (2, 1, 3), sq: (1, 8, 1),  k_may_be_even: false },
    Row { tag: TypeTag::II,  c_x: 1, c_b: 1,  c_y: 1, cong: (1, 4, 3), sq: (1, 1, 1),  k_may_be_even: true },
    Row { tag: TypeTag::III, c_x: 4, c_b: 4,  c_y: 2, cong: (4, 1, 3), sq: (1, 16, 1), k_may_be_even: false },
    Row { tag: TypeTag::IV,  c_x: 2, c_b: 4,  c_y: 2, cong: (1, 2, 3), sq: (1, 2, 1),  k_may_be_even: false },
    Row { tag: TypeTag::V,   c_x: 2, c_b: 8,  c_y: 2, cong: (1, 4, 3), sq: (2, 1, 1),  k_may_be_even: false },
    Row { tag: TypeTag::VI,  c_x: 4, c_b: 16, c_y: 4, cong: (1, 1, 6), sq: (1, 4, 1),  k_may_be_even: false },
    Row { tag: TypeTag::VII, c_x: 8, c_b: 16, c_y: 4, cong: (8, 1, 3), sq: (1, 32, 1), k_may_be_even: false },
];

fn row_of(tag: TypeTag) -> &'static Row {
    ROWS.iter().find(|r| r.tag == tag).unwrap()
}

/// The pattern reachable from the two-adic signature of `(x, B)`, if any.
fn dispatch(ord2_x: u32, ord2_b: u32) -> Option<&'static Row> {
    let tag = match (ord2_x, ord2_b) {
        (0, _) => TypeTag::II,
        (1, 0) => TypeTag::I,
        (1, 2) => TypeTag::IV,
        (1, 3) => TypeTag::V,
        (2, 2) => TypeTag::III,
        (2, 4) => TypeTag::VI,
        (3, 4) => TypeTag::VII,
        _ => return None,
    };
    Some(row_of(tag))
}

fn odd_divisors(q: i128) -> Vec<i128> {
    let q = q.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= q {
        if q % d == 0 {
            small.push(d);
            if d * d != q {
                large.push(q / d);
            }
        }
        d += 2; // q is odd, so every divisor is
    }
    large.reverse();
    small.extend(large);
    small
}

fn check_side_conditions(row: &Row, m: i128, n: i128, k: i128) -> bool {
    m % 2 != 0
        && n % 2 != 0
        && (row.k_may_be_even || k % 2 != 0)
        && n % 3 != 0
        && k % 3 != 0
        && num_integer::gcd(m, n) == 1
        && num_integer::gcd(m, k) == 1
        && num_integer::gcd(n, k) == 1
        && {
            let (cn, ck, rhs) = row.cong;
            (cn * n + ck * k).abs() == rhs
        }
}

/// Matches an integral infinite-order point against the seven tripling
/// patterns; `None` means no pattern fits (equivalently, `[3]P` is not
/// integral).  The returned witness is canonical with `M > 0`.
pub fn three_div_classify(
    curve: &MordellCurve,
    p: &CurvePoint,
) -> Result<Option<ThreeDivisibilityType>> {
    if !curve.quasi_minimal() {
        return Err(ClassifierError::HypothesisViolated(
            "curve coefficient must be sixth-power-free".into(),
        ));
    }
    let (a, b) = integral_affine(curve, p)?;
    let (x, y) = match (a.to_i64(), b.to_i64()) {
        (Some(x), Some(y)) => (x as i128, y as i128),
        _ => {
            return Err(ClassifierError::HypothesisViolated(
                "coordinates exceed the supported 64-bit range".into(),
            ))
        }
    };
    let b_coef = curve.b() as i128;

    let row = match dispatch(x.trailing_zeros(), b_coef.trailing_zeros()) {
        Some(row) => row,
        None => return Ok(None),
    };
    let q = x / row.c_x; // exact: the dispatch fixed ord_2 x, and q is odd
    let b_part = b_coef / row.c_b; // exact for the same reason

    // M^3 must divide the coefficient, which caps |M| far below the divisor
    // range of q and keeps every product below wrapping territory.
    let m_bound = (b_part.unsigned_abs() as f64).cbrt() as i128 + 2;
    for m in odd_divisors(q) {
        if m > m_bound {
            break;
        }
        let m3 = m * m * m;
        if b_part % m3 != 0 {
            continue;
        }
        let n = q / m;
        let rest = b_part / m3;
        if rest % (n * n) != 0 {
            continue;
        }
        let k = rest / (n * n);
        if !check_side_conditions(row, m, n, k) {
            continue;
        }
        let y_den = row.c_y * m * n;
        if y % y_den != 0 {
            continue;
        }
        let s = y / y_den;
        let (mult, sn, sk) = row.sq;
        if s * s != mult * m * (sn * n + sk * k) {
            continue;
        }
        return Ok(Some(ThreeDivisibilityType {
            tag: row.tag,
            m: m as i64,
            n: n as i64,
            k: k as i64,
        }));
    }
    Ok(None)
}

/// Rebuilds the curve and point described by a tripling witness, verifying
/// every side condition, and cross-checks that `[3]P` is indeed integral.
///
/// The emitted point takes the positive square root, so it may be the
/// `y`-negation of the point a witness was extracted from.
pub fn three_div_construct(
    witness: &ThreeDivisibilityType,
) -> Result<(MordellCurve, CurvePoint)> {
    let row = row_of(witness.tag);
    let (m, n, k) = (witness.m as i128, witness.n as i128, witness.k as i128);
    if m == 0 || n == 0 || k == 0 {
        return Err(ClassifierError::InvariantViolation(
            "M, N, K must be nonzero".into(),
        ));
    }
    if !check_side_conditions(row, m, n, k) {
        return Err(ClassifierError::InvariantViolation(
            "parity, coprimality or congruence conditions fail".into(),
        ));
    }

    // Bounding the coefficient first caps |M|, |N|, |K| and keeps the
    // remaining products comfortably inside 128 bits.
    let b = m
        .checked_mul(m)
        .and_then(|v| v.checked_mul(m))
        .and_then(|v| v.checked_mul(row.c_b))
        .and_then(|v| n.checked_mul(n).and_then(|n2| v.checked_mul(n2)))
        .and_then(|v| v.checked_mul(k))
        .and_then(|v| i64::try_from(v).ok())
        .ok_or_else(|| {
            ClassifierError::InvariantViolation(
                "coefficient overflows the supported range".into(),
            )
        })?;

    let (mult, sn, sk) = row.sq;
    let square = mult * m * (sn * n + sk * k);
    if square < 0 {
        return Err(ClassifierError::InvariantViolation(
            "the square form is negative".into(),
        ));
    }
    let s = match perfect_square(&BigInt::from(square)) {
        Some(s) => s.to_i128().unwrap(),
        None => {
            return Err(ClassifierError::InvariantViolation(
                "the square form is not a perfect square".into(),
            ))
        }
    };
    if s == 0 {
        return Err(ClassifierError::InvariantViolation(
            "the square form vanishes, so y = 0".into(),
        ));
    }
    let curve = curve_core::make_curve(b)?;
    if !curve.quasi_minimal() {
        return Err(ClassifierError::InvariantViolation(
            "the coefficient must be sixth-power-free".into(),
        ));
    }

    let point = CurvePoint::affine_big(
        BigInt::from(row.c_x * m * n),
        BigInt::from(row.c_y * m * n * s),
    );
    if curve.is_torsion_point(&point) {
        return Err(ClassifierError::TorsionInput);
    }
    // Dual route: the pattern promises an integral triple.
    if !multiply(&curve, &point, 3)?.is_integral() {
        return Err(ClassifierError::InvariantViolation(
            "[3]P is not integral despite the pattern conditions".into(),
        ));
    }
    Ok((curve, point))
}

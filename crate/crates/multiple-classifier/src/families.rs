//! One-parameter families with integral `[2]P` and `[3]P` simultaneously.
//!
//! Six polynomial families realize the doubling and tripling shapes at once:
//! each assigns to an integer parameter a curve coefficient, a point, and the
//! abscissa of its triple, all in closed form.  They show that infinitely
//! many curves carry a point with two distinct integral multiples, so only
//! the *third* nontrivial multiple is genuinely scarce.  Parameters are
//! restricted to a congruence class per family (any integer for families 2
//! and 6, which are already reparametrized onto that class).

use curve_core::{multiply, CurvePoint, MordellCurve};
use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::ClassifierError;
use crate::Result;

/// A family member: the curve, the point `P`, and the closed-form `x([3]P)`.
#[derive(Debug, Clone)]
pub struct FamilyInstance {
    pub family: u8,
    pub parameter: i64,
    pub curve: MordellCurve,
    pub point: CurvePoint,
    pub x_triple: BigInt,
}

/// Coefficients larger than this never fit a 64-bit curve, so parameters are
/// cut off long before the exact evaluation could wrap.
const PARAM_LIMIT: i64 = 10_000;

/// Evaluates family `family` at `parameter`.
///
/// The point, its double and its triple are all integral, and `x([3]P)`
/// matches the returned closed form — both facts are re-derived through the
/// group law before the instance is handed out.  Members whose coefficient
/// is not sixth-power-free are still emitted; they are merely flagged
/// through [`MordellCurve::quasi_minimal`].
pub fn family_generate(family: u8, parameter: i64) -> Result<FamilyInstance> {
    if parameter.abs() > PARAM_LIMIT {
        return Err(ClassifierError::InadmissibleParameter(format!(
            "|parameter| must be at most {PARAM_LIMIT}"
        )));
    }
    let p = parameter as i128;
    let admissible = match family {
        1 => parameter.rem_euclid(3) == 2,
        2 | 6 => true,
        3 | 5 => parameter.rem_euclid(6) == 1,
        4 => parameter % 2 != 0,
        _ => {
            return Err(ClassifierError::InadmissibleParameter(format!(
                "no family numbered {family}"
            )))
        }
    };
    if !admissible {
        return Err(ClassifierError::InadmissibleParameter(format!(
            "parameter {parameter} lies outside the congruence class of family {family}"
        )));
    }

    let (x, y, b, x3) = match family {
        1 => (
            6 * (2 * p + 1) * p,
            9 * (2 * p + 1) * (2 * p + 1) * p,
            27 * (2 * p + 1).pow(3) * p * p * (3 - 2 * p),
            16 * p.pow(4) - 16 * p.pow(3) - 12 * p * p + 2 * p + 1,
        ),
        2 => (
            12 * p * p + 10 * p + 2,
            36 * p.pow(3) + 48 * p * p + 21 * p + 3,
            -432 * p.pow(6) - 864 * p.pow(5) - 648 * p.pow(4) - 208 * p.pow(3)
                - 15 * p * p
                + 6 * p
                + 1,
            144 * p.pow(4) + 144 * p.pow(3) + 36 * p * p - 2 * p - 1,
        ),
        3 => (
            (6 - 3 * p) * (6 - 4 * p),
            (6 - 3 * p) * (6 - 3 * p) * (6 - 4 * p),
            p * (6 - 3 * p).pow(3) * (6 - 4 * p) * (6 - 4 * p),
            16 * p.pow(4) - 80 * p.pow(3) + 132 * p * p - 74 * p + 4,
        ),
        4 => (
            (12 * p - 2) * p,
            3 * p * p * (12 * p - 2),
            p.pow(3) * (12 * p - 2) * (12 * p - 2) * (2 - 3 * p),
            144 * p.pow(4) - 144 * p.pow(3) + 36 * p * p - 2 * p,
        ),
        5 => (
            (24 - 3 * p) * (24 - 4 * p),
            (24 - 3 * p) * (24 - 3 * p) * (24 - 4 * p),
            p * (24 - 3 * p).pow(3) * (24 - 4 * p) * (24 - 4 * p),
            p.pow(4) - 20 * p.pow(3) + 132 * p * p - 296 * p + 64,
        ),
        6 => (
            48 * p * p - 32 * p + 4,
            -288 * p.pow(3) + 336 * p * p - 120 * p + 12,
            -27648 * p.pow(6) + 27648 * p.pow(5) + 6912 * p.pow(4) - 17920 * p.pow(3)
                + 7872 * p * p
                - 1344 * p
                + 80,
            144 * p.pow(4) - 72 * p * p + 16 * p + 1,
        ),
        _ => unreachable!(),
    };

    let b = i64::try_from(b).map_err(|_| {
        ClassifierError::InadmissibleParameter(format!(
            "parameter {parameter} pushes the coefficient outside the supported range"
        ))
    })?;
    let curve = curve_core::make_curve(b)?;
    let point = CurvePoint::affine_big(BigInt::from(x), BigInt::from(y));
    let x_triple = BigInt::from(x3);

    // Dual route: the closed forms promise integral double and triple.
    let double = multiply(&curve, &point, 2)?;
    let triple = multiply(&curve, &point, 3)?;
    if !double.is_integral() || !triple.is_integral() {
        return Err(ClassifierError::InvariantViolation(
            "a family member lost integrality of [2]P or [3]P".into(),
        ));
    }
    if triple.x() != Some(&BigRational::from_integer(x_triple.clone())) {
        return Err(ClassifierError::InvariantViolation(
            "x([3]P) deviates from its closed form".into(),
        ));
    }

    Ok(FamilyInstance {
        family,
        parameter,
        curve,
        point,
        x_triple,
    })
}

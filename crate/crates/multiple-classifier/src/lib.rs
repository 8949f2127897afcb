//! Which multiples of an integral point stay integral.
//!
//! On a Mordell curve `y^2 = x^3 + B` an integral point `P` of infinite
//! order usually has no integral multiple beyond itself — denominators enter
//! at `[2]P` and never leave.  The exceptions are completely structured, and
//! this crate packages that structure:
//!
//! - [`integral_multiples`] walks `[n]P` exactly and reports integrality and
//!   denominator growth multiple by multiple;
//! - [`two_div_decompose`] / [`two_div_construct`] convert between a point
//!   with integral `[2]P` and its doubling parameters `(M, N, t, K)`, while
//!   [`four_div_check`] and [`tabef_value`] settle `[4]P` by congruences
//!   alone;
//! - [`three_div_classify`] / [`three_div_construct`] do the same for
//!   `[3]P` through seven coordinate patterns keyed by two-adic data;
//! - [`family_generate`] produces the six closed-form families showing that
//!   integral `[2]P` and `[3]P` together occur infinitely often;
//! - [`exceptional_registry`] lists the four curves where a third nontrivial
//!   multiple appears, and [`theorem1_admissible`] bounds which indices
//!   could ever extend that list.
//!
//! Every classifier is paired with the group law as an independent second
//! route: parameter shapes are re-verified by exact multiplication in the
//! constructors and in sweep tests.

pub mod error;
pub mod families;
pub mod registry;
pub mod report;
pub mod three_div;
pub mod two_div;

pub use error::ClassifierError;
pub use families::{family_generate, FamilyInstance};
pub use registry::{exceptional_registry, theorem1_admissible, RegistryEntry};
pub use report::{integral_multiples, MultipleEntry, MultipleReport};
pub use three_div::{three_div_classify, three_div_construct, ThreeDivisibilityType, TypeTag};
pub use two_div::{
    four_div_check, tabef_value, two_div_construct, two_div_decompose, TwoDivisibilityParams,
};

pub type Result<T> = std::result::Result<T, ClassifierError>;

use curve_core::{CurvePoint, MordellCurve};
use num_bigint::BigInt;

/// Shared gate: the point must be an integral point of infinite order on
/// the curve.  Returns the integer coordinates.
pub(crate) fn integral_affine(
    curve: &MordellCurve,
    p: &CurvePoint,
) -> Result<(BigInt, BigInt)> {
    let (x, y) = match p {
        CurvePoint::Identity => return Err(ClassifierError::TorsionInput),
        CurvePoint::Affine { x, y } => (x, y),
    };
    if !curve.contains(p) || !p.is_integral() {
        return Err(ClassifierError::NotIntegralPoint);
    }
    if curve.is_torsion_point(p) {
        return Err(ClassifierError::TorsionInput);
    }
    Ok((x.to_integer(), y.to_integer()))
}

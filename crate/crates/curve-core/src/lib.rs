//! Exact arithmetic on Mordell curves `y^2 = x^3 + B`.
//!
//! Everything downstream (division polynomials, heights, multiple
//! classification, the Diophantine searches) leans on this crate for
//! a handful of primitives, all of which are exact:
//!
//! - curve construction with sixth-power-free ("quasi-minimal") detection
//!   and full torsion classification — for Mordell curves the torsion
//!   subgroup is completely determined by the shape of `B`;
//! - the chord–tangent group law over arbitrary-precision rationals;
//! - `p`-adic valuations of rationals;
//! - the denominator profile `x = A/D^2`, `y = Y/D^3` of a rational point.
//!
//! Key facts used throughout:
//!
//! - `B` sixth-power-free makes the model quasi-minimal; it is globally
//!   minimal unless `B ≡ 16 (mod 64)`.
//! - the torsion subgroup is `Z/6` iff `B = 1`, `Z/3` iff `B = -432` or `B`
//!   is a square `≠ 1`, `Z/2` iff `B` is a cube `≠ 1`, and trivial otherwise.
//! - the real locus is connected (a single real root of `x^3 + B`), so no
//!   real-component bookkeeping is ever needed.

pub mod arith;
pub mod curve;
pub mod error;
pub mod factor;
pub mod numeric;
pub mod point;
pub mod valuation;

pub use arith::{add, multiply, negate};
pub use curve::{make_curve, sixth_power_free_reduce, MordellCurve, TorsionKind};
pub use error::CurveError;
pub use point::{denominator_profile, CurvePoint};
pub use valuation::{valuation, Valuation};

/// Convenient alias used by every fallible operation in the crate.
pub type Result<T> = std::result::Result<T, CurveError>;

//! The analytic side of `y² = x³ + B`: real periods, elliptic logarithms,
//! and the explicit linear-form-in-logarithms estimates that turn height
//! inequalities into absolute bounds on multiple indices.
//!
//! The real locus of a Mordell curve is connected (the discriminant
//! `−432B²` is negative), so the period lattice has a single real period
//! `ω` and the elliptic logarithm
//!
//! ```text
//! u(x) = ½ ∫_x^∞ dt / √(t³ + B),      z(P) = u  (y ≤ 0),   ω − u  (y > 0)
//! ```
//!
//! is a group homomorphism `E(ℝ) → ℝ/ωℤ` with values in `[0, ω)`.  Both
//! the period and `u` are computed through the symmetric Carlson integral
//! `R_F` by duplication, which converges at a fixed linear rate for the
//! conjugate-pair arguments a Mordell cubic produces.
//!
//! On top of the logarithm sit the desk-scale certificates: the `x`-range
//! of `n`-torsion (`|x| < (n²/7)|B|^{1/3}`), the closed-form upper bounds
//! on `log|nz_P + mω|` coming from height lower bounds, the absolute
//! lower bounds of David type, and the resulting caps on the index of an
//! integral multiple.

pub mod carlson;
pub mod ellog;
pub mod error;
pub mod linear_forms;
pub mod period;
pub mod torsion_bound;

pub use carlson::carlson_rf;
pub use ellog::{elliptic_log, multiple_log_reduction, tza_bound_holds, EllipticLog};
pub use error::AnalyticError;
pub use linear_forms::{
    david_lower, david_params, gap_lower_bound_on_log_n2, linear_form_upper, n_upper_bound,
    LinearFormParams,
};
pub use period::{real_period, PeriodData};
pub use torsion_bound::torsion_x_bound_check;

pub type Result<T> = std::result::Result<T, AnalyticError>;

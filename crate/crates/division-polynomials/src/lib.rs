//! Division polynomials of `y^2 = x^3 + B` and the structural laws they obey.
//!
//! For Mordell curves the first few division polynomials are
//!
//! ```text
//! ψ1 = 1,  ψ2 = 2y,  ψ3 = 3x^4 + 12Bx,  ψ4 = 4y(x^6 + 20Bx^3 - 8B^2),
//! ```
//!
//! with the universal recurrences
//!
//! ```text
//! ψ_{2m+1} = ψ_{m+2} ψ_m^3 − ψ_{m−1} ψ_{m+1}^3
//! 2y ψ_{2m} = ψ_m (ψ_{m+2} ψ_{m−1}^2 − ψ_{m−2} ψ_{m+1}^2)
//! φ_n  = x ψ_n^2 − ψ_{n+1} ψ_{n−1}
//! 4y ω_n = ψ_{n+2} ψ_{n−1}^2 − ψ_{n−2} ψ_{n+1}^2
//! ```
//!
//! so that `[n]P = (φ_n/ψ_n^2, ω_n/ψ_n^3)`. This crate provides:
//!
//! - a memoized exact evaluator of `(ψ_n, φ_n, ω_n)` at a rational point,
//!   and the multiple map as an independent route to `[n]P` (cross-checked
//!   against the group law, never replaced by it);
//! - the weighted binary-form view: for odd `n` with `3 ∤ n`, `ψ_n` is a
//!   binary form of degree `(n²−1)/6` in `(x³, 4B)` with leading
//!   coefficient `n` and trailing coefficient `±1`;
//! - the resultant law `Res(φ_m, ψ_m²) = ±(432 B²)^{m²(m²−1)/6}`;
//! - the valuation law for `ord_p(ψ_n(P))` at primes `p | 6B`;
//! - the size bound `|ψ_n(P)| < (3^{3/2}·2²·|B|)^{(n²−1)/6}` for integral
//!   multiples, and the torsion product identity
//!   `ψ_n(P)² = n² · Π_{Q ∈ E[n]\{O}} |x(P) − x(Q)|`.

pub mod error;
pub mod evaluator;
pub mod resultant;
pub mod roots;
pub mod size_bound;
pub mod sympoly;
pub mod valuation;
pub mod weighted;

pub use error::DivisionPolyError;
pub use evaluator::{
    eval_division_polys, multiple_via_division_polys, DivisionPolyEvaluator, DivisionPolyValue,
};
pub use resultant::resultant_check;
pub use roots::{complex_roots, torsion_product_residual};
pub use size_bound::psi_size_bound_check;
pub use valuation::{predicted_psi_valuation, Prediction};
pub use weighted::{psi_weighted_form, WeightedBinaryForm};

pub type Result<T> = std::result::Result<T, DivisionPolyError>;

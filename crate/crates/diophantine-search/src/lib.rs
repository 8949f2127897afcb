//! Bounded Diophantine searches behind the integral-multiple tables.
//!
//! Whether `[n]P` can stay integral for `n ∈ {4, 5, 7}` comes down, after
//! the divisibility classifiers have done their work, to integer solutions
//! of a handful of explicit equations.  This crate solves those equations
//! inside stated boxes, exactly:
//!
//! - [`thue_solve_bounded`] lists all (primitive) solutions of a Thue
//!   problem `F(x, y) ∈ rhs_set` in a box, confirming every candidate in
//!   exact arithmetic;
//! - [`psi5_problems`], [`psi7_system_solve`], and [`four_torsion_thue`]
//!   instantiate the twelve quintic equations, the sextic/quadratic
//!   simultaneous system, and the translated four-torsion octic;
//! - [`multiple_witness`] lifts a Thue solution class back to an actual
//!   curve and point, separating solutions that witness an integral
//!   multiple from those that only encode torsion;
//! - [`quadratic_form_solve`] sweeps definite quadratic forms with a
//!   certified completeness flag;
//! - [`pell_sweep_four_div`] turns the `[4]P` Pell-type condition into the
//!   full table of small-`|B|` curves with an integral fourth multiple,
//!   re-verifying every row by exact multiplication.

pub mod error;
pub mod pell;
pub mod problems;
pub mod quadratic;
pub mod thue;

pub use error::SearchError;
pub use pell::{pell_sweep_four_div, B_MAX_LIMIT};
pub use problems::{
    four_torsion_thue, multiple_witness, psi5_point_witness, psi5_problems, psi7_companion,
    psi7_system_solve, FOUR_TORSION_OCTIC, PSI5_REFERENCE_BOUND, PSI7_EXPONENT_PAIRS, PSI7_SEXTIC,
};
pub use quadratic::{quadratic_form_solve, QuadraticSolutions};
pub use thue::{eval_form, thue_solve_bounded, Solution, ThueProblem, BOUND_LIMIT};

pub type Result<T> = std::result::Result<T, SearchError>;

//! Definite binary quadratic forms: bounded representation sweeps with a
//! certified completeness flag.
//!
//! For a definite form `q(x, y) = ax² + bxy + cy²` the smallest eigenvalue
//! of the Gram matrix,
//!
//! ```text
//!     μ = (a + c − √((a − c)² + b²)) / 2,
//! ```
//!
//! bounds the form from below: `q(x, y) ≥ μ(x² + y²)`.  Every representation
//! of `m > 0` therefore satisfies `|x|, |y| ≤ √(m/μ)`, and a sweep over a box
//! at least that large is provably complete — the `complete` flag certifies
//! exactly this inequality, nothing more.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::SearchError;
use crate::thue::Solution;
use crate::Result;

/// Representations found in the box, plus whether the box was large enough
/// to be exhaustive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticSolutions {
    /// Lexicographically ordered by `(x, y)`.
    pub solutions: Vec<Solution>,
    /// True when every representation of `rhs` provably lies in the box.
    pub complete: bool,
}

/// All integer representations `ax² + bxy + cy² = rhs` with `|x|, |y| ≤ bound`.
///
/// The form must be definite (`b² − 4ac < 0`); negative definite input is
/// normalised by negating everything.  Each `x` column reduces to a quadratic
/// in `y`, solved by an exact discriminant square test.
pub fn quadratic_form_solve(
    a: i64,
    b: i64,
    c: i64,
    rhs: i64,
    bound: i64,
) -> Result<QuadraticSolutions> {
    let disc = (b as i128) * (b as i128) - 4 * (a as i128) * (c as i128);
    if disc >= 0 {
        return Err(SearchError::IndefiniteForm { disc });
    }
    if a < 0 {
        // Negative definite: −q is positive definite with the same solutions.
        return quadratic_form_solve(-a, -b, -c, -rhs, bound);
    }

    let mut out: BTreeSet<Solution> = BTreeSet::new();
    if rhs >= 0 {
        let four_c_rhs = BigInt::from(4 * (c as i128) * (rhs as i128));
        let two_c = BigInt::from(2 * (c as i128));
        for x in -bound..=bound {
            // c y² + b x y + (a x² − rhs) = 0
            let dy = BigInt::from(disc) * (x as i128).pow(2) + &four_c_rhs;
            if dy.is_negative() {
                continue;
            }
            let root = dy.sqrt();
            if &root * &root != dy {
                continue;
            }
            for s in [root.clone(), -root.clone()] {
                let num = BigInt::from(-(b as i128) * (x as i128)) + s;
                let (y, rem) = num.div_rem(&two_c);
                if !rem.is_zero() || y.abs() > BigInt::from(bound) {
                    continue;
                }
                out.insert(Solution {
                    x,
                    y: y.to_i64().expect("bounded"),
                    rhs: BigInt::from(rhs),
                });
            }
        }
    }

    let (af, bf, cf) = (a as f64, b as f64, c as f64);
    let mu = (af + cf - ((af - cf) * (af - cf) + bf * bf).sqrt()) / 2.0;
    let complete = rhs < 0 || (bound as f64) >= (rhs as f64 / mu).sqrt() + 1.0;
    Ok(QuadraticSolutions {
        solutions: out.into_iter().collect(),
        complete,
    })
}

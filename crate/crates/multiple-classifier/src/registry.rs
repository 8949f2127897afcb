//! The exceptional curves and the index test behind them.
//!
//! Across all sixth-power-free coefficients, only four curves are known to
//! carry a point with three distinct nontrivial integral multiples, and in
//! each case the multiple set stops there.  Complementing the registry, an
//! index `n` can head a *new* exceptional multiple only when `n <= 5` or
//! every prime factor of `n` is at least 11 — the classifiers rule out
//! composite interference from the small primes.

use crate::report::integral_multiples;
use crate::Result;
use curve_core::{make_curve, CurvePoint, MordellCurve};

/// One exceptional curve: coefficient, generator (up to the sign of `y`),
/// and the indices `n > 1` with `[n]P` integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegistryEntry {
    pub b: i64,
    pub x: i64,
    pub y: i64,
    pub multiples: &'static [i64],
}

impl RegistryEntry {
    pub fn curve(&self) -> MordellCurve {
        make_curve(self.b).expect("registry coefficients are nonzero")
    }

    pub fn generator(&self) -> CurvePoint {
        CurvePoint::affine_int(self.x, self.y)
    }

    /// Recomputes the integral multiple set up to `n_max` from scratch.
    pub fn verify(&self, n_max: i64) -> Result<Vec<i64>> {
        let report = integral_multiples(&self.curve(), &self.generator(), n_max)?;
        Ok(report
            .integral_indices()
            .into_iter()
            .filter(|&n| n > 1)
            .collect())
    }
}

/// The four known curves whose generator has three nontrivial integral
/// multiples.
pub fn exceptional_registry() -> &'static [RegistryEntry] {
    const REGISTRY: [RegistryEntry; 4] = [
        RegistryEntry { b: 108, x: 6, y: 18, multiples: &[2, 3, 5] },
        RegistryEntry { b: -13500, x: 60, y: 450, multiples: &[2, 3, 4] },
        RegistryEntry { b: 80, x: 4, y: 12, multiples: &[2, 3, 4] },
        RegistryEntry { b: -21168, x: 84, y: 756, multiples: &[2, 3, 4] },
    ];
    &REGISTRY
}

/// Whether the index `n >= 2` could head an integral multiple beyond the
/// registry: true exactly when `n <= 5` or no prime below 11 divides `n`.
pub fn theorem1_admissible(n: i64) -> bool {
    n <= 5 || (n % 2 != 0 && n % 3 != 0 && n % 5 != 0 && n % 7 != 0)
}

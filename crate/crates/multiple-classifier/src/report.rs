//! Multiple-by-multiple integrality reports.
//!
//! For an infinite-order point `P` the multiples `[n]P` have coordinates
//! `(A_n/D_n^2, Y_n/D_n^3)` in lowest terms, and `D_n` grows quadratically in
//! `n` on a logarithmic scale once denominators appear.  A report walks
//! `n = 1, 2, ..., n_max` with exact arithmetic and records, for each `n`,
//! the point itself, whether it is integral, and the denominator root `D_n`.
//! Integral multiples of integral points are rare — on most curves the set
//! of integral `n` is `{1}` — and the exceptions are what the rest of this
//! crate classifies.

use std::collections::BTreeMap;

use curve_core::{add, denominator_profile, CurvePoint, MordellCurve};
use num_bigint::BigInt;

use crate::error::ClassifierError;
use crate::Result;

/// One row of a [`MultipleReport`]: the exact point `[n]P`, its integrality,
/// and the denominator root `D_n` (so `x = A/D_n^2`; `D_n = 1` exactly when
/// the multiple is integral).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultipleEntry {
    pub integral: bool,
    pub point: CurvePoint,
    pub denominator: BigInt,
}

/// Integrality survey of `[n]P` for `1 <= n <= n_max`.
#[derive(Debug, Clone)]
pub struct MultipleReport {
    pub curve: MordellCurve,
    pub base: CurvePoint,
    pub entries: BTreeMap<i64, MultipleEntry>,
}

impl MultipleReport {
    /// Indices `n` whose multiple `[n]P` is integral, in increasing order.
    pub fn integral_indices(&self) -> Vec<i64> {
        self.entries
            .iter()
            .filter(|(_, e)| e.integral)
            .map(|(&n, _)| n)
            .collect()
    }
}

/// Computes `[n]P` exactly for `n = 1..=n_max` and records which multiples
/// are integral.
///
/// The base point must be an infinite-order point on `curve`; torsion inputs
/// are rejected with [`ClassifierError::TorsionInput`] since their multiples
/// recycle a fixed set.  Multiples are accumulated by repeated addition, so
/// the whole sweep costs `n_max` group operations.
pub fn integral_multiples(
    curve: &MordellCurve,
    p: &CurvePoint,
    n_max: i64,
) -> Result<MultipleReport> {
    if p.is_identity() || curve.is_torsion_point(p) {
        return Err(ClassifierError::TorsionInput);
    }
    if !curve.contains(p) {
        return Err(ClassifierError::NotIntegralPoint);
    }
    if n_max < 1 {
        return Err(ClassifierError::HypothesisViolated(
            "n_max must be at least 1".into(),
        ));
    }

    let mut entries = BTreeMap::new();
    let mut current = p.clone();
    for n in 1..=n_max {
        // An infinite-order base keeps every multiple affine, so the profile
        // is always defined.
        let (_, d) = denominator_profile(&current)?;
        entries.insert(
            n,
            MultipleEntry {
                integral: current.is_integral(),
                point: current.clone(),
                denominator: d,
            },
        );
        if n < n_max {
            current = add(curve, &current, p)?;
        }
    }

    Ok(MultipleReport {
        curve: curve.clone(),
        base: p.clone(),
        entries,
    })
}

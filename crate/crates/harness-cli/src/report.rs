//! Rank-1 structure reports.
//!
//! For a handful of rank-1 curves a Mordell–Weil generator is shipped as a
//! fixture (computing ranks is out of scope here).  The report enumerates
//! the integral points below a bound, marks which of them are `±[n]G` for
//! the fixture generator `G`, and attaches two height diagnostics: the
//! spread `max/min` of canonical heights over the integral non-torsion
//! points, and the margin of `h^(G)` over `log|B|/36`, the curve-independent
//! lower-bound baseline.  On curves with nontrivial torsion some integral
//! points are torsion translates `±[n]G + T` rather than plain multiples;
//! those are reported as unmatched rather than silently absorbed.

use std::collections::{BTreeMap, BTreeSet};

use curve_core::{make_curve, multiply, CurvePoint};
use heights::canonical_height;
use num_traits::ToPrimitive;

use crate::enumerate::enumerate_integral_points;
use crate::error::{HarnessError, Result};
use crate::record::ResultRecord;

/// Shipped rank-1 generators, keyed by curve coefficient.
pub const GENERATOR_FIXTURES: [(i64, (i64, i64)); 8] = [
    (-21168, (84, 756)),
    (-13500, (60, 450)),
    (-2160, (24, 108)),
    (-216, (10, 28)),
    (8, (1, 3)),
    (80, (4, 12)),
    (108, (6, 18)),
    (1188, (12, 54)),
];

/// Looks up the fixture generator for a coefficient, if one is on file.
pub fn generator_fixture(b: i64) -> Option<CurvePoint> {
    GENERATOR_FIXTURES
        .iter()
        .find(|&&(fb, _)| fb == b)
        .map(|&(_, (x, y))| CurvePoint::affine_int(x, y))
}

/// Builds the rank-1 report record for a fixture curve.
pub fn rank1_report(b: i64, x_max: i64, timestamp: &str) -> Result<ResultRecord> {
    let curve = make_curve(b)?;
    let g = generator_fixture(b).ok_or(HarnessError::NoGeneratorFixture { b })?;
    if !curve.contains(&g) {
        return Err(HarnessError::GeneratorNotOnCurve { b });
    }

    let en = enumerate_integral_points(b, x_max);

    // Index the integral multiples [n]G, n <= 30, by (x, |y|); the sign of y
    // only distinguishes [n]G from [-n]G.
    let mut multiple_index: BTreeMap<(i64, i64), i64> = BTreeMap::new();
    for n in 1..=30 {
        let q = multiply(&curve, &g, n)?;
        if !q.is_integral() {
            continue;
        }
        let x = q.x().expect("integral multiple is affine").to_integer();
        let y = q.y().expect("integral multiple is affine").to_integer();
        if let (Some(x), Some(y)) = (x.to_i64(), y.to_i64()) {
            multiple_index.entry((x, y.abs())).or_insert(n);
        }
    }

    let mut matched = Vec::new();
    let mut unmatched = Vec::new();
    let mut indices = BTreeSet::new();
    for &(x, y) in &en.points {
        match multiple_index.get(&(x, y)) {
            Some(&n) => {
                matched.push(format!("({x}, {y}) = [{n}]G"));
                indices.insert(n);
            }
            None => unmatched.push(format!("({x}, {y})")),
        }
    }

    // Height diagnostics over the integral non-torsion points.
    let mut h_min = f64::INFINITY;
    let mut h_max = 0.0f64;
    for &(x, y) in &en.points {
        let p = CurvePoint::affine_int(x, y);
        if curve.is_torsion_point(&p) {
            continue;
        }
        let h = canonical_height(&curve, &p, 1e-10)?;
        h_min = h_min.min(h);
        h_max = h_max.max(h);
    }
    let spread = if h_min.is_finite() {
        format!("{:.6}", h_max / h_min)
    } else {
        "n/a".to_owned()
    };
    let margin = canonical_height(&curve, &g, 1e-12)? - (b.unsigned_abs() as f64).ln() / 36.0;

    let (gx, gy) = GENERATOR_FIXTURES
        .iter()
        .find(|&&(fb, _)| fb == b)
        .map(|&(_, g)| g)
        .expect("fixture presence checked above");

    Ok(ResultRecord::new("rank1_report", timestamp)
        .with_input("b", b)
        .with_input("x_max", x_max)
        .with_input("generator", format!("({gx}, {gy})"))
        .with_output("point_count", en.count)
        .with_output(
            "points",
            en.points
                .iter()
                .map(|&(x, y)| format!("({x}, {y})"))
                .collect::<Vec<_>>()
                .join("; "),
        )
        .with_output("multiples", matched.join("; "))
        .with_output(
            "multiple_indices",
            indices
                .iter()
                .map(i64::to_string)
                .collect::<Vec<_>>()
                .join(","),
        )
        .with_output("unmatched", unmatched.join("; "))
        .with_output("all_points_are_multiples", unmatched.is_empty())
        .with_output("height_spread", spread)
        .with_output("height_margin", format!("{margin:.6}")))
}

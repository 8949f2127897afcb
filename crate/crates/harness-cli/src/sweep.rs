//! Consistency sweeps over ranges of coefficients.
//!
//! A sweep enumerates the integral points of every quasi-minimal curve in a
//! coefficient range and re-checks structural claims on each non-torsion
//! point: the canonical-height lower bound, the divisibility predicates
//! against honest group-law multiplication, the absence of integral `[8]P`,
//! and the torsion exclusions (square coefficients admit no integral `[3]P`,
//! cube coefficients no integral `[4]P`).
//!
//! Work is split across threads by striding over the curve list, but the
//! merged records are assembled in coefficient order from a caller-supplied
//! timestamp, so the output bytes are identical for every shard count.

use std::collections::BTreeMap;

use curve_core::{make_curve, multiply, CurvePoint, MordellCurve};
use heights::check_lower_bound;
use multiple_classifier::{four_div_check, three_div_classify};

use crate::enumerate::enumerate_integral_points;
use crate::error::{HarnessError, Result};
use crate::record::ResultRecord;

/// The checks a sweep knows how to run.
pub const CHECK_NAMES: [&str; 5] = [
    "lower_bound",
    "four_div_equiv",
    "three_div_equiv",
    "eight_div_none",
    "torsion_exclusions",
];

/// Sweep parameters.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    /// First coefficient, inclusive.
    pub from: i64,
    /// Last coefficient, inclusive.
    pub to: i64,
    /// Check names, each one of [`CHECK_NAMES`].
    pub checks: Vec<String>,
    /// Number of worker threads; must be at least 1.
    pub shard_count: usize,
    /// Enumeration window per curve.
    pub x_max: i64,
    /// Stamp copied into every record; sharing one stamp across shards keeps
    /// the output reproducible.
    pub timestamp: String,
}

impl SweepConfig {
    /// A single-threaded sweep with the default window `x <= 10^4`.
    pub fn new(from: i64, to: i64, checks: &[&str]) -> Self {
        SweepConfig {
            from,
            to,
            checks: checks.iter().map(|s| (*s).to_owned()).collect(),
            shard_count: 1,
            x_max: 10_000,
            timestamp: String::new(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum CheckKind {
    LowerBound,
    FourDivEquiv,
    ThreeDivEquiv,
    EightDivNone,
    TorsionExclusions,
}

impl CheckKind {
    fn parse(name: &str) -> Result<Self> {
        Ok(match name {
            "lower_bound" => CheckKind::LowerBound,
            "four_div_equiv" => CheckKind::FourDivEquiv,
            "three_div_equiv" => CheckKind::ThreeDivEquiv,
            "eight_div_none" => CheckKind::EightDivNone,
            "torsion_exclusions" => CheckKind::TorsionExclusions,
            _ => {
                return Err(HarnessError::ConfigError(format!(
                    "unknown check '{name}' (known: {})",
                    CHECK_NAMES.join(", ")
                )))
            }
        })
    }

    fn name(self) -> &'static str {
        match self {
            CheckKind::LowerBound => "lower_bound",
            CheckKind::FourDivEquiv => "four_div_equiv",
            CheckKind::ThreeDivEquiv => "three_div_equiv",
            CheckKind::EightDivNone => "eight_div_none",
            CheckKind::TorsionExclusions => "torsion_exclusions",
        }
    }
}

/// Per-check tallies for one curve: points inspected and violation texts.
type CurveSurvey = Vec<(u64, Vec<String>)>;

fn multiple_is_integral(
    curve: &MordellCurve,
    p: &CurvePoint,
    n: i64,
) -> std::result::Result<bool, String> {
    multiply(curve, p, n)
        .map(|q| q.is_integral())
        .map_err(|e| e.to_string())
}

fn perfect_square_i64(v: i64) -> bool {
    v >= 0 && curve_core::numeric::perfect_square_u128(v as u128).is_some()
}

fn perfect_cube_i64(v: i64) -> bool {
    let mut t = (v as f64).cbrt().round() as i64;
    while t * t * t > v {
        t -= 1;
    }
    while (t + 1) * (t + 1) * (t + 1) <= v {
        t += 1;
    }
    t * t * t == v
}

/// Runs every requested check over the non-torsion integral points of one
/// curve.  Check failures become violation strings rather than errors, so a
/// sweep always reports on the whole range.
fn survey_curve(b: i64, x_max: i64, kinds: &[CheckKind]) -> CurveSurvey {
    let curve = make_curve(b).expect("sweep ranges exclude b = 0");
    let en = enumerate_integral_points(b, x_max);
    let points: Vec<((i64, i64), CurvePoint)> = en
        .points
        .iter()
        .map(|&(x, y)| ((x, y), CurvePoint::affine_int(x, y)))
        .filter(|(_, p)| !curve.is_torsion_point(p))
        .collect();

    let is_square = perfect_square_i64(b);
    let is_cube = perfect_cube_i64(b);

    kinds
        .iter()
        .map(|&kind| {
            let mut inspected = 0u64;
            let mut violations = Vec::new();
            for ((x, y), p) in &points {
                let tag = format!("B={b} P=({x}, {y})");
                match kind {
                    CheckKind::LowerBound => {
                        inspected += 1;
                        match check_lower_bound(&curve, p) {
                            Ok(true) => {}
                            Ok(false) => {
                                violations.push(format!("{tag}: below the height lower bound"))
                            }
                            Err(e) => violations.push(format!("{tag}: {e}")),
                        }
                    }
                    CheckKind::FourDivEquiv => {
                        inspected += 1;
                        match (four_div_check(&curve, p), multiple_is_integral(&curve, p, 4)) {
                            (Ok(pred), Ok(act)) if pred == act => {}
                            (Ok(pred), Ok(act)) => violations.push(format!(
                                "{tag}: four-div predicate says {pred}, [4]P integral is {act}"
                            )),
                            (Err(e), _) => violations.push(format!("{tag}: predicate error {e}")),
                            (_, Err(e)) => violations.push(format!("{tag}: group law error {e}")),
                        }
                    }
                    CheckKind::ThreeDivEquiv => {
                        inspected += 1;
                        let predicted = three_div_classify(&curve, p).map(|t| t.is_some());
                        match (predicted, multiple_is_integral(&curve, p, 3)) {
                            (Ok(pred), Ok(act)) if pred == act => {}
                            (Ok(pred), Ok(act)) => violations.push(format!(
                                "{tag}: three-div pattern present = {pred}, [3]P integral is {act}"
                            )),
                            (Err(e), _) => violations.push(format!("{tag}: classifier error {e}")),
                            (_, Err(e)) => violations.push(format!("{tag}: group law error {e}")),
                        }
                    }
                    CheckKind::EightDivNone => {
                        inspected += 1;
                        match multiple_is_integral(&curve, p, 8) {
                            Ok(false) => {}
                            Ok(true) => violations.push(format!("{tag}: [8]P is integral")),
                            Err(e) => violations.push(format!("{tag}: group law error {e}")),
                        }
                    }
                    CheckKind::TorsionExclusions => {
                        if !is_square && !is_cube {
                            continue;
                        }
                        inspected += 1;
                        if is_square {
                            match multiple_is_integral(&curve, p, 3) {
                                Ok(true) => violations.push(format!(
                                    "{tag}: square coefficient yet [3]P is integral"
                                )),
                                Ok(false) => {}
                                Err(e) => violations.push(format!("{tag}: group law error {e}")),
                            }
                        }
                        if is_cube {
                            match multiple_is_integral(&curve, p, 4) {
                                Ok(true) => violations.push(format!(
                                    "{tag}: cube coefficient yet [4]P is integral"
                                )),
                                Ok(false) => {}
                                Err(e) => violations.push(format!("{tag}: group law error {e}")),
                            }
                        }
                    }
                }
            }
            (inspected, violations)
        })
        .collect()
}

/// Runs a sweep and returns one summary record per requested check.
///
/// The record stream is byte-deterministic: for a fixed configuration and
/// timestamp, every shard count produces identical output.
pub fn sweep(config: &SweepConfig) -> Result<Vec<ResultRecord>> {
    let kinds: Vec<CheckKind> = config
        .checks
        .iter()
        .map(|name| CheckKind::parse(name))
        .collect::<Result<_>>()?;
    if config.shard_count == 0 {
        return Err(HarnessError::ConfigError(
            "shard_count must be at least 1".to_owned(),
        ));
    }
    if config.x_max < 1 {
        return Err(HarnessError::ConfigError(
            "x_max must be at least 1".to_owned(),
        ));
    }
    if config.from > config.to || kinds.is_empty() {
        return Ok(Vec::new());
    }

    // Quasi-minimal coefficients only; the structural claims are stated for
    // sixth-power-free B.
    let coefficients: Vec<i64> = (config.from..=config.to)
        .filter(|&b| b != 0)
        .filter(|&b| make_curve(b).map(|c| c.quasi_minimal()).unwrap_or(false))
        .collect();

    let shard_count = config.shard_count;
    let x_max = config.x_max;
    let surveys: Vec<BTreeMap<i64, CurveSurvey>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..shard_count)
            .map(|shard| {
                let coefficients = &coefficients;
                let kinds = &kinds;
                scope.spawn(move || {
                    let mut out = BTreeMap::new();
                    let mut i = shard;
                    while i < coefficients.len() {
                        let b = coefficients[i];
                        out.insert(b, survey_curve(b, x_max, kinds));
                        i += shard_count;
                    }
                    out
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("sweep worker panicked"))
            .collect()
    });

    // Merge in coefficient order so shard layout cannot reorder anything.
    let mut inspected = vec![0u64; kinds.len()];
    let mut violations: Vec<Vec<String>> = vec![Vec::new(); kinds.len()];
    for &b in &coefficients {
        let survey = surveys
            .iter()
            .find_map(|m| m.get(&b))
            .expect("every coefficient is assigned to exactly one shard");
        for (idx, (pts, viols)) in survey.iter().enumerate() {
            inspected[idx] += pts;
            violations[idx].extend_from_slice(viols);
        }
    }

    Ok(kinds
        .iter()
        .enumerate()
        .map(|(idx, kind)| {
            ResultRecord::new("sweep_check", &config.timestamp)
                .with_input("from", config.from)
                .with_input("to", config.to)
                .with_input("x_max", config.x_max)
                .with_input("check", kind.name())
                .with_output("curves_checked", coefficients.len())
                .with_output("points_checked", inspected[idx])
                .with_output("violations", violations[idx].len())
                .with_output("violation_details", violations[idx].join("; "))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::record::to_jsonl;

    #[test]
    fn unknown_check_is_rejected() {
        let cfg = SweepConfig::new(1, 10, &["lower_bound", "bogus"]);
        match sweep(&cfg) {
            Err(HarnessError::ConfigError(msg)) => assert!(msg.contains("bogus")),
            other => panic!("expected a config error, got {other:?}"),
        }
    }

    #[test]
    fn zero_shards_is_rejected() {
        let mut cfg = SweepConfig::new(1, 10, &["lower_bound"]);
        cfg.shard_count = 0;
        assert!(matches!(sweep(&cfg), Err(HarnessError::ConfigError(_))));
    }

    #[test]
    fn empty_range_yields_no_records() {
        let cfg = SweepConfig::new(10, 1, &["lower_bound"]);
        assert_eq!(sweep(&cfg).unwrap(), Vec::new());
    }

    #[test]
    fn shard_layout_does_not_change_the_bytes() {
        let mut baseline = None;
        for shards in [1usize, 4, 16] {
            let mut cfg = SweepConfig::new(-120, 120, &CHECK_NAMES);
            cfg.shard_count = shards;
            cfg.x_max = 2_000;
            cfg.timestamp = "fixed-stamp".to_owned();
            let text = to_jsonl(&sweep(&cfg).unwrap()).unwrap();
            match &baseline {
                None => baseline = Some(text),
                Some(first) => assert_eq!(first, &text, "shard count {shards}"),
            }
        }
        let text = baseline.unwrap();
        assert_eq!(text.lines().count(), CHECK_NAMES.len());
    }

    #[test]
    fn small_range_passes_every_check() {
        let mut cfg = SweepConfig::new(-60, 60, &CHECK_NAMES);
        cfg.shard_count = 4;
        cfg.x_max = 2_000;
        let records = sweep(&cfg).unwrap();
        assert_eq!(records.len(), 5);
        for rec in &records {
            assert_eq!(rec.outputs["violations"], "0", "{}", rec.inputs["check"]);
            assert_eq!(rec.outputs["violation_details"], "");
        }
        // The range holds plenty of quasi-minimal curves and some points.
        let curves: u64 = records[0].outputs["curves_checked"].parse().unwrap();
        assert!(curves > 100, "curves {curves}");
        let pts: u64 = records[0].outputs["points_checked"].parse().unwrap();
        assert!(pts > 20, "points {pts}");
    }

    #[test]
    fn torsion_exclusions_inspect_only_square_or_cube_coefficients() {
        // 9 is a square with non-torsion integral points (-2, 1), (3, 6),
        // (6, 15), (40, 253); 10 is neither square nor cube, so its points
        // are not inspected by this check.
        let mut cfg = SweepConfig::new(9, 10, &["torsion_exclusions"]);
        cfg.x_max = 100;
        let records = sweep(&cfg).unwrap();
        assert_eq!(records[0].outputs["curves_checked"], "2");
        assert_eq!(records[0].outputs["points_checked"], "4");
        assert_eq!(records[0].outputs["violations"], "0");
    }
}

//! `mordell` — exact computations on the curves `y² = x³ + B`.
//!
//! Subcommands cover single-curve inspection (`curve info`, `enumerate`,
//! `bounds`), multiple structure (`multiples`, `classify`, `family`,
//! `report`), the bounded Diophantine searches behind the integrality
//! tables (`thue`, `sweep-table2`), and range-wide consistency sweeps
//! (`sweep`).
//!
//! Exit codes: `0` success, `1` a sweep found check violations, `2` usage
//! or computation errors.

use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use curve_core::{make_curve, multiply, CurvePoint, MordellCurve, TorsionKind};
use diophantine_search::{
    four_torsion_thue, multiple_witness, pell_sweep_four_div, psi5_problems, psi7_companion,
    psi7_system_solve, thue_solve_bounded, Solution,
};
use elliptic_analytic::{
    david_lower, gap_lower_bound_on_log_n2, linear_form_upper, n_upper_bound, real_period,
};
use harness_cli::{
    enumerate_integral_points, hall_measure, rank1_report, sweep, to_jsonl, write_jsonl,
    SweepConfig, CHECK_NAMES,
};
use heights::{lower_bound_constant, multiple_height_upper_bound};
use multiple_classifier::{
    family_generate, four_div_check, integral_multiples, tabef_value, three_div_classify,
    two_div_decompose,
};
use num_traits::ToPrimitive;

#[derive(Parser)]
#[command(
    name = "mordell",
    version,
    about = "Exact arithmetic on the Mordell curves y^2 = x^3 + B"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Curve-level invariants.
    #[command(subcommand)]
    Curve(CurveCmd),
    /// Survey the integrality of [n]P for n up to a cap.
    Multiples {
        #[arg(long, allow_negative_numbers = true)]
        b: i64,
        /// Base point as `x,y`.
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        point: (i64, i64),
        #[arg(long, default_value_t = 30)]
        max_n: i64,
    },
    /// Divisibility patterns of one integral point.
    Classify {
        #[arg(long, allow_negative_numbers = true)]
        b: i64,
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        point: (i64, i64),
    },
    /// Instantiate one of the six parametric families with integral [3]P.
    Family {
        /// Family number, 1 through 6.
        #[arg(long)]
        id: u8,
        #[arg(long, allow_negative_numbers = true)]
        param: i64,
    },
    /// Solve the bounded Thue systems behind the integrality tables.
    Thue {
        #[arg(long, value_enum)]
        set: ThueSet,
        #[arg(long, default_value_t = 100)]
        bound: i64,
    },
    /// Sweep for curves whose generator has integral [4]P.
    #[command(name = "sweep-table2")]
    SweepTable2 {
        #[arg(long, default_value_t = 10_000_000)]
        b_max: i64,
    },
    /// List all integral points with x below a bound.
    Enumerate {
        #[arg(long, allow_negative_numbers = true)]
        b: i64,
        #[arg(long, default_value_t = 1_000_000)]
        x_max: i64,
    },
    /// Height and elliptic-logarithm bound panel.
    Bounds {
        #[arg(long, allow_negative_numbers = true)]
        b: i64,
        /// Multiple index used by the index-dependent estimates.
        #[arg(long, default_value_t = 11)]
        n: i64,
    },
    /// Rank-1 structure report for a curve with a shipped generator.
    Report {
        #[arg(long, allow_negative_numbers = true)]
        b: i64,
        #[arg(long, default_value_t = 1_000_000)]
        x_max: i64,
        /// Write the report as JSONL here instead of a summary to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-check structural claims over a coefficient range.
    Sweep {
        #[arg(long, allow_negative_numbers = true)]
        from: i64,
        #[arg(long, allow_negative_numbers = true)]
        to: i64,
        /// Comma-separated check names.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        #[arg(long, default_value_t = 1)]
        shards: usize,
        #[arg(long, default_value_t = 10_000)]
        x_max: i64,
        /// Output file; defaults to `$MORDELL_OUT_DIR/sweep_<from>_<to>.jsonl`
        /// when the variable is set, otherwise records go to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CurveCmd {
    /// Print torsion, minimality, and height-floor data.
    Info {
        #[arg(long, allow_negative_numbers = true)]
        b: i64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ThueSet {
    /// Quintic kernel forms: integral [5]P.
    Psi5,
    /// Septic system with its quadratic companion: integral [7]P.
    Psi7,
    /// Octic behind four-torsion translates.
    #[value(name = "fourT")]
    FourT,
}

fn parse_point(s: &str) -> Result<(i64, i64), String> {
    let (xs, ys) = s
        .split_once(',')
        .ok_or_else(|| format!("expected `x,y`, got `{s}`"))?;
    let x = xs.trim().parse().map_err(|e| format!("bad x: {e}"))?;
    let y = ys.trim().parse().map_err(|e| format!("bad y: {e}"))?;
    Ok((x, y))
}

fn fmt_point(p: &CurvePoint) -> String {
    match (p.x(), p.y()) {
        (Some(x), Some(y)) => format!("({x}, {y})"),
        _ => "O".to_owned(),
    }
}

fn int_coords(p: &CurvePoint) -> Option<(i64, i64)> {
    if !p.is_integral() {
        return None;
    }
    let x = p.x()?.to_integer().to_i64()?;
    let y = p.y()?.to_integer().to_i64()?;
    Some((x, y))
}

fn checked_point(curve: &MordellCurve, (x, y): (i64, i64)) -> anyhow::Result<CurvePoint> {
    let p = CurvePoint::affine_int(x, y);
    if !curve.contains(&p) {
        bail!(
            "({x}, {y}) does not satisfy y^2 = x^3 + {}: not on the curve",
            curve.b()
        );
    }
    Ok(p)
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            2
        }
    };
    std::process::exit(code);
}

fn run(command: Command) -> anyhow::Result<i32> {
    match command {
        Command::Curve(CurveCmd::Info { b }) => cmd_curve_info(b),
        Command::Multiples { b, point, max_n } => cmd_multiples(b, point, max_n),
        Command::Classify { b, point } => cmd_classify(b, point),
        Command::Family { id, param } => cmd_family(id, param),
        Command::Thue { set, bound } => cmd_thue(set, bound),
        Command::SweepTable2 { b_max } => cmd_sweep_table2(b_max),
        Command::Enumerate { b, x_max } => cmd_enumerate(b, x_max),
        Command::Bounds { b, n } => cmd_bounds(b, n),
        Command::Report { b, x_max, out } => cmd_report(b, x_max, out),
        Command::Sweep {
            from,
            to,
            checks,
            shards,
            x_max,
            out,
        } => cmd_sweep(from, to, checks, shards, x_max, out),
    }
}

fn cmd_curve_info(b: i64) -> anyhow::Result<i32> {
    let curve = make_curve(b)?;
    let factors = curve
        .factorization()
        .iter()
        .map(|(p, e)| {
            if *e == 1 {
                p.to_string()
            } else {
                format!("{p}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join(" * ");
    let sign = if b < 0 { "-" } else { "" };
    println!("B = {b} = {sign}{factors}");
    println!("quasi-minimal (sixth-power-free): {}", curve.quasi_minimal());
    println!("globally minimal: {}", curve.globally_minimal());

    let torsion = curve.torsion();
    let kind = match torsion {
        TorsionKind::Z6 { .. } => "Z/6",
        TorsionKind::Z3 { .. } => "Z/3",
        TorsionKind::Z2 { .. } => "Z/2",
        TorsionKind::Trivial => "trivial",
    };
    let pts = torsion
        .points()
        .iter()
        .map(fmt_point)
        .collect::<Vec<_>>()
        .join(", ");
    if pts.is_empty() {
        println!("torsion: {kind} (order {})", torsion.order());
    } else {
        println!("torsion: {kind} (order {}): {pts}", torsion.order());
    }

    match lower_bound_constant(b) {
        Ok((coeff, c)) => {
            let slope = if (coeff - 1.0 / 24.0).abs() < 1e-12 {
                "log|B|/24"
            } else {
                "log|B|/36"
            };
            println!("height floor: h^(P) > {slope} - {c:.4} for integral non-torsion P");
        }
        Err(e) => println!("height floor: n/a ({e})"),
    }
    match real_period(b, 1e-12) {
        Ok(period) => println!("real period: {:.10}", period.omega_real),
        Err(e) => println!("real period: n/a ({e})"),
    }
    Ok(0)
}

fn cmd_multiples(b: i64, point: (i64, i64), max_n: i64) -> anyhow::Result<i32> {
    let curve = make_curve(b)?;
    let p = checked_point(&curve, point)?;
    let report = integral_multiples(&curve, &p, max_n)?;
    println!(
        "B = {b}, P = ({}, {}), n up to {max_n}",
        point.0, point.1
    );
    for (n, entry) in &report.entries {
        if entry.integral {
            println!("n={n} integral {}", fmt_point(&entry.point));
        } else {
            println!("n={n} rational denominator={}", entry.denominator);
        }
    }
    let indices = report
        .integral_indices()
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(",");
    println!("integral multiples: {indices}");
    Ok(0)
}

fn cmd_classify(b: i64, point: (i64, i64)) -> anyhow::Result<i32> {
    let curve = make_curve(b)?;
    let p = checked_point(&curve, point)?;
    println!("B = {b}, P = ({}, {})", point.0, point.1);

    match two_div_decompose(&curve, &p) {
        Ok(params) => {
            println!(
                "doubling decomposition: M={} N={} t={} K={} variant={}",
                params.m, params.n, params.t, params.k, params.variant
            );
        }
        Err(e) => println!("doubling decomposition: none ({e})"),
    }

    match four_div_check(&curve, &p) {
        Ok(true) => {
            let t = tabef_value(&curve, &p)
                .map(|v| v.to_string())
                .unwrap_or_else(|e| format!("n/a ({e})"));
            println!("four-div predicate: true (square certificate {t})");
        }
        Ok(false) => println!("four-div predicate: false"),
        Err(e) => println!("four-div predicate: n/a ({e})"),
    }

    match three_div_classify(&curve, &p) {
        Ok(Some(t)) => println!(
            "tripling pattern: type {:?} (M={} N={} K={})",
            t.tag, t.m, t.n, t.k
        ),
        Ok(None) => println!("tripling pattern: none"),
        Err(e) => println!("tripling pattern: n/a ({e})"),
    }

    // Independent confirmation straight from the group law.
    for n in [2i64, 3, 4] {
        let q = multiply(&curve, &p, n)?;
        if q.is_integral() {
            println!("group law: [{n}]P = {} integral", fmt_point(&q));
        } else {
            println!("group law: [{n}]P not integral");
        }
    }
    Ok(0)
}

fn cmd_family(id: u8, param: i64) -> anyhow::Result<i32> {
    let inst = family_generate(id, param)?;
    println!("family {} at parameter {}", inst.family, inst.parameter);
    println!("B = {}", inst.curve.b());
    println!("quasi-minimal: {}", inst.curve.quasi_minimal());
    println!("P = {}", fmt_point(&inst.point));
    println!("x([3]P) = {}", inst.x_triple);
    let triple = multiply(&inst.curve, &inst.point, 3)?;
    println!("[3]P = {} (group law)", fmt_point(&triple));
    Ok(0)
}

fn describe_witness(x: i64, y: i64, n: i64) -> anyhow::Result<String> {
    Ok(match multiple_witness(x, y, n, 60)? {
        Some((curve, p)) => {
            let q = multiply(&curve, &p, n)?;
            format!(
                "non-torsion witness B={} P={} [{n}]P={}",
                curve.b(),
                fmt_point(&p),
                fmt_point(&q)
            )
        }
        None => "no non-torsion witness with |a| <= 60".to_owned(),
    })
}

fn cmd_thue(set: ThueSet, bound: i64) -> anyhow::Result<i32> {
    match set {
        ThueSet::Psi5 => {
            println!("quintic kernel forms, box |x|,|y| <= {bound} (complete inside the box)");
            for mut problem in psi5_problems() {
                problem.bound = bound;
                let rhs = problem.rhs_set[0].clone();
                let solutions = thue_solve_bounded(&problem)?;
                if solutions.is_empty() {
                    println!("rhs={rhs}: no solutions");
                    continue;
                }
                let list = solutions
                    .iter()
                    .map(|s| format!("({}, {})", s.x, s.y))
                    .collect::<Vec<_>>()
                    .join(" ");
                println!("rhs={rhs}: {list}");
                for s in &solutions {
                    println!("  ({}, {}): {}", s.x, s.y, describe_witness(s.x, s.y, 5)?);
                }
            }
        }
        ThueSet::Psi7 => {
            println!("septic system, box |x|,|y| <= {bound}");
            for s in psi7_system_solve(bound)? {
                println!(
                    "({}, {}) rhs={} companion={}: {}",
                    s.x,
                    s.y,
                    s.rhs,
                    psi7_companion(s.x, s.y),
                    describe_witness(s.x, s.y, 7)?
                );
            }
        }
        ThueSet::FourT => {
            println!("four-torsion octic, box |x|,|y| <= {bound}");
            let solutions = four_torsion_thue(bound)?;
            for Solution { x, y, rhs } in &solutions {
                println!("({x}, {y}) rhs={rhs}");
            }
            println!("{} solutions", solutions.len());
        }
    }
    Ok(0)
}

fn cmd_sweep_table2(b_max: i64) -> anyhow::Result<i32> {
    let rows = pell_sweep_four_div(b_max)?;
    println!(
        "curves with |B| <= {b_max} whose listed point has integral [4]P: {}",
        rows.len()
    );
    for (curve, p) in &rows {
        let (x, y) = int_coords(p).context("sweep rows carry integral points")?;
        println!("B={} point=[{x}, {y}]", curve.b());
    }
    Ok(0)
}

fn cmd_enumerate(b: i64, x_max: i64) -> anyhow::Result<i32> {
    make_curve(b)?;
    let en = enumerate_integral_points(b, x_max);
    println!("B = {b}, window x <= {x_max}");
    for &(x, y) in &en.points {
        let p = CurvePoint::affine_int(x, y);
        match hall_measure(&p, b) {
            Ok(q) => println!("({x}, {y})  quality {q:.4}"),
            Err(_) => println!("({x}, {y})"),
        }
    }
    println!("integral points: {}", en.count);
    Ok(0)
}

fn cmd_bounds(b: i64, n: i64) -> anyhow::Result<i32> {
    let curve = make_curve(b)?;
    println!("B = {b}, index n = {n}");

    match real_period(b, 1e-12) {
        Ok(period) => {
            println!("real period: {:.10}", period.omega_real);
            println!(
                "lattice: omega_1 = {:.10}, Im tau = {:.10}",
                period.omega1, period.tau_im
            );
        }
        Err(e) => println!("real period: n/a ({e})"),
    }

    match lower_bound_constant(b) {
        Ok((coeff, c)) => println!("height floor: h^(P) > {coeff:.6}*log|B| - {c:.4}"),
        Err(e) => println!("height floor: n/a ({e})"),
    }
    for (label, kind, idx) in [
        ("h^ ceiling, two-div point", "two_div_point", None),
        ("h^ ceiling, four-div floor", "four_div_floor", None),
        ("h^ ceiling, [n]P witness", "n_mult_witness", Some(n)),
    ] {
        match multiple_height_upper_bound(kind, b, idx) {
            Ok(v) => println!("{label}: {v:.4}"),
            Err(e) => println!("{label}: n/a ({e})"),
        }
    }

    for (label, kind, idx) in [
        ("log-linear-form ceiling, general n", "general_n", Some(n)),
        ("log-linear-form ceiling, [4]P", "four_mult", None),
        ("log-linear-form ceiling, [2],[3]P", "two_three_mult", None),
    ] {
        match linear_form_upper(&curve, kind, idx) {
            Ok(v) => println!("{label}: {v:.4}"),
            Err(e) => println!("{label}: n/a ({e})"),
        }
    }
    match david_lower(&curve, n) {
        Ok(v) => println!("transcendence floor for log|Lambda|: {v:.4e}"),
        Err(e) => println!("transcendence floor for log|Lambda|: n/a ({e})"),
    }
    match n_upper_bound(&curve.b_big()) {
        Ok(v) => println!("index ceiling from the gap: n <= {v:.4e}"),
        Err(e) => println!("index ceiling from the gap: n/a ({e})"),
    }
    match gap_lower_bound_on_log_n2(n, b) {
        Ok(v) => println!("second-index gap: log n2 >= {v:.4}"),
        Err(e) => println!("second-index gap: n/a ({e})"),
    }
    Ok(0)
}

fn cmd_report(b: i64, x_max: i64, out: Option<PathBuf>) -> anyhow::Result<i32> {
    let stamp = chrono::Utc::now().to_rfc3339();
    let record = rank1_report(b, x_max, &stamp)?;
    let path = out.or_else(|| {
        std::env::var_os("MORDELL_OUT_DIR")
            .map(|dir| PathBuf::from(dir).join(format!("rank1_{b}.jsonl")))
    });
    match path {
        Some(path) => {
            write_jsonl(&path, std::slice::from_ref(&record))
                .with_context(|| format!("writing {}", path.display()))?;
            println!("report written to {}", path.display());
        }
        None => {
            for (key, value) in &record.outputs {
                println!("{key}: {value}");
            }
        }
    }
    Ok(0)
}

fn cmd_sweep(
    from: i64,
    to: i64,
    checks: Vec<String>,
    shards: usize,
    x_max: i64,
    out: Option<PathBuf>,
) -> anyhow::Result<i32> {
    let checks = if checks.is_empty() {
        CHECK_NAMES.iter().map(|s| (*s).to_owned()).collect()
    } else {
        checks
    };
    let config = SweepConfig {
        from,
        to,
        checks,
        shard_count: shards,
        x_max,
        timestamp: chrono::Utc::now().to_rfc3339(),
    };
    let records = sweep(&config)?;

    let mut total_violations = 0u64;
    for rec in &records {
        let v: u64 = rec.outputs["violations"].parse().unwrap_or(0);
        total_violations += v;
        println!(
            "check {}: curves={} points={} violations={}",
            rec.inputs["check"],
            rec.outputs["curves_checked"],
            rec.outputs["points_checked"],
            rec.outputs["violations"],
        );
        if v > 0 {
            println!("  {}", rec.outputs["violation_details"]);
        }
    }

    let path = out.or_else(|| {
        std::env::var_os("MORDELL_OUT_DIR")
            .map(|dir| PathBuf::from(dir).join(format!("sweep_{from}_{to}.jsonl")))
    });
    match path {
        Some(path) => {
            write_jsonl(&path, &records).with_context(|| format!("writing {}", path.display()))?;
            println!("records written to {}", path.display());
        }
        None => print!("{}", to_jsonl(&records)?),
    }

    Ok(if total_violations > 0 { 1 } else { 0 })
}

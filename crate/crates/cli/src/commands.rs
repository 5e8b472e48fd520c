use std::io::Write;
use std::path::Path;

use anyhow::anyhow;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use bench_harness::{
    default_registry, quiet_check, run_benchmark, timer_resolution_ns, BenchConfig,
    TIMER_RESOLUTION_WARN_NS,
};
use perf_model::{
    fit_posterior, read_bench_column, read_posterior, summarize_posterior, write_posterior,
    FitConfig, MIN_POSTERIOR_DRAWS, PARAM_NAMES,
};
use precision_oracle::{
    hp_dense_second_derivatives, hp_evaluate_curve, hp_second_derivatives, max_disagreement_hp,
    max_disagreement_vs_hp, mse_vs_hp, PrecisionConfig,
};
use spline_core::{evaluate_curve, second_derivatives, ControlCurve};

use crate::files::{parse_boundary, read_curve, read_ypp, sink};
use crate::CliError;

fn write_runtime<W: Write>(out: &mut W, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).map_err(CliError::runtime)
}

pub fn derivs(
    input: &Path,
    out: Option<&Path>,
    start: &str,
    end: &str,
) -> Result<(), CliError> {
    let curve = read_curve(input)?;
    let start = parse_boundary(start)?;
    let end = parse_boundary(end)?;
    let ypp = second_derivatives(&curve, start, end).map_err(CliError::validation)?;

    let mut out = sink(out)?;
    for ((x, y), d) in curve
        .knots()
        .iter()
        .zip(curve.values())
        .zip(ypp.values())
    {
        write_runtime(&mut out, &format!("{x}\t{y}\t{d}\n"))?;
    }
    out.flush().map_err(CliError::runtime)
}

/// Uniformly spaced points across the knot span, endpoints included.
fn linspace(curve: &ControlCurve, count: usize) -> Vec<f64> {
    let (lo, hi) = curve.domain();
    match count {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..count)
            .map(|k| {
                if k == count - 1 {
                    hi
                } else {
                    lo + (hi - lo) * k as f64 / (count - 1) as f64
                }
            })
            .collect(),
    }
}

#[allow(clippy::too_many_arguments)]
pub fn interp(
    input: &Path,
    out: Option<&Path>,
    ypp_path: Option<&Path>,
    start: Option<&str>,
    end: Option<&str>,
    points: Option<usize>,
    at: Option<&str>,
) -> Result<(), CliError> {
    let curve = read_curve(input)?;
    let ypp = match ypp_path {
        Some(path) => read_ypp(path, &curve)?,
        None => {
            let start = parse_boundary(start.unwrap_or("natural"))?;
            let end = parse_boundary(end.unwrap_or("natural"))?;
            second_derivatives(&curve, start, end).map_err(CliError::validation)?
        }
    };

    let xs: Vec<f64> = match (points, at) {
        (Some(count), None) => linspace(&curve, count),
        (None, Some(list)) => {
            if list.trim().is_empty() {
                Vec::new()
            } else {
                list.split(',')
                    .map(|txt| {
                        txt.trim().parse::<f64>().map_err(|_| {
                            CliError::Validation(anyhow!("bad evaluation point {txt:?}"))
                        })
                    })
                    .collect::<Result<_, _>>()?
            }
        }
        (None, None) => {
            return Err(CliError::Validation(anyhow!(
                "one of --points or --at is required"
            )))
        }
        (Some(_), Some(_)) => unreachable!("clap forbids both"),
    };

    let ys = evaluate_curve(&curve, &ypp, &xs).map_err(CliError::validation)?;
    let mut out = sink(out)?;
    for (x, y) in xs.iter().zip(&ys) {
        write_runtime(&mut out, &format!("{x}\t{y}\n"))?;
    }
    out.flush().map_err(CliError::runtime)
}

pub fn bench(
    out: Option<&Path>,
    seed: u64,
    n_min: usize,
    n_max: usize,
    schedule_len: usize,
    run_quiet_check: bool,
) -> Result<(), CliError> {
    let cfg = BenchConfig {
        n_min,
        n_max,
        schedule_len,
        seed,
    };
    cfg.validate().map_err(CliError::validation)?;

    let resolution = timer_resolution_ns();
    if resolution > TIMER_RESOLUTION_WARN_NS {
        eprintln!(
            "warning: timer resolution is about {resolution} ns (want <= {TIMER_RESOLUTION_WARN_NS} ns); \
             timings will be coarse"
        );
    }
    if run_quiet_check {
        let report = quiet_check();
        eprintln!(
            "quiet-check: timer resolution {} ns, workload median {} ns, jitter ratio {:.2}",
            report.timer_resolution_ns, report.workload_median_ns, report.jitter_ratio
        );
        if report.looks_loaded() {
            eprintln!("warning: the machine looks loaded; benchmark noise will be inflated");
        }
    }

    let mut out = sink(out)?;
    run_benchmark(&cfg, &default_registry(), &mut out).map_err(CliError::runtime)?;
    out.flush().map_err(CliError::runtime)
}

#[allow(clippy::too_many_arguments)]
pub fn fit(
    input: &Path,
    out: Option<&Path>,
    algorithm: &str,
    round: Option<usize>,
    seed: u64,
    walkers: usize,
    steps: usize,
    burn_in: Option<usize>,
    t_bounds: (f64, f64),
) -> Result<(), CliError> {
    let file = std::fs::File::open(input).map_err(CliError::validation)?;
    let reader = std::io::BufReader::new(file);
    let data = read_bench_column(reader, algorithm, round).map_err(CliError::validation)?;
    if data.is_empty() {
        return Err(CliError::Validation(anyhow!(
            "no rows selected for {algorithm} (round filter {round:?})"
        )));
    }

    let cfg = FitConfig {
        walkers,
        steps,
        burn_in: burn_in.unwrap_or(steps / 2),
        seed,
        t_bounds,
    };
    let (samples, diagnostics) = fit_posterior(&data, &cfg).map_err(|e| match e {
        perf_model::ModelError::InvalidConfig { .. } => CliError::validation(e),
        other => CliError::runtime(other),
    })?;
    if samples.draws.len() < MIN_POSTERIOR_DRAWS {
        eprintln!(
            "warning: only {} posterior draws (expected at least {MIN_POSTERIOR_DRAWS}); \
             raise --steps or --walkers",
            samples.draws.len()
        );
    }
    eprintln!(
        "fit: {} draws, acceptance fraction {:.3}",
        samples.draws.len(),
        diagnostics.acceptance_fraction
    );

    // Distinct stream from the sampler's so the shuffle cannot alias it.
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut out = sink(out)?;
    write_posterior(&samples, &mut rng, &mut out).map_err(CliError::runtime)?;
    out.flush().map_err(CliError::runtime)
}

pub fn compare(
    input: &Path,
    out: Option<&Path>,
    start: &str,
    end: &str,
    precision: u32,
    points: usize,
) -> Result<(), CliError> {
    let curve = read_curve(input)?;
    let start = parse_boundary(start)?;
    let end = parse_boundary(end)?;
    let cfg = PrecisionConfig::new(precision).map_err(CliError::validation)?;
    let cfg_higher = PrecisionConfig::new(precision + 20).map_err(CliError::validation)?;

    let double = second_derivatives(&curve, start, end).map_err(CliError::validation)?;
    let oracle = hp_second_derivatives(&curve, start, end, &cfg).map_err(CliError::runtime)?;
    let oracle_higher =
        hp_second_derivatives(&curve, start, end, &cfg_higher).map_err(CliError::runtime)?;
    let oracle_dense =
        hp_dense_second_derivatives(&curve, start, end, &cfg).map_err(CliError::runtime)?;

    let mut report = Vec::new();
    report.push((
        format!("ypp_max_disagreement_double_vs_hp{precision}"),
        max_disagreement_vs_hp(double.values(), &oracle, &cfg).map_err(CliError::runtime)?,
    ));
    report.push((
        format!("ypp_mse_double_vs_hp{precision}"),
        mse_vs_hp(double.values(), &oracle, &cfg).map_err(CliError::runtime)?,
    ));
    report.push((
        format!("ypp_max_disagreement_hp{precision}_vs_hp{}", precision + 20),
        max_disagreement_hp(&oracle, &oracle_higher, &cfg_higher).map_err(CliError::runtime)?,
    ));
    report.push((
        format!("ypp_max_disagreement_hp{precision}_sweep_vs_dense"),
        max_disagreement_hp(&oracle, &oracle_dense, &cfg).map_err(CliError::runtime)?,
    ));

    if points > 0 {
        let xs = linspace(&curve, points);
        let double_curve = evaluate_curve(&curve, &double, &xs).map_err(CliError::runtime)?;
        let oracle_curve =
            hp_evaluate_curve(&curve, &oracle, &xs, &cfg).map_err(CliError::runtime)?;
        report.push((
            format!("curve{points}_max_disagreement_double_vs_hp{precision}"),
            max_disagreement_vs_hp(&double_curve, &oracle_curve, &cfg)
                .map_err(CliError::runtime)?,
        ));
        report.push((
            format!("curve{points}_mse_double_vs_hp{precision}"),
            mse_vs_hp(&double_curve, &oracle_curve, &cfg).map_err(CliError::runtime)?,
        ));
    }

    let mut out = sink(out)?;
    write_runtime(&mut out, "metric\tvalue\n")?;
    for (metric, value) in report {
        write_runtime(&mut out, &format!("{metric}\t{value:e}\n"))?;
    }
    out.flush().map_err(CliError::runtime)
}

fn percentile_of(values: &mut Vec<f64>, pct: f64) -> f64 {
    perf_model::percentile(values, pct).expect("non-empty by construction")
}

fn report_bench(path: &Path, out: Option<&Path>, n_list: &str) -> Result<(), CliError> {
    let text = std::fs::read_to_string(path).map_err(CliError::validation)?;
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| CliError::Validation(anyhow!("empty benchmark file")))?;
    let columns: Vec<&str> = header.split('\t').collect();
    let n_col = columns
        .iter()
        .position(|&c| c == "n")
        .ok_or_else(|| CliError::Validation(anyhow!("missing n column")))?;
    let alg_cols: Vec<(usize, &str)> = columns
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != "n" && c != "order")
        .map(|(i, &c)| (i, c))
        .collect();

    let wanted: Vec<usize> = n_list
        .split(',')
        .map(|txt| {
            txt.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Validation(anyhow!("bad n value {txt:?}")))
        })
        .collect::<Result<_, _>>()?;

    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (idx, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let row: Vec<f64> = fields
            .iter()
            .map(|f| {
                f.parse::<f64>().map_err(|_| {
                    CliError::Validation(anyhow!("line {}: not a number: {f:?}", idx + 2))
                })
            })
            .collect::<Result<_, _>>()?;
        rows.push(row);
    }

    let mut out = sink(out)?;
    let mut header_row = vec!["n".to_string(), "count".to_string()];
    for (_, label) in &alg_cols {
        for suffix in ["p16", "p50", "p84"] {
            header_row.push(format!("{label}_{suffix}"));
        }
    }
    write_runtime(&mut out, &(header_row.join("\t") + "\n"))?;

    for n in wanted {
        let matching: Vec<&Vec<f64>> = rows
            .iter()
            .filter(|row| row[n_col] as usize == n)
            .collect();
        if matching.is_empty() {
            eprintln!("warning: no trials at n = {n}; row skipped");
            continue;
        }
        let mut record = vec![n.to_string(), matching.len().to_string()];
        for &(col, _) in &alg_cols {
            let mut normalized: Vec<f64> =
                matching.iter().map(|row| row[col] / n as f64).collect();
            for pct in [16.0, 50.0, 84.0] {
                record.push(format!("{:.6}", percentile_of(&mut normalized, pct)));
            }
        }
        write_runtime(&mut out, &(record.join("\t") + "\n"))?;
    }
    out.flush().map_err(CliError::runtime)
}

fn report_posterior(path: &Path, out: Option<&Path>) -> Result<(), CliError> {
    let file = std::fs::File::open(path).map_err(CliError::validation)?;
    let samples = read_posterior(std::io::BufReader::new(file)).map_err(CliError::validation)?;
    let summary = summarize_posterior(&samples).map_err(CliError::validation)?;

    let mut out = sink(out)?;
    write_runtime(&mut out, "parameter\tp16\tp50\tp84\tdisplay\n")?;
    for (name, s) in PARAM_NAMES.iter().zip(summary.iter()) {
        write_runtime(
            &mut out,
            &format!("{name}\t{:e}\t{:e}\t{:e}\t{}\n", s.p16, s.p50, s.p84, s.display()),
        )?;
    }
    out.flush().map_err(CliError::runtime)
}

pub fn report(
    bench: Option<&Path>,
    posterior: Option<&Path>,
    out: Option<&Path>,
    n_list: &str,
) -> Result<(), CliError> {
    match (bench, posterior) {
        (Some(path), None) => report_bench(path, out, n_list),
        (None, Some(path)) => report_posterior(path, out),
        _ => Err(CliError::Validation(anyhow!(
            "exactly one of --bench or --posterior is required"
        ))),
    }
}

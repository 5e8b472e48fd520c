mod commands;
mod files;

use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

/// Errors are split by exit code: 2 for anything wrong with the invocation
/// or its inputs, 1 for failures while doing the work.
pub enum CliError {
    Validation(anyhow::Error),
    Runtime(anyhow::Error),
}

impl CliError {
    fn validation<E: Into<anyhow::Error>>(e: E) -> Self {
        Self::Validation(e.into())
    }

    fn runtime<E: Into<anyhow::Error>>(e: E) -> Self {
        Self::Runtime(e.into())
    }
}

#[derive(Parser)]
#[command(
    name = "cubespline",
    about = "Cubic spline interpolation, accuracy oracles, micro-benchmarks, and execution-time model fitting"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a curve's second derivatives and write x, y, y'' as TSV.
    Derivs {
        /// Two-column TSV curve file ('#' lines are comments).
        #[arg(long)]
        input: PathBuf,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Start boundary: "natural" or a slope (values above 0.99e30 mean natural).
        #[arg(long, default_value = "natural")]
        start_deriv: String,
        /// End boundary, same syntax.
        #[arg(long, default_value = "natural")]
        end_deriv: String,
    },
    /// Interpolate a curve at requested points and write x, y as TSV.
    Interp {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Three-column TSV from `derivs`; mutually exclusive with the boundary flags.
        #[arg(long, conflicts_with_all = ["start_deriv", "end_deriv"])]
        ypp: Option<PathBuf>,
        #[arg(long)]
        start_deriv: Option<String>,
        #[arg(long)]
        end_deriv: Option<String>,
        /// Evaluate at this many uniformly spaced points across the knot span.
        #[arg(long, conflicts_with = "at")]
        points: Option<usize>,
        /// Explicit comma-separated evaluation points (sorted ascending).
        #[arg(long)]
        at: Option<String>,
    },
    /// Run the randomized micro-benchmark and stream the timing TSV.
    Bench {
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 4)]
        n_min: usize,
        #[arg(long, default_value_t = 1_048_576)]
        n_max: usize,
        #[arg(long, default_value_t = 524_288)]
        schedule_len: usize,
        /// Pre-flight the timing environment and warn if the machine looks loaded.
        #[arg(long)]
        quiet_check: bool,
    },
    /// Fit the execution-time model to one benchmark column.
    Fit {
        /// Benchmark TSV produced by `bench`.
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Column to fit, e.g. newint__orig.
        #[arg(long)]
        algorithm: String,
        /// Keep only trials where the algorithm ran in this round (1-6).
        #[arg(long)]
        round: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 32)]
        walkers: usize,
        #[arg(long, default_value_t = 2000)]
        steps: usize,
        /// Steps discarded from the front of each chain; half the steps when omitted.
        #[arg(long)]
        burn_in: Option<usize>,
        #[arg(long, default_value_t = 32_000.0)]
        t_min: f64,
        #[arg(long, default_value_t = 350_000.0)]
        t_max: f64,
    },
    /// Compare the double-precision solve against the extended-precision oracle.
    Compare {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "natural")]
        start_deriv: String,
        #[arg(long, default_value = "natural")]
        end_deriv: String,
        /// Oracle working precision in decimal digits.
        #[arg(long, default_value_t = 30)]
        precision: u32,
        /// Sweep size for the interpolated-curve comparison.
        #[arg(long, default_value_t = 2048)]
        points: usize,
    },
    /// Summarize a benchmark TSV (per-n percentiles) or a posterior TSV
    /// (per-parameter percentiles) as a plot-ready table.
    Report {
        /// Benchmark TSV to aggregate.
        #[arg(long, conflicts_with = "posterior")]
        bench: Option<PathBuf>,
        /// Posterior TSV to summarize.
        #[arg(long)]
        posterior: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Comma-separated n values for the benchmark table.
        #[arg(long, default_value = "4,8,16,32,64,128")]
        n_list: String,
    },
}

/// Seed precedence: flag, then CUBESPLINE_SEED, then zero.
fn resolve_seed(flag: Option<u64>) -> Result<u64, CliError> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var("CUBESPLINE_SEED") {
        Ok(text) => text.parse().map_err(|_| {
            CliError::Validation(anyhow::anyhow!(
                "CUBESPLINE_SEED is not an unsigned integer: {text:?}"
            ))
        }),
        Err(_) => Ok(0),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Derivs {
            input,
            out,
            start_deriv,
            end_deriv,
        } => commands::derivs(&input, out.as_deref(), &start_deriv, &end_deriv),
        Command::Interp {
            input,
            out,
            ypp,
            start_deriv,
            end_deriv,
            points,
            at,
        } => commands::interp(
            &input,
            out.as_deref(),
            ypp.as_deref(),
            start_deriv.as_deref(),
            end_deriv.as_deref(),
            points,
            at.as_deref(),
        ),
        Command::Bench {
            out,
            seed,
            n_min,
            n_max,
            schedule_len,
            quiet_check,
        } => {
            let seed = resolve_seed(seed)?;
            commands::bench(out.as_deref(), seed, n_min, n_max, schedule_len, quiet_check)
        }
        Command::Fit {
            input,
            out,
            algorithm,
            round,
            seed,
            walkers,
            steps,
            burn_in,
            t_min,
            t_max,
        } => {
            let seed = resolve_seed(seed)?;
            commands::fit(
                &input,
                out.as_deref(),
                &algorithm,
                round,
                seed,
                walkers,
                steps,
                burn_in,
                (t_min, t_max),
            )
        }
        Command::Compare {
            input,
            out,
            start_deriv,
            end_deriv,
            precision,
            points,
        } => commands::compare(
            &input,
            out.as_deref(),
            &start_deriv,
            &end_deriv,
            precision,
            points,
        ),
        Command::Report {
            bench,
            posterior,
            out,
            n_list,
        } => commands::report(bench.as_deref(), posterior.as_deref(), out.as_deref(), &n_list),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Runtime(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(CliError::Validation(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

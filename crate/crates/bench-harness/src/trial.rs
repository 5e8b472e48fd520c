use std::io::Write;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;
use spline_core::{second_derivatives, BoundaryCondition, ControlCurve, SecondDerivatives, Segment};

use crate::error::HarnessError;
use crate::kernels::{
    newint_noinv, newint_orig, newint_vol, splint_one_div, splint_one_mul, Kernel, Variant,
    NOOP_ID,
};
use crate::order::{encode_order, LOOP_COUNT};
use crate::schedule::{build_n_schedule, gen_control_points, BenchConfig};

/// Column header of the benchmark TSV, fixed across runs.
pub const HEADER: &str =
    "n\tnoop\tsplint_one__div\tsplint_one__mul\tnewint__orig\tnewint__noinv\tnewint__vol\torder";

/// One trial's measurements: wall nanoseconds per timed loop plus the
/// base-8 permutation code recording the order they ran in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRecord {
    pub n: usize,
    pub noop_ns: u64,
    /// One entry per registered variant, in registry (column) order.
    pub alg_ns: Vec<u64>,
    pub order: u64,
}

/// One full sweep: `n` uniformly spaced points across the knot span, the
/// forward bracket scan, and the kernel under test. Nothing in the timed
/// region allocates; the accumulator keeps the work observable.
fn timed_sweep<F: Fn(f64, &Segment) -> f64>(
    curve: &ControlCurve,
    ypp: &SecondDerivatives,
    kernel: F,
) -> u64 {
    let knots = curve.knots();
    let values = curve.values();
    let ypp = ypp.values();
    let n = knots.len();
    let x0 = knots[0];
    let span = knots[n - 1] - x0;
    let denom = (n - 1) as f64;
    let last_seg = n - 2;

    let mut acc = 0.0f64;
    let mut j = 0usize;
    let start = Instant::now();
    for k in 0..n {
        let x = x0 + span * (k as f64 / denom);
        while j < last_seg && knots[j + 1] <= x {
            j += 1;
        }
        let seg = Segment {
            x0: knots[j],
            x1: knots[j + 1],
            y0: values[j],
            y1: values[j + 1],
            ypp0: ypp[j],
            ypp1: ypp[j + 1],
        };
        acc += kernel(x, &seg);
    }
    let ns = start.elapsed().as_nanos() as u64;
    std::hint::black_box(acc);
    ns
}

/// The overhead loop: identical point generation and bracketing, no
/// interpolation. Reading the bracketed knot keeps the scan live.
fn timed_noop_sweep(curve: &ControlCurve) -> u64 {
    let knots = curve.knots();
    let n = knots.len();
    let x0 = knots[0];
    let span = knots[n - 1] - x0;
    let denom = (n - 1) as f64;
    let last_seg = n - 2;

    let mut acc = 0.0f64;
    let mut j = 0usize;
    let start = Instant::now();
    for k in 0..n {
        let x = x0 + span * (k as f64 / denom);
        while j < last_seg && knots[j + 1] <= x {
            j += 1;
        }
        acc += x + knots[j];
    }
    let ns = start.elapsed().as_nanos() as u64;
    std::hint::black_box(acc);
    ns
}

fn run_timed(kernel: Kernel, curve: &ControlCurve, ypp: &SecondDerivatives) -> u64 {
    match kernel {
        Kernel::SplintOneDiv => timed_sweep(curve, ypp, splint_one_div),
        Kernel::SplintOneMul => timed_sweep(curve, ypp, splint_one_mul),
        Kernel::NewintOrig => timed_sweep(curve, ypp, newint_orig),
        Kernel::NewintNoinv => timed_sweep(curve, ypp, newint_noinv),
        Kernel::NewintVol => timed_sweep(curve, ypp, newint_vol),
    }
}

/// Runs one trial: generate a curve of `n` points, solve its natural
/// second derivatives once, then execute the six loops in a freshly
/// shuffled order, timing each.
pub fn run_trial<R: Rng>(
    n: usize,
    rng: &mut R,
    registry: &[Variant],
) -> Result<BenchRecord, HarnessError> {
    let curve = gen_control_points(n, rng)?;
    let ypp = second_derivatives(&curve, BoundaryCondition::Natural, BoundaryCondition::Natural)
        .expect("generated curve is valid");

    let mut order_ids: Vec<u8> = (0..LOOP_COUNT as u8).collect();
    order_ids.shuffle(rng);

    let mut noop_ns = 0u64;
    let mut alg_ns = vec![0u64; registry.len()];
    for &id in &order_ids {
        if id == NOOP_ID {
            noop_ns = timed_noop_sweep(&curve);
        } else {
            let slot = registry
                .iter()
                .position(|v| v.id == id)
                .expect("order id is registered");
            alg_ns[slot] = run_timed(registry[slot].kernel, &curve, &ypp);
        }
    }

    Ok(BenchRecord {
        n,
        noop_ns,
        alg_ns,
        order: encode_order(&order_ids)?,
    })
}

/// Runs the whole schedule, streaming one TSV row per trial so a crash
/// leaves a valid prefix behind. Returns the number of data rows written.
pub fn run_benchmark<W: Write>(
    cfg: &BenchConfig,
    registry: &[Variant],
    out: &mut W,
) -> Result<u64, HarnessError> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let schedule = build_n_schedule(cfg, &mut rng)?;

    let mut rows_written = 0u64;
    let mut write_all = |line: &str, rows_written: u64| {
        out.write_all(line.as_bytes())
            .and_then(|_| out.flush())
            .map_err(|source| HarnessError::Io {
                rows_written,
                source,
            })
    };

    write_all(HEADER, 0)?;
    write_all("\n", 0)?;
    for n in schedule {
        let record = run_trial(n, &mut rng, registry)?;
        let mut line = format!("{}\t{}", record.n, record.noop_ns);
        for ns in &record.alg_ns {
            line.push_str(&format!("\t{ns}"));
        }
        line.push_str(&format!("\t{}\n", record.order));
        write_all(&line, rows_written)?;
        rows_written += 1;
    }
    Ok(rows_written)
}

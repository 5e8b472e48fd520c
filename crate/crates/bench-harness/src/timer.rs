use std::time::Instant;

/// The harness wants a clock at least this fine.
pub const TIMER_RESOLUTION_WARN_NS: u64 = 100;

/// Smallest positive delta observed between back-to-back monotonic clock
/// reads; an estimate of the clock's usable resolution.
pub fn timer_resolution_ns() -> u64 {
    let mut best = u64::MAX;
    for _ in 0..4096 {
        let a = Instant::now();
        let b = Instant::now();
        let dt = (b - a).as_nanos() as u64;
        if dt > 0 && dt < best {
            best = dt;
        }
    }
    best
}

/// Pre-flight summary of the timing environment.
#[derive(Debug, Clone, Copy)]
pub struct QuietCheck {
    /// Estimated clock resolution.
    pub timer_resolution_ns: u64,
    /// Median wall time of a fixed spin workload.
    pub workload_median_ns: u64,
    /// Ratio of the worst observed workload time to the best.
    pub jitter_ratio: f64,
}

impl QuietCheck {
    /// A heavily loaded machine shows large spreads across identical runs.
    pub fn looks_loaded(&self) -> bool {
        self.jitter_ratio > 4.0
    }
}

/// Runs a short fixed workload repeatedly and measures the spread of its
/// wall times. Loud neighbours show up as jitter.
pub fn quiet_check() -> QuietCheck {
    const REPS: usize = 64;
    let mut times: Vec<u64> = (0..REPS)
        .map(|_| {
            let start = Instant::now();
            let mut acc = 0.0f64;
            for i in 0..20_000 {
                acc += (i as f64).sqrt();
            }
            std::hint::black_box(acc);
            start.elapsed().as_nanos() as u64
        })
        .collect();
    times.sort_unstable();
    QuietCheck {
        timer_resolution_ns: timer_resolution_ns(),
        workload_median_ns: times[REPS / 2],
        jitter_ratio: times[REPS - 1] as f64 / times[0].max(1) as f64,
    }
}

//! Randomized micro-benchmark harness for the interpolation variants.
//!
//! One benchmark run walks a shuffled schedule of curve sizes biased toward
//! small `n`, generates a random curve per entry, and times one sweep of `n`
//! uniformly spaced evaluations per registered loop, in a shuffled order
//! that is recorded as a base-8 permutation code. Rows stream out as TSV.

mod error;
mod kernels;
mod order;
mod schedule;
mod timer;
mod trial;

pub use error::HarnessError;
pub use kernels::{default_registry, Kernel, Variant, NOOP_ID};
pub use order::{decode_order, encode_order, LOOP_COUNT};
pub use schedule::{build_n_schedule, gen_control_points, BenchConfig};
pub use timer::{timer_resolution_ns, quiet_check, QuietCheck, TIMER_RESOLUTION_WARN_NS};
pub use trial::{run_benchmark, run_trial, BenchRecord, HEADER};

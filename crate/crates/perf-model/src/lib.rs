//! Execution-time model for the interpolation benchmarks.
//!
//! Normalized per-point times are modeled as a Gamma-distributed noise
//! offset above a deterministic baseline: two linear regimes (last-level
//! cache and main memory) bridged by a complementary Weibull CDF weight. The
//! Gamma noise is parameterized by its mode and a standard deviation that
//! shrinks as `1/n`. The posterior over the nine model parameters is drawn
//! with an affine-invariant ensemble sampler.

mod error;
mod gamma;
mod io;
mod model;
mod params;
mod sampler;
mod simulate;
mod summary;

pub use error::ModelError;
pub use gamma::{gamma_from_mode_sigma, GammaParams};
pub use io::{read_bench_column, read_posterior, write_posterior};
pub use model::{baseline, log_likelihood, log_posterior, noise_sigma, Prior, DEFAULT_T_BOUNDS};
pub use params::{ModelParams, PARAM_COUNT, PARAM_NAMES};
pub use sampler::{fit_posterior, FitConfig, FitDiagnostics, PosteriorSamples, MIN_POSTERIOR_DRAWS};
pub use simulate::draw_dataset;
pub use summary::{credible_interval, percentile, summarize_posterior, ParamSummary};

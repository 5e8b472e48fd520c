use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::ModelError;
use crate::model::{log_posterior, Prior};
use crate::params::{ModelParams, PARAM_COUNT};

/// Fewest post-burn-in draws a fit is expected to deliver.
pub const MIN_POSTERIOR_DRAWS: usize = 4096;

const STRETCH_SCALE: f64 = 2.0;
const MAX_INIT_ATTEMPTS: usize = 100_000;

/// Ensemble-sampler configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitConfig {
    pub walkers: usize,
    pub steps: usize,
    /// Steps discarded from the front of every chain.
    pub burn_in: usize,
    pub seed: u64,
    pub t_bounds: (f64, f64),
}

impl FitConfig {
    /// 32 walkers for 2000 steps, first half burned, matches the published
    /// fit scale.
    pub fn new(seed: u64) -> Self {
        Self {
            walkers: 32,
            steps: 2000,
            burn_in: 1000,
            seed,
            t_bounds: crate::model::DEFAULT_T_BOUNDS,
        }
    }

    fn validate(&self) -> Result<(), ModelError> {
        if self.walkers % 2 != 0 || self.walkers < 2 * PARAM_COUNT + 2 {
            return Err(ModelError::InvalidConfig {
                reason: format!(
                    "walkers must be even and at least {}, got {}",
                    2 * PARAM_COUNT + 2,
                    self.walkers
                ),
            });
        }
        if self.steps == 0 || self.burn_in >= self.steps {
            return Err(ModelError::InvalidConfig {
                reason: format!(
                    "need burn_in < steps, got burn_in {} steps {}",
                    self.burn_in, self.steps
                ),
            });
        }
        if !(self.t_bounds.0 > 0.0 && self.t_bounds.1 > self.t_bounds.0) {
            return Err(ModelError::InvalidConfig {
                reason: format!("bad t bounds {:?}", self.t_bounds),
            });
        }
        Ok(())
    }
}

/// Post-burn-in parameter draws.
#[derive(Debug, Clone)]
pub struct PosteriorSamples {
    pub draws: Vec<ModelParams>,
}

/// Fit byproducts worth inspecting.
#[derive(Debug, Clone, Copy)]
pub struct FitDiagnostics {
    /// Accepted proposals over all walker-steps; healthy chains sit well
    /// inside [0.1, 0.9].
    pub acceptance_fraction: f64,
}

impl FitDiagnostics {
    pub fn acceptance_is_healthy(&self) -> bool {
        (0.1..=0.9).contains(&self.acceptance_fraction)
    }
}

/// Log-uniform draw over [lo, hi].
fn log_uniform<R: Rng>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    (rng.gen_range(lo.ln()..=hi.ln())).exp()
}

fn draw_initial<R: Rng>(rng: &mut R, t_bounds: (f64, f64)) -> ModelParams {
    ModelParams {
        m_l3: log_uniform(rng, 0.05, 50.0),
        m_mm: log_uniform(rng, 0.05, 50.0),
        b_l3: log_uniform(rng, 1e-5, 10.0),
        transition: log_uniform(rng, t_bounds.0, t_bounds.1),
        weibull_scale: log_uniform(rng, 1e-8, 1e-2),
        weibull_power: log_uniform(rng, 0.05, 10.0),
        mode_offset: log_uniform(rng, 1e-3, 10.0),
        sigma0: log_uniform(rng, 1.0, 5e3),
        sigma_inf: log_uniform(rng, 1e-4, 1.0),
    }
}

/// Draws the posterior over the nine model parameters with the
/// affine-invariant stretch move.
///
/// Walkers start at log-uniform positions inside the prior box, redrawn
/// until both prior and likelihood are finite. Proposal and acceptance
/// randomness is a single seeded stream, so results are reproducible for a
/// fixed seed and walker count; only the posterior evaluations fan out
/// across threads.
pub fn fit_posterior(
    data: &[(f64, f64)],
    cfg: &FitConfig,
) -> Result<(PosteriorSamples, FitDiagnostics), ModelError> {
    cfg.validate()?;
    if data.is_empty() {
        return Err(ModelError::EmptyData);
    }
    let prior = Prior::new(cfg.t_bounds.0, cfg.t_bounds.1);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    let mut positions: Vec<ModelParams> = Vec::with_capacity(cfg.walkers);
    let mut last_violation: &'static str = "prior support";
    let mut attempts = 0usize;
    while positions.len() < cfg.walkers {
        if attempts >= MAX_INIT_ATTEMPTS {
            return Err(ModelError::Initialization {
                attempts,
                violation: last_violation,
            });
        }
        attempts += 1;
        let candidate = draw_initial(&mut rng, cfg.t_bounds);
        if let Some(violation) = prior.violation(&candidate) {
            last_violation = violation;
            continue;
        }
        if !log_posterior(&prior, &candidate, data).is_finite() {
            last_violation = "zero-probability start (some data at or below the baseline)";
            continue;
        }
        positions.push(candidate);
    }
    let mut log_probs: Vec<f64> = positions
        .iter()
        .map(|p| log_posterior(&prior, p, data))
        .collect();

    let half = cfg.walkers / 2;
    let mut draws = Vec::with_capacity(cfg.walkers * (cfg.steps - cfg.burn_in));
    let mut accepted = 0u64;

    for step in 0..cfg.steps {
        for side in 0..2 {
            let (lo, hi) = if side == 0 { (0, half) } else { (half, cfg.walkers) };
            let (other_lo, other_hi) = if side == 0 { (half, cfg.walkers) } else { (0, half) };

            // Sequential RNG: proposals first, then parallel evaluation,
            // then sequential accept/reject. The draw order is fixed no
            // matter how the evaluations are scheduled.
            let mut proposals = Vec::with_capacity(half);
            for walker in lo..hi {
                let u: f64 = rng.gen();
                let z = ((STRETCH_SCALE - 1.0) * u + 1.0).powi(2) / STRETCH_SCALE;
                let partner = rng.gen_range(other_lo..other_hi);
                let this = positions[walker].to_array();
                let other = positions[partner].to_array();
                let mut q = [0.0; PARAM_COUNT];
                for i in 0..PARAM_COUNT {
                    q[i] = other[i] + z * (this[i] - other[i]);
                }
                proposals.push((ModelParams::from_array(q), z));
            }

            let new_log_probs: Vec<f64> = proposals
                .par_iter()
                .map(|(q, _)| log_posterior(&prior, q, data))
                .collect();

            for (offset, walker) in (lo..hi).enumerate() {
                let (q, z) = proposals[offset];
                let ln_accept =
                    (PARAM_COUNT as f64 - 1.0) * z.ln() + new_log_probs[offset] - log_probs[walker];
                let threshold: f64 = rng.gen::<f64>().ln();
                if ln_accept > threshold {
                    positions[walker] = q;
                    log_probs[walker] = new_log_probs[offset];
                    accepted += 1;
                }
            }
        }
        if step >= cfg.burn_in {
            draws.extend_from_slice(&positions);
        }
    }

    let diagnostics = FitDiagnostics {
        acceptance_fraction: accepted as f64 / (cfg.walkers * cfg.steps) as f64,
    };
    if !diagnostics.acceptance_is_healthy() {
        eprintln!(
            "warning: acceptance fraction {:.3} outside [0.1, 0.9]; chains may be unhealthy",
            diagnostics.acceptance_fraction
        );
    }
    Ok((PosteriorSamples { draws }, diagnostics))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simulate::draw_dataset;

    #[test]
    fn rejects_bad_configs() {
        let data = vec![(100.0, 700.0)];
        let mut cfg = FitConfig::new(0);
        cfg.walkers = 7;
        assert!(fit_posterior(&data, &cfg).is_err());
        let mut cfg = FitConfig::new(0);
        cfg.burn_in = cfg.steps;
        assert!(fit_posterior(&data, &cfg).is_err());
        let cfg = FitConfig::new(0);
        assert!(matches!(
            fit_posterior(&[], &cfg).unwrap_err(),
            ModelError::EmptyData
        ));
    }

    #[test]
    fn impossible_data_fails_initialization() {
        // Normalized times of zero sit below every admissible baseline.
        let data = vec![(1000.0, 0.0); 8];
        let cfg = FitConfig {
            walkers: 20,
            steps: 10,
            burn_in: 5,
            seed: 1,
            t_bounds: crate::model::DEFAULT_T_BOUNDS,
        };
        match fit_posterior(&data, &cfg).unwrap_err() {
            ModelError::Initialization { violation, .. } => {
                assert!(violation.contains("baseline"), "got {violation}");
            }
            other => panic!("expected initialization error, got {other}"),
        }
    }

    #[test]
    fn small_fit_is_deterministic_and_in_support() {
        let truth = ModelParams::newint_orig_medians();
        let data = draw_dataset(&truth, 100.0, 500_000.0, 400, 7);
        let cfg = FitConfig {
            walkers: 20,
            steps: 60,
            burn_in: 30,
            seed: 5,
            t_bounds: crate::model::DEFAULT_T_BOUNDS,
        };
        let (a, diag_a) = fit_posterior(&data, &cfg).unwrap();
        let (b, _) = fit_posterior(&data, &cfg).unwrap();
        assert_eq!(a.draws.len(), 20 * 30);
        assert_eq!(a.draws.len(), b.draws.len());
        for (x, y) in a.draws.iter().zip(&b.draws) {
            assert_eq!(x.to_array(), y.to_array());
        }
        assert!(diag_a.acceptance_fraction > 0.0);

        let prior = Prior::default();
        assert!(a
            .draws
            .iter()
            .all(|p| prior.log_density(p) > f64::NEG_INFINITY));
    }
}

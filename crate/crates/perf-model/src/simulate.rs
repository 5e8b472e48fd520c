use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Gamma};

use crate::gamma::gamma_from_mode_sigma;
use crate::model::{baseline, noise_sigma};
use crate::params::ModelParams;

/// Draws `(n, time_ns)` pairs from the model itself: `n` log-uniform over
/// `[n_lo, n_hi]` rounded to whole points, normalized time equal to the
/// baseline plus a Gamma noise draw. Used for posterior-recovery checks.
pub fn draw_dataset(
    truth: &ModelParams,
    n_lo: f64,
    n_hi: f64,
    count: usize,
    seed: u64,
) -> Vec<(f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(n_lo.ln()..=n_hi.ln()).exp().round().max(1.0);
            let sigma = noise_sigma(truth, n);
            let g = gamma_from_mode_sigma(truth.mode_offset, sigma)
                .expect("valid params generate valid gamma");
            let noise = Gamma::new(g.kappa, g.theta)
                .expect("positive shape and scale")
                .sample(&mut rng);
            let normed = baseline(truth, n) + noise;
            (n, normed * n)
        })
        .collect()
}

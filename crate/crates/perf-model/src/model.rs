use crate::gamma::{gamma_from_mode_sigma, gamma_ln_pdf};
use crate::params::ModelParams;

/// Transition-onset bounds used by the published fit; other hardware needs
/// other bounds.
pub const DEFAULT_T_BOUNDS: (f64, f64) = (32_000.0, 350_000.0);

/// The normalized (per-point) baseline: the cache-regime line
/// `m_l3 + b_l3 / n` bridged to the main-memory slope `m_mm` by a
/// complementary Weibull CDF weight once `n` passes the transition onset.
///
/// The weight is clipped to [0, 1] and a non-finite intermediate falls back
/// to the cache regime, so the function is total over valid parameters.
pub fn baseline(p: &ModelParams, n: f64) -> f64 {
    let cache_regime = p.m_l3 + p.b_l3 / n;
    if n <= p.transition {
        return cache_regime;
    }
    let w = (-((n - p.transition) * p.weibull_scale).powf(p.weibull_power)).exp();
    let w = if w.is_nan() { 1.0 } else { w.clamp(0.0, 1.0) };
    cache_regime * w + p.m_mm * (1.0 - w)
}

/// Normalized noise standard deviation: `sigma_inf + sigma0 / n`.
pub fn noise_sigma(p: &ModelParams, n: f64) -> f64 {
    p.sigma_inf + p.sigma0 / n
}

/// The model prior: hard support constraints encoding what is known about
/// the machine (the cache regime cannot be slower than main memory, noise
/// shrinks with `n`, the transition lives in a configured window), plus a
/// weakly-informative Cauchy-like penalty on the two slopes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Prior {
    pub t_min: f64,
    pub t_max: f64,
}

impl Default for Prior {
    fn default() -> Self {
        Self {
            t_min: DEFAULT_T_BOUNDS.0,
            t_max: DEFAULT_T_BOUNDS.1,
        }
    }
}

impl Prior {
    pub fn new(t_min: f64, t_max: f64) -> Self {
        Self { t_min, t_max }
    }

    /// Names the first violated support constraint, if any.
    pub fn violation(&self, p: &ModelParams) -> Option<&'static str> {
        if p.to_array().iter().any(|v| !v.is_finite()) {
            return Some("non-finite parameter");
        }
        if p.m_l3 <= 0.0 || p.m_mm <= 0.0 {
            return Some("slopes must be positive");
        }
        if p.m_l3 > p.m_mm {
            return Some("cache regime must not be slower than main memory");
        }
        if p.b_l3 < 0.0 {
            return Some("intercept must be non-negative");
        }
        if p.transition < self.t_min || p.transition > self.t_max {
            return Some("transition outside configured bounds");
        }
        if p.weibull_scale <= 0.0 || p.weibull_scale > 1e-2 {
            return Some("weibull scale outside (0, 1e-2]");
        }
        if p.weibull_power <= 0.0 || p.weibull_power > 1000.0 {
            return Some("weibull power outside (0, 1000]");
        }
        if p.mode_offset <= 0.0 || p.sigma0 <= 0.0 || p.sigma_inf <= 0.0 {
            return Some("noise parameters must be positive");
        }
        if p.sigma_inf > p.sigma0 {
            return Some("noise must decrease with n");
        }
        None
    }

    /// Log prior density, `-inf` outside the support.
    pub fn log_density(&self, p: &ModelParams) -> f64 {
        if self.violation(p).is_some() {
            return f64::NEG_INFINITY;
        }
        -1.5 * ((p.m_l3 * p.m_l3).ln_1p() + (p.m_mm * p.m_mm).ln_1p())
    }
}

/// Sum of log Gamma densities of the normalized times above the baseline.
/// Any point at or below the baseline has zero likelihood, driving the sum
/// to `-inf`.
pub fn log_likelihood(p: &ModelParams, data: &[(f64, f64)]) -> f64 {
    let mut total = 0.0;
    for &(n, time_ns) in data {
        let normed = time_ns / n;
        let excess = normed - baseline(p, n);
        if excess <= 0.0 {
            return f64::NEG_INFINITY;
        }
        let sigma = noise_sigma(p, n);
        let g = match gamma_from_mode_sigma(p.mode_offset, sigma) {
            Ok(g) => g,
            Err(_) => return f64::NEG_INFINITY,
        };
        total += gamma_ln_pdf(excess, g.kappa, g.theta);
    }
    total
}

/// Log posterior up to a constant; skips the likelihood outside the prior
/// support.
pub fn log_posterior(prior: &Prior, p: &ModelParams, data: &[(f64, f64)]) -> f64 {
    let lp = prior.log_density(p);
    if lp == f64::NEG_INFINITY {
        return f64::NEG_INFINITY;
    }
    lp + log_likelihood(p, data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::gamma_from_mode_sigma;

    fn medians() -> ModelParams {
        ModelParams::newint_orig_medians()
    }

    #[test]
    fn baseline_below_transition_is_the_cache_line() {
        let p = medians();
        let n = 100_000.0;
        assert!(n < p.transition);
        let want = p.m_l3 + p.b_l3 / n; // 5.28 + 3.05e-8
        assert_eq!(baseline(&p, n), want);
        assert!((baseline(&p, n) - 5.28).abs() < 1e-6);
    }

    #[test]
    fn baseline_far_regime_approaches_main_memory_slope() {
        let mut p = medians();
        p.weibull_power = 1.0;
        let n = p.transition + 1e3 / p.weibull_scale; // (n - t) s = 1000
        assert!((baseline(&p, n) - p.m_mm).abs() <= 1e-12);
    }

    #[test]
    fn baseline_is_continuous_at_the_transition() {
        let p = medians();
        let below = baseline(&p, p.transition);
        let above = baseline(&p, p.transition * (1.0 + 1e-12));
        assert!((below - above).abs() <= 1e-6, "{below} vs {above}");
    }

    #[test]
    fn baseline_bridge_is_monotone_without_intercept() {
        let mut p = medians();
        p.b_l3 = 0.0;
        let mut prev = baseline(&p, p.transition);
        let mut n = p.transition;
        for _ in 0..200 {
            n *= 1.05;
            let next = baseline(&p, n);
            assert!(next >= prev - 1e-12, "baseline decreased at n = {n}");
            prev = next;
        }
    }

    #[test]
    fn noise_sigma_examples() {
        let p = medians();
        // sigma0 = 590, sigma_inf = 0.0768 at n = 10,000.
        assert!((noise_sigma(&p, 1e4) - 0.1358).abs() < 1e-10);
        assert!((noise_sigma(&p, 1e12) - p.sigma_inf).abs() < 1e-6);
        assert_eq!(noise_sigma(&p, 1.0), p.sigma_inf + p.sigma0);
    }

    #[test]
    fn prior_rejects_each_constraint_without_panicking() {
        let prior = Prior::default();
        let base = medians();
        assert!(prior.log_density(&base).is_finite());

        let mut p = base;
        p.m_l3 = p.m_mm + 1.0;
        assert_eq!(prior.log_density(&p), f64::NEG_INFINITY);

        let mut p = base;
        p.sigma_inf = p.sigma0 + 1.0;
        assert_eq!(prior.log_density(&p), f64::NEG_INFINITY);

        let mut p = base;
        p.transition = 1.0;
        assert_eq!(prior.log_density(&p), f64::NEG_INFINITY);

        let mut p = base;
        p.b_l3 = -1e-9;
        assert_eq!(prior.log_density(&p), f64::NEG_INFINITY);

        let mut p = base;
        p.weibull_scale = 0.5;
        assert_eq!(prior.log_density(&p), f64::NEG_INFINITY);

        let mut p = base;
        p.weibull_power = -1.0;
        assert_eq!(prior.log_density(&p), f64::NEG_INFINITY);

        let mut p = base;
        p.mode_offset = f64::NAN;
        assert_eq!(prior.log_density(&p), f64::NEG_INFINITY);
    }

    #[test]
    fn prior_density_value_at_unit_slopes() {
        let mut p = medians();
        p.m_l3 = 1.0;
        p.m_mm = 1.0;
        let want = -3.0 * std::f64::consts::LN_2; // -1.5 * (2 ln 2)
        assert!((Prior::default().log_density(&p) - want).abs() < 1e-12);
    }

    #[test]
    fn likelihood_rejects_points_at_or_below_the_baseline() {
        let p = medians();
        let n = 50_000.0;
        let floor = baseline(&p, n);
        let good = vec![(n, (floor + p.mode_offset) * n)];
        assert!(log_likelihood(&p, &good).is_finite());

        let at = vec![(n, floor * n)];
        assert_eq!(log_likelihood(&p, &at), f64::NEG_INFINITY);

        let below = vec![(n, (floor - 0.1) * n)];
        assert_eq!(log_likelihood(&p, &below), f64::NEG_INFINITY);

        let mixed = vec![good[0], at[0]];
        assert_eq!(log_likelihood(&p, &mixed), f64::NEG_INFINITY);
    }

    #[test]
    fn likelihood_at_the_mode_matches_the_density() {
        let p = medians();
        let n = 200_000.0;
        let sigma = noise_sigma(&p, n);
        let g = gamma_from_mode_sigma(p.mode_offset, sigma).unwrap();
        let mode_point = (g.kappa - 1.0) * g.theta;
        let time = (baseline(&p, n) + mode_point) * n;
        let want = crate::gamma::gamma_ln_pdf(mode_point, g.kappa, g.theta);
        let got = log_likelihood(&p, &[(n, time)]);
        assert!((got - want).abs() < 1e-9, "{got} vs {want}");
    }
}

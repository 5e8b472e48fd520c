use statrs::distribution::{ContinuousCDF, Gamma};

use crate::error::ModelError;
use crate::gamma::gamma_from_mode_sigma;
use crate::model::{baseline, noise_sigma};
use crate::params::{ModelParams, PARAM_COUNT};
use crate::sampler::PosteriorSamples;

/// Percentile with linear interpolation between order statistics, matching
/// the numpy convention.
pub fn percentile(values: &[f64], pct: f64) -> Result<f64, ModelError> {
    if values.is_empty() {
        return Err(ModelError::EmptySamples);
    }
    if !(0.0..=100.0).contains(&pct) {
        return Err(ModelError::Domain {
            reason: format!("percentile must be in [0, 100], got {pct}"),
        });
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let pos = pct / 100.0 * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    let frac = pos - lo as f64;
    Ok(sorted[lo] + frac * (sorted[hi] - sorted[lo]))
}

/// 16th/50th/84th percentiles of one parameter's marginal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamSummary {
    pub p16: f64,
    pub p50: f64,
    pub p84: f64,
}

impl ParamSummary {
    /// Renders the customary `median +upper/-lower` form.
    pub fn display(&self) -> String {
        format!(
            "{:.2e} +{:.2e} -{:.2e}",
            self.p50,
            self.p84 - self.p50,
            self.p50 - self.p16
        )
    }
}

/// Componentwise 16/50/84 percentiles over the posterior draws.
pub fn summarize_posterior(
    samples: &PosteriorSamples,
) -> Result<[ParamSummary; PARAM_COUNT], ModelError> {
    if samples.draws.is_empty() {
        return Err(ModelError::EmptySamples);
    }
    let mut out = [ParamSummary {
        p16: 0.0,
        p50: 0.0,
        p84: 0.0,
    }; PARAM_COUNT];
    let mut column = Vec::with_capacity(samples.draws.len());
    for (i, slot) in out.iter_mut().enumerate() {
        column.clear();
        column.extend(samples.draws.iter().map(|p| p.to_array()[i]));
        *slot = ParamSummary {
            p16: percentile(&column, 16.0)?,
            p50: percentile(&column, 50.0)?,
            p84: percentile(&column, 84.0)?,
        };
    }
    Ok(out)
}

/// Central credible interval of the modeled normalized time at `n`:
/// the baseline shifted by the central `fraction` mass of the Gamma noise.
pub fn credible_interval(
    p: &ModelParams,
    n: f64,
    fraction: f64,
) -> Result<(f64, f64), ModelError> {
    if !(fraction > 0.0 && fraction < 1.0) {
        return Err(ModelError::Domain {
            reason: format!("fraction must be in (0, 1), got {fraction}"),
        });
    }
    let g = gamma_from_mode_sigma(p.mode_offset, noise_sigma(p, n))?;
    let dist = Gamma::new(g.kappa, 1.0 / g.theta).map_err(|e| ModelError::Domain {
        reason: e.to_string(),
    })?;
    let tail = (1.0 - fraction) / 2.0;
    let floor = baseline(p, n);
    Ok((
        floor + dist.inverse_cdf(tail),
        floor + dist.inverse_cdf(1.0 - tail),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn percentile_interpolates_linearly() {
        let values: Vec<f64> = (1..=100).map(f64::from).collect();
        assert_eq!(percentile(&values, 50.0).unwrap(), 50.5);
        assert_eq!(percentile(&values, 0.0).unwrap(), 1.0);
        assert_eq!(percentile(&values, 100.0).unwrap(), 100.0);
        assert!(percentile(&[], 50.0).is_err());
        assert!(percentile(&[1.0], 101.0).is_err());
    }

    #[test]
    fn constant_samples_collapse_the_summary() {
        let p = ModelParams::newint_orig_medians();
        let samples = PosteriorSamples {
            draws: vec![p; 10],
        };
        for summary in summarize_posterior(&samples).unwrap() {
            assert_eq!(summary.p16, summary.p50);
            assert_eq!(summary.p50, summary.p84);
        }
    }

    #[test]
    fn interval_contains_the_mode_and_scales_with_sigma() {
        let p = ModelParams::newint_orig_medians();
        let n = 150_000.0;
        let (lo, hi) = credible_interval(&p, n, 2.0 / 3.0).unwrap();
        let mode_point = baseline(&p, n) + p.mode_offset;
        assert!(lo < mode_point && mode_point < hi, "{lo} {mode_point} {hi}");

        let mut wider = p;
        wider.sigma0 *= 2.0;
        wider.sigma_inf *= 2.0;
        let (lo2, hi2) = credible_interval(&wider, n, 2.0 / 3.0).unwrap();
        assert!(hi2 - lo2 > hi - lo);
    }

    #[test]
    fn interval_width_shrinks_with_fraction() {
        let p = ModelParams::newint_orig_medians();
        let n = 1e4;
        let (lo1, hi1) = credible_interval(&p, n, 0.5).unwrap();
        let (lo2, hi2) = credible_interval(&p, n, 0.05).unwrap();
        assert!(hi2 - lo2 < hi1 - lo1);
        assert!(credible_interval(&p, n, 0.0).is_err());
        assert!(credible_interval(&p, n, 1.0).is_err());
    }
}

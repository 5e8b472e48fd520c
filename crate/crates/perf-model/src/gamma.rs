use statrs::function::gamma::ln_gamma;

use crate::error::ModelError;

/// Shape/scale parameters of a Gamma distribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaParams {
    pub kappa: f64,
    pub theta: f64,
}

/// Converts a mode and standard deviation into Gamma shape/scale.
///
/// Inverts `Mo = (kappa - 1) theta` and `sigma = sqrt(kappa) theta`:
/// `theta = (sqrt(Mo^2 + 4 sigma^2) - Mo) / 2`, computed as
/// `2 sigma^2 / (Mo + root)` to dodge the cancellation, and
/// `kappa = (sigma / theta)^2`.
pub fn gamma_from_mode_sigma(mode: f64, sigma: f64) -> Result<GammaParams, ModelError> {
    if !(sigma > 0.0) {
        return Err(ModelError::Domain {
            reason: format!("sigma must be positive, got {sigma}"),
        });
    }
    if !(mode >= 0.0) {
        return Err(ModelError::Domain {
            reason: format!("mode must be non-negative, got {mode}"),
        });
    }
    let root = (mode * mode + 4.0 * sigma * sigma).sqrt();
    let theta = 2.0 * sigma * sigma / (mode + root);
    let ratio = sigma / theta;
    Ok(GammaParams {
        kappa: ratio * ratio,
        theta,
    })
}

/// Log density of Gamma(kappa, theta) at `x` above the location, i.e. the
/// argument is already `value - loc`. Non-positive arguments are outside the
/// support.
#[inline]
pub(crate) fn gamma_ln_pdf(x: f64, kappa: f64, theta: f64) -> f64 {
    if x <= 0.0 {
        return f64::NEG_INFINITY;
    }
    (kappa - 1.0) * x.ln() - x / theta - ln_gamma(kappa) - kappa * theta.ln()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn zero_mode_is_exponential() {
        let g = gamma_from_mode_sigma(0.0, 1.0).unwrap();
        assert_eq!(g.kappa, 1.0);
        assert_eq!(g.theta, 1.0);
    }

    #[test]
    fn perfect_square_radical() {
        // root = sqrt(9 + 16) = 5 exactly.
        let g = gamma_from_mode_sigma(3.0, 2.0).unwrap();
        assert_eq!(g.kappa, 4.0);
        assert_eq!(g.theta, 1.0);
    }

    #[test]
    fn unit_round_trip() {
        let g = gamma_from_mode_sigma(1.0, 1.0).unwrap();
        assert!(((g.kappa - 1.0) * g.theta - 1.0).abs() <= 1e-12);
        assert!((g.kappa.sqrt() * g.theta - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn rejects_bad_domains() {
        assert!(gamma_from_mode_sigma(1.0, 0.0).is_err());
        assert!(gamma_from_mode_sigma(1.0, -1.0).is_err());
        assert!(gamma_from_mode_sigma(-0.5, 1.0).is_err());
    }

    #[test]
    fn ln_pdf_matches_statrs() {
        use statrs::distribution::{Continuous, Gamma};
        let g = gamma_from_mode_sigma(2.0, 0.7).unwrap();
        let reference = Gamma::new(g.kappa, 1.0 / g.theta).unwrap();
        for x in [0.1, 1.0, 2.0, 5.0] {
            let want = reference.ln_pdf(x);
            let got = gamma_ln_pdf(x, g.kappa, g.theta);
            assert!((got - want).abs() < 1e-10, "x={x}: {got} vs {want}");
        }
        assert_eq!(gamma_ln_pdf(0.0, g.kappa, g.theta), f64::NEG_INFINITY);
        assert_eq!(gamma_ln_pdf(-1.0, g.kappa, g.theta), f64::NEG_INFINITY);
    }

    proptest! {
        #[test]
        fn mode_sigma_round_trip(mode in 0.0..=10.0f64, sigma in 1e-9..=10.0f64) {
            let g = gamma_from_mode_sigma(mode, sigma).unwrap();
            prop_assert!(g.kappa >= 1.0);
            prop_assert!(g.theta > 0.0);
            let mode_back = (g.kappa - 1.0) * g.theta;
            let sigma_back = g.kappa.sqrt() * g.theta;
            prop_assert!((mode_back - mode).abs() <= 1e-12 * mode.abs().max(1.0),
                "mode {mode} -> {mode_back}");
            prop_assert!((sigma_back - sigma).abs() <= 1e-12 * sigma.abs().max(1.0),
                "sigma {sigma} -> {sigma_back}");
        }
    }
}

use crate::error::OracleError;
use crate::hp::{HpNumber, PrecisionConfig};

fn check_lengths(left: usize, right: usize) -> Result<(), OracleError> {
    if left != right {
        return Err(OracleError::ShapeMismatch { left, right });
    }
    Ok(())
}

/// Largest componentwise absolute difference.
pub fn max_disagreement(a: &[f64], b: &[f64]) -> Result<f64, OracleError> {
    check_lengths(a.len(), b.len())?;
    Ok(a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max))
}

/// Mean of squared componentwise differences.
pub fn mse(a: &[f64], b: &[f64]) -> Result<f64, OracleError> {
    check_lengths(a.len(), b.len())?;
    if a.is_empty() {
        return Err(OracleError::Empty);
    }
    let sum: f64 = a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum();
    Ok(sum / a.len() as f64)
}

/// Largest |double - oracle|, with the differences taken in extended
/// precision so the comparison is not polluted by rounding the oracle to
/// `f64` first.
pub fn max_disagreement_vs_hp(
    a: &[f64],
    b: &[HpNumber],
    cfg: &PrecisionConfig,
) -> Result<f64, OracleError> {
    check_lengths(a.len(), b.len())?;
    let mut max = HpNumber::from_f64(0.0, cfg);
    for (&x, y) in a.iter().zip(b) {
        let delta = HpNumber::from_f64(x, cfg).sub(y).abs();
        if delta.abs_gt(&max) {
            max = delta;
        }
    }
    Ok(max.to_f64())
}

/// Mean squared |double - oracle| difference, accumulated in extended
/// precision.
pub fn mse_vs_hp(a: &[f64], b: &[HpNumber], cfg: &PrecisionConfig) -> Result<f64, OracleError> {
    check_lengths(a.len(), b.len())?;
    if a.is_empty() {
        return Err(OracleError::Empty);
    }
    let mut sum = HpNumber::from_f64(0.0, cfg);
    for (&x, y) in a.iter().zip(b) {
        let delta = HpNumber::from_f64(x, cfg).sub(y);
        sum = sum.add(&delta.mul(&delta));
    }
    let count = HpNumber::from_f64(a.len() as f64, cfg);
    Ok(sum.div(&count).to_f64())
}

/// Largest componentwise difference between two oracle runs.
pub fn max_disagreement_hp(
    a: &[HpNumber],
    b: &[HpNumber],
    cfg: &PrecisionConfig,
) -> Result<f64, OracleError> {
    check_lengths(a.len(), b.len())?;
    let mut max = HpNumber::from_f64(0.0, cfg);
    for (x, y) in a.iter().zip(b) {
        let delta = x.sub(y).abs();
        if delta.abs_gt(&max) {
            max = delta;
        }
    }
    Ok(max.to_f64())
}

/// Mean squared difference between two oracle runs.
pub fn mse_hp(a: &[HpNumber], b: &[HpNumber], cfg: &PrecisionConfig) -> Result<f64, OracleError> {
    check_lengths(a.len(), b.len())?;
    if a.is_empty() {
        return Err(OracleError::Empty);
    }
    let mut sum = HpNumber::from_f64(0.0, cfg);
    for (x, y) in a.iter().zip(b) {
        let delta = x.sub(y);
        sum = sum.add(&delta.mul(&delta));
    }
    let count = HpNumber::from_f64(a.len() as f64, cfg);
    Ok(sum.div(&count).to_f64())
}

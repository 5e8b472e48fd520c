use rand::seq::SliceRandom;
use rand::Rng;
use spline_core::ControlCurve;

use crate::error::HarnessError;

/// Benchmark run parameters. Defaults reproduce the full-scale methodology;
/// desk-scale runs shrink `schedule_len` and `n_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub schedule_len: usize,
    pub seed: u64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            n_min: 4,
            n_max: 1_048_576,
            schedule_len: 524_288,
            seed: 0,
        }
    }
}

impl BenchConfig {
    /// Desk-scale preset: same distribution shape, minutes instead of hours.
    pub fn desk_scale(seed: u64) -> Self {
        Self {
            n_max: 65_536,
            schedule_len: 4_096,
            seed,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        if self.n_min < 3 {
            return Err(HarnessError::InvalidConfig {
                reason: format!("n_min must be at least 3, got {}", self.n_min),
            });
        }
        if self.n_min > self.n_max {
            return Err(HarnessError::InvalidConfig {
                reason: format!("n_min {} exceeds n_max {}", self.n_min, self.n_max),
            });
        }
        if self.schedule_len == 0 {
            return Err(HarnessError::InvalidConfig {
                reason: "schedule_len must be at least 1".into(),
            });
        }
        Ok(())
    }
}

/// Builds the shuffled list of control-point counts.
///
/// `r` is sampled at `schedule_len` equally spaced points on [0, 1]
/// inclusive and mapped through `(r(sqrt(n_max) - sqrt(n_min)) + sqrt(n_min))^2`,
/// biasing the schedule toward small curves. Duplicates are kept. The result
/// is shuffled with the caller's seeded generator.
pub fn build_n_schedule<R: Rng>(cfg: &BenchConfig, rng: &mut R) -> Result<Vec<usize>, HarnessError> {
    cfg.validate()?;
    let lo = (cfg.n_min as f64).sqrt();
    let hi = (cfg.n_max as f64).sqrt();
    let len = cfg.schedule_len;

    let mut schedule: Vec<usize> = (0..len)
        .map(|k| {
            let r = if len == 1 { 0.0 } else { k as f64 / (len - 1) as f64 };
            let root = r * (hi - lo) + lo;
            (root * root) as usize
        })
        .collect();
    schedule.shuffle(rng);
    Ok(schedule)
}

/// A zero draw would repeat the previous knot; substitute a small fixed
/// step so the knots stay strictly increasing.
fn knot_step(eps: f64) -> f64 {
    if eps == 0.0 {
        0.0001
    } else {
        eps
    }
}

/// Generates a random curve: the first knot sits at 0, each later knot
/// advances by a U(0,1) draw (with a zero draw replaced by 1e-4 so the knots
/// stay strictly increasing), and every value is an independent U(0,1) draw.
pub fn gen_control_points<R: Rng>(n: usize, rng: &mut R) -> Result<ControlCurve, HarnessError> {
    if n < 3 {
        return Err(HarnessError::CurveTooSmall { n });
    }
    let mut knots = Vec::with_capacity(n);
    let mut values = Vec::with_capacity(n);

    let mut x = 0.0;
    knots.push(x);
    values.push(rng.gen::<f64>());
    for _ in 1..n {
        x += knot_step(rng.gen::<f64>());
        knots.push(x);
        values.push(rng.gen::<f64>());
    }
    Ok(ControlCurve::new(knots, values).expect("generated knots are strictly increasing"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn counts(schedule: &[usize], n: usize) -> usize {
        schedule.iter().filter(|&&v| v == n).count()
    }

    #[test]
    fn schedule_endpoints_hit_the_extremes() {
        let cfg = BenchConfig::default();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let schedule = build_n_schedule(&cfg, &mut rng).unwrap();
        assert_eq!(schedule.len(), 524_288);
        assert_eq!(*schedule.iter().min().unwrap(), 4);
        assert_eq!(*schedule.iter().max().unwrap(), 1_048_576);
    }

    #[test]
    fn schedule_midpoint_value() {
        // r = 0.5 maps to (0.5 * (1024 - 2) + 2)^2 = 513^2 = 263,169.
        let cfg = BenchConfig {
            schedule_len: 3,
            ..BenchConfig::default()
        };
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut schedule = build_n_schedule(&cfg, &mut rng).unwrap();
        schedule.sort_unstable();
        assert_eq!(schedule, vec![4, 263_169, 1_048_576]);
    }

    #[test]
    fn full_scale_small_n_counts_match_published_run() {
        // Occurrence counts of select small n in the full 524,288-entry
        // schedule, as published for the original run.
        let cfg = BenchConfig::default();
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let schedule = build_n_schedule(&cfg, &mut rng).unwrap();
        for (n, expected) in [(4, 122), (8, 89), (16, 63), (32, 45), (64, 31), (128, 23)] {
            assert_eq!(counts(&schedule, n), expected, "count of n = {n}");
        }
    }

    #[test]
    fn square_law_oversamples_small_n() {
        // Under a linear map of the same schedule the band n <= 100 would
        // receive about len * 97 / (n_max - n_min) entries; the square-law
        // map concentrates roughly 40x more there.
        let cfg = BenchConfig::default();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let schedule = build_n_schedule(&cfg, &mut rng).unwrap();
        let small = schedule.iter().filter(|&&n| n <= 100).count();
        let uniform_expectation =
            cfg.schedule_len as f64 * 97.0 / (cfg.n_max - cfg.n_min) as f64;
        assert!(
            small as f64 > 10.0 * uniform_expectation,
            "only {small} entries at n <= 100 (uniform map would give ~{uniform_expectation:.0})"
        );
    }

    #[test]
    fn desk_scale_keeps_repeated_small_n() {
        // The n = 4 share shrinks proportionally with the r-window:
        // (sqrt(5) - 2) / (sqrt(n_max) - 2) of the schedule, within 2x.
        let cfg = BenchConfig::desk_scale(0);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let schedule = build_n_schedule(&cfg, &mut rng).unwrap();
        let got = counts(&schedule, 4) as f64;
        let expected = cfg.schedule_len as f64 * (5f64.sqrt() - 2.0)
            / ((cfg.n_max as f64).sqrt() - 2.0);
        assert!(
            got >= expected / 2.0 && got <= expected * 2.0,
            "n = 4 count {got} not within 2x of {expected:.1}"
        );
    }

    #[test]
    fn degenerate_schedule_is_constant() {
        let cfg = BenchConfig {
            n_min: 4,
            n_max: 4,
            schedule_len: 10,
            ..BenchConfig::default()
        };
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let schedule = build_n_schedule(&cfg, &mut rng).unwrap();
        assert!(schedule.iter().all(|&n| n == 4));
    }

    #[test]
    fn generated_curves_are_strictly_increasing() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in [3, 4, 100] {
            let curve = gen_control_points(n, &mut rng).unwrap();
            assert_eq!(curve.len(), n);
            assert_eq!(curve.knots()[0], 0.0);
            for w in curve.knots().windows(2) {
                assert!(w[1] > w[0]);
            }
        }
    }

    #[test]
    fn zero_draw_becomes_fixed_step() {
        assert_eq!(knot_step(0.0), 0.0001);
        assert_eq!(knot_step(0.25), 0.25);
    }

    #[test]
    fn generation_is_deterministic_per_seed() {
        let a = gen_control_points(50, &mut ChaCha8Rng::seed_from_u64(11)).unwrap();
        let b = gen_control_points(50, &mut ChaCha8Rng::seed_from_u64(11)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_invalid_configs() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let bad = BenchConfig {
            n_min: 2,
            ..BenchConfig::default()
        };
        assert!(build_n_schedule(&bad, &mut rng).is_err());
        let bad = BenchConfig {
            n_min: 10,
            n_max: 5,
            ..BenchConfig::default()
        };
        assert!(build_n_schedule(&bad, &mut rng).is_err());
        let bad = BenchConfig {
            schedule_len: 0,
            ..BenchConfig::default()
        };
        assert!(build_n_schedule(&bad, &mut rng).is_err());
        assert!(gen_control_points(2, &mut rng).is_err());
    }
}

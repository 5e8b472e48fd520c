use astro_float::{BigFloat, RoundingMode, Sign};
use spline_core::{BoundaryCondition, ControlCurve, Segment};

use crate::error::OracleError;

const RM: RoundingMode = RoundingMode::ToEven;

/// Working precision of the software floating-point oracle, in decimal
/// digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrecisionConfig {
    decimal_digits: u32,
}

impl PrecisionConfig {
    pub fn new(decimal_digits: u32) -> Result<Self, OracleError> {
        if decimal_digits < 10 {
            return Err(OracleError::PrecisionTooLow {
                digits: decimal_digits,
            });
        }
        Ok(Self { decimal_digits })
    }

    pub fn decimal_digits(&self) -> u32 {
        self.decimal_digits
    }

    /// Mantissa size in bits: enough for the requested decimal digits plus
    /// guard bits so the last requested digit is trustworthy.
    fn bits(&self) -> usize {
        (self.decimal_digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + 8
    }
}

/// A big-float value produced by the oracle, round-half-even at the
/// precision it was computed with.
#[derive(Debug, Clone)]
pub struct HpNumber {
    inner: BigFloat,
    bits: usize,
}

impl HpNumber {
    pub fn from_f64(v: f64, cfg: &PrecisionConfig) -> Self {
        Self {
            inner: BigFloat::from_f64(v, cfg.bits()),
            bits: cfg.bits(),
        }
    }

    fn wrap(&self, inner: BigFloat) -> Self {
        Self {
            inner,
            bits: self.bits,
        }
    }

    pub(crate) fn add(&self, rhs: &Self) -> Self {
        self.wrap(self.inner.add(&rhs.inner, self.bits, RM))
    }

    pub(crate) fn sub(&self, rhs: &Self) -> Self {
        self.wrap(self.inner.sub(&rhs.inner, self.bits, RM))
    }

    pub(crate) fn mul(&self, rhs: &Self) -> Self {
        self.wrap(self.inner.mul(&rhs.inner, self.bits, RM))
    }

    pub(crate) fn div(&self, rhs: &Self) -> Self {
        self.wrap(self.inner.div(&rhs.inner, self.bits, RM))
    }

    pub(crate) fn neg(&self) -> Self {
        self.wrap(self.inner.neg())
    }

    pub(crate) fn abs(&self) -> Self {
        if self.inner.sign() == Some(Sign::Neg) {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Magnitude comparison; total over non-NaN values.
    pub(crate) fn abs_gt(&self, rhs: &Self) -> bool {
        matches!(self.inner.abs_cmp(&rhs.inner), Some(ord) if ord > 0)
    }

    pub fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    /// Rounds to the nearest `f64`.
    pub fn to_f64(&self) -> f64 {
        big_to_f64(&self.inner)
    }
}

fn big_to_f64(x: &BigFloat) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x.is_inf_pos() {
        return f64::INFINITY;
    }
    if x.is_inf_neg() {
        return f64::NEG_INFINITY;
    }
    if x.is_zero() {
        return 0.0;
    }
    // Finite and nonzero: value = (mantissa / 2^bits) * 2^e with the words
    // little-endian and the top bit of the last word set.
    let (words, _len, sign, e, _inexact) = x.as_raw_parts().expect("finite number has raw parts");
    let k = words.len();
    let hi = words[k - 1] as f64;
    let lo = if k >= 2 { words[k - 2] as f64 } else { 0.0 };
    let frac = (hi + lo * 2f64.powi(-64)) * 2f64.powi(-64); // in [0.5, 1)
    let v = scale_by_pow2(frac, e);
    match sign {
        Sign::Neg => -v,
        Sign::Pos => v,
    }
}

/// `v * 2^e` with the factor split in two so the scale itself cannot
/// overflow or underflow before the multiply.
fn scale_by_pow2(v: f64, e: i32) -> f64 {
    if (-1000..=1000).contains(&e) {
        v * 2f64.powi(e)
    } else {
        let half = e / 2;
        v * 2f64.powi(half) * 2f64.powi(e - half)
    }
}

struct Consts {
    half: HpNumber,
    two: HpNumber,
    three: HpNumber,
    six: HpNumber,
}

impl Consts {
    fn new(cfg: &PrecisionConfig) -> Self {
        Self {
            half: HpNumber::from_f64(0.5, cfg),
            two: HpNumber::from_f64(2.0, cfg),
            three: HpNumber::from_f64(3.0, cfg),
            six: HpNumber::from_f64(6.0, cfg),
        }
    }
}

fn hp_vec(values: &[f64], cfg: &PrecisionConfig) -> Vec<HpNumber> {
    values.iter().map(|&v| HpNumber::from_f64(v, cfg)).collect()
}

/// The forward/backward substitution of [`spline_core::second_derivatives`]
/// executed step for step in extended precision.
pub fn hp_second_derivatives(
    curve: &ControlCurve,
    start: BoundaryCondition,
    end: BoundaryCondition,
    cfg: &PrecisionConfig,
) -> Result<Vec<HpNumber>, OracleError> {
    if let BoundaryCondition::Clamped(slope) = start {
        if !slope.is_finite() {
            return Err(spline_core::SplineError::NonFiniteSlope { slope }.into());
        }
    }
    if let BoundaryCondition::Clamped(slope) = end {
        if !slope.is_finite() {
            return Err(spline_core::SplineError::NonFiniteSlope { slope }.into());
        }
    }

    let k = Consts::new(cfg);
    let knots = hp_vec(curve.knots(), cfg);
    let values = hp_vec(curve.values(), cfg);
    let n = knots.len();
    let zero = HpNumber::from_f64(0.0, cfg);

    let mut c_p = vec![zero.clone(); n];
    let mut ypp = vec![zero.clone(); n];

    let mut cj = knots[1].sub(&knots[0]);
    let mut new_dj = values[1].sub(&values[0]).div(&cj);

    match start {
        BoundaryCondition::Natural => {}
        BoundaryCondition::Clamped(slope) => {
            let slope = HpNumber::from_f64(slope, cfg);
            c_p[0] = k.half.clone();
            ypp[0] = k.three.mul(&new_dj.sub(&slope)).div(&cj);
        }
    }

    for j in 1..n - 1 {
        let aj = cj.clone();
        let old_dj = new_dj.clone();

        cj = knots[j + 1].sub(&knots[j]);
        new_dj = values[j + 1].sub(&values[j]).div(&cj);
        let bj = k.two.mul(&cj.add(&aj));
        let denom = bj.sub(&aj.mul(&c_p[j - 1]));
        let dj = k.six.mul(&new_dj.sub(&old_dj));

        ypp[j] = dj.sub(&aj.mul(&ypp[j - 1])).div(&denom);
        c_p[j] = cj.div(&denom);
    }

    let j = n - 1;
    if let BoundaryCondition::Clamped(slope) = end {
        let aj = cj;
        let old_dj = new_dj;

        let end_dj = HpNumber::from_f64(slope, cfg);
        let bj = k.two.mul(&aj);
        let denom = bj.sub(&aj.mul(&c_p[j - 1]));
        let dj = k.six.mul(&end_dj.sub(&old_dj));

        ypp[j] = dj.sub(&aj.mul(&ypp[j - 1])).div(&denom);
        c_p[j] = zero;
    }

    for j in (0..n - 1).rev() {
        let next = ypp[j + 1].clone();
        ypp[j] = ypp[j].sub(&c_p[j].mul(&next));
    }

    Ok(ypp)
}

/// Independent extended-precision route: assembles the same tridiagonal
/// system and solves it densely with partial pivoting.
pub fn hp_dense_second_derivatives(
    curve: &ControlCurve,
    start: BoundaryCondition,
    end: BoundaryCondition,
    cfg: &PrecisionConfig,
) -> Result<Vec<HpNumber>, OracleError> {
    let k = Consts::new(cfg);
    let knots = hp_vec(curve.knots(), cfg);
    let values = hp_vec(curve.values(), cfg);
    let n = knots.len();
    let zero = HpNumber::from_f64(0.0, cfg);
    let one = HpNumber::from_f64(1.0, cfg);

    let mut m = vec![vec![zero.clone(); n]; n];
    let mut d = vec![zero.clone(); n];

    for j in 1..n - 1 {
        let left = knots[j].sub(&knots[j - 1]);
        let right = knots[j + 1].sub(&knots[j]);
        m[j][j - 1] = left.clone();
        m[j][j] = k.two.mul(&knots[j + 1].sub(&knots[j - 1]));
        m[j][j + 1] = right.clone();
        let slope_r = values[j + 1].sub(&values[j]).div(&right);
        let slope_l = values[j].sub(&values[j - 1]).div(&left);
        d[j] = k.six.mul(&slope_r.sub(&slope_l));
    }

    match start {
        BoundaryCondition::Natural => {
            m[0][0] = one.clone();
        }
        BoundaryCondition::Clamped(slope) => {
            let h = knots[1].sub(&knots[0]);
            m[0][0] = k.two.mul(&h);
            m[0][1] = h.clone();
            let s = values[1].sub(&values[0]).div(&h);
            d[0] = k.six.mul(&s.sub(&HpNumber::from_f64(slope, cfg)));
        }
    }
    match end {
        BoundaryCondition::Natural => {
            m[n - 1][n - 1] = one;
        }
        BoundaryCondition::Clamped(slope) => {
            let h = knots[n - 1].sub(&knots[n - 2]);
            m[n - 1][n - 2] = h.clone();
            m[n - 1][n - 1] = k.two.mul(&h);
            let s = values[n - 1].sub(&values[n - 2]).div(&h);
            d[n - 1] = k.six.mul(&HpNumber::from_f64(slope, cfg).sub(&s));
        }
    }

    // Gaussian elimination with partial pivoting, all in extended precision.
    for col in 0..n {
        let mut pivot = col;
        for row in col + 1..n {
            if m[row][col].abs_gt(&m[pivot][col]) {
                pivot = row;
            }
        }
        if m[pivot][col].is_zero() {
            return Err(OracleError::Singular { col });
        }
        m.swap(col, pivot);
        d.swap(col, pivot);

        for row in col + 1..n {
            if m[row][col].is_zero() {
                continue;
            }
            let factor = m[row][col].div(&m[col][col]);
            for idx in col..n {
                let delta = factor.mul(&m[col][idx]);
                m[row][idx] = m[row][idx].sub(&delta);
            }
            let delta = factor.mul(&d[col]);
            d[row] = d[row].sub(&delta);
        }
    }

    let mut x = vec![HpNumber::from_f64(0.0, cfg); n];
    for row in (0..n).rev() {
        let mut acc = d[row].clone();
        for idx in row + 1..n {
            acc = acc.sub(&m[row][idx].mul(&x[idx]));
        }
        x[row] = acc.div(&m[row][row]);
    }
    Ok(x)
}

fn hp_reference(
    x: &HpNumber,
    x0: &HpNumber,
    x1: &HpNumber,
    y0: &HpNumber,
    y1: &HpNumber,
    ypp0: &HpNumber,
    ypp1: &HpNumber,
    k: &Consts,
) -> HpNumber {
    let h = x1.sub(x0);
    let a = x1.sub(x).div(&h);
    let b = x.sub(x0).div(&h);
    let h2 = h.mul(&h);
    let c = a.mul(&a).mul(&a).sub(&a).mul(&h2).div(&k.six);
    let d = b.mul(&b).mul(&b).sub(&b).mul(&h2).div(&k.six);
    a.mul(y0)
        .add(&b.mul(y1))
        .add(&c.mul(ypp0))
        .add(&d.mul(ypp1))
}

/// The reference interpolation formula evaluated in extended precision.
pub fn hp_interpolate(x: f64, seg: &Segment, cfg: &PrecisionConfig) -> HpNumber {
    let k = Consts::new(cfg);
    hp_reference(
        &HpNumber::from_f64(x, cfg),
        &HpNumber::from_f64(seg.x0, cfg),
        &HpNumber::from_f64(seg.x1, cfg),
        &HpNumber::from_f64(seg.y0, cfg),
        &HpNumber::from_f64(seg.y1, cfg),
        &HpNumber::from_f64(seg.ypp0, cfg),
        &HpNumber::from_f64(seg.ypp1, cfg),
        &k,
    )
}

/// Sweeps the curve at `xs` (sorted, in range) with extended-precision
/// segment evaluation against the supplied extended-precision second
/// derivatives. Bracketing matches the double-precision sweep.
pub fn hp_evaluate_curve(
    curve: &ControlCurve,
    ypp: &[HpNumber],
    xs: &[f64],
    cfg: &PrecisionConfig,
) -> Result<Vec<HpNumber>, OracleError> {
    if ypp.len() != curve.len() {
        return Err(OracleError::ShapeMismatch {
            left: curve.len(),
            right: ypp.len(),
        });
    }
    let (min, max) = curve.domain();
    let knots = curve.knots();
    let values = curve.values();
    let k = Consts::new(cfg);
    let hp_knots = hp_vec(knots, cfg);
    let hp_values = hp_vec(values, cfg);

    let mut out = Vec::with_capacity(xs.len());
    let mut j = 0usize;
    for (i, &x) in xs.iter().enumerate() {
        if i > 0 && x < xs[i - 1] {
            return Err(spline_core::SplineError::UnsortedPoints { index: i }.into());
        }
        if !(x >= min && x <= max) {
            return Err(spline_core::SplineError::OutOfRange { x, min, max }.into());
        }
        while j + 2 < knots.len() && knots[j + 1] <= x {
            j += 1;
        }
        out.push(hp_reference(
            &HpNumber::from_f64(x, cfg),
            &hp_knots[j],
            &hp_knots[j + 1],
            &hp_values[j],
            &hp_values[j + 1],
            &ypp[j],
            &ypp[j + 1],
            &k,
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_low_precision() {
        assert!(matches!(
            PrecisionConfig::new(9).unwrap_err(),
            OracleError::PrecisionTooLow { digits: 9 }
        ));
        assert!(PrecisionConfig::new(10).is_ok());
    }

    #[test]
    fn f64_round_trips_exactly() {
        let cfg = PrecisionConfig::new(30).unwrap();
        for v in [
            0.0,
            1.0,
            -1.0,
            0.5,
            -3.7,
            1.01,
            2450.27637,
            1e-30,
            -2.5e17,
            f64::MIN_POSITIVE,
        ] {
            let hp = HpNumber::from_f64(v, &cfg);
            assert_eq!(hp.to_f64(), v, "round trip of {v}");
        }
    }

    #[test]
    fn interpolate_endpoint_is_exact() {
        let cfg = PrecisionConfig::new(30).unwrap();
        let seg = Segment::new(0.25, 1.5, 7.0, 9.0, 3.0, 5.0).unwrap();
        assert_eq!(hp_interpolate(0.25, &seg, &cfg).to_f64(), 7.0);
    }

    #[test]
    fn interpolate_curved_midpoint_is_exact() {
        let cfg = PrecisionConfig::new(30).unwrap();
        let seg = Segment::new(0.0, 1.0, 0.0, 0.0, 6.0, 6.0).unwrap();
        assert_eq!(hp_interpolate(0.5, &seg, &cfg).to_f64(), -0.75);
    }

    #[test]
    fn straight_line_is_exactly_zero() {
        let cfg = PrecisionConfig::new(30).unwrap();
        let curve = ControlCurve::new(vec![0.0, 1.0, 2.0, 3.0], vec![1.0, 3.0, 5.0, 7.0]).unwrap();
        let ypp = hp_second_derivatives(
            &curve,
            BoundaryCondition::Natural,
            BoundaryCondition::Natural,
            &cfg,
        )
        .unwrap();
        for v in &ypp {
            assert!(v.is_zero() || v.to_f64() == 0.0);
        }
    }
}

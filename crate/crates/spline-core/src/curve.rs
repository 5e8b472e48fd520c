use crate::error::SplineError;

/// A set of control points: strictly increasing knots paired with values.
#[derive(Debug, Clone, PartialEq)]
pub struct ControlCurve {
    knots: Vec<f64>,
    values: Vec<f64>,
}

impl ControlCurve {
    /// Builds a curve, validating the invariants: equal lengths, at least
    /// three points, knots strictly increasing and finite.
    pub fn new(knots: Vec<f64>, values: Vec<f64>) -> Result<Self, SplineError> {
        if knots.len() != values.len() {
            return Err(SplineError::LengthMismatch {
                knots: knots.len(),
                values: values.len(),
            });
        }
        if knots.len() < 3 {
            return Err(SplineError::TooFewPoints { n: knots.len() });
        }
        for i in 1..knots.len() {
            if !(knots[i] > knots[i - 1]) {
                return Err(SplineError::NonIncreasingKnots {
                    index: i,
                    prev: knots[i - 1],
                    next: knots[i],
                });
            }
        }
        Ok(Self { knots, values })
    }

    pub fn len(&self) -> usize {
        self.knots.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction requires at least 3 points
    }

    pub fn knots(&self) -> &[f64] {
        &self.knots
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// The closed interval spanned by the knots.
    pub fn domain(&self) -> (f64, f64) {
        (self.knots[0], self.knots[self.knots.len() - 1])
    }

    /// The segment between knots `j` and `j + 1`, carrying the matching
    /// values and second derivatives.
    pub fn segment(&self, ypp: &SecondDerivatives, j: usize) -> Segment {
        Segment {
            x0: self.knots[j],
            x1: self.knots[j + 1],
            y0: self.values[j],
            y1: self.values[j + 1],
            ypp0: ypp.values()[j],
            ypp1: ypp.values()[j + 1],
        }
    }
}

/// The second derivatives `y''_j` solved from the tridiagonal system, one
/// per control point.
#[derive(Debug, Clone, PartialEq)]
pub struct SecondDerivatives(Vec<f64>);

impl SecondDerivatives {
    pub fn new(values: Vec<f64>) -> Self {
        Self(values)
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }
}

/// Endpoint condition for the second-derivative solve.
///
/// `Natural` forces zero curvature at the endpoint; `Clamped` prescribes the
/// first derivative there. The legacy huge-number sentinel is accepted only
/// at the CLI boundary, never here.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundaryCondition {
    Natural,
    Clamped(f64),
}

impl BoundaryCondition {
    pub(crate) fn validate(&self) -> Result<(), SplineError> {
        match *self {
            BoundaryCondition::Natural => Ok(()),
            BoundaryCondition::Clamped(slope) if slope.is_finite() => Ok(()),
            BoundaryCondition::Clamped(slope) => Err(SplineError::NonFiniteSlope { slope }),
        }
    }
}

/// One cubic segment: the bracketing knots, their values, and their second
/// derivatives. Invariant: `x1 > x0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub x0: f64,
    pub x1: f64,
    pub y0: f64,
    pub y1: f64,
    pub ypp0: f64,
    pub ypp1: f64,
}

impl Segment {
    pub fn new(
        x0: f64,
        x1: f64,
        y0: f64,
        y1: f64,
        ypp0: f64,
        ypp1: f64,
    ) -> Result<Self, SplineError> {
        if !(x1 > x0) {
            return Err(SplineError::DegenerateSegment {
                left: x0,
                right: x1,
            });
        }
        Ok(Self {
            x0,
            x1,
            y0,
            y1,
            ypp0,
            ypp1,
        })
    }

    pub fn width(&self) -> f64 {
        self.x1 - self.x0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_length_mismatch() {
        let err = ControlCurve::new(vec![0.0, 1.0, 2.0], vec![0.0, 1.0]).unwrap_err();
        assert!(matches!(err, SplineError::LengthMismatch { .. }));
    }

    #[test]
    fn rejects_short_curves() {
        let err = ControlCurve::new(vec![0.0, 1.0], vec![0.0, 1.0]).unwrap_err();
        assert_eq!(err, SplineError::TooFewPoints { n: 2 });
    }

    #[test]
    fn rejects_repeated_knots() {
        let err = ControlCurve::new(vec![0.0, 1.0, 1.0], vec![0.0, 1.0, 2.0]).unwrap_err();
        assert!(matches!(
            err,
            SplineError::NonIncreasingKnots { index: 2, .. }
        ));
    }

    #[test]
    fn rejects_degenerate_segment() {
        let err = Segment::new(1.0, 1.0, 0.0, 0.0, 0.0, 0.0).unwrap_err();
        assert!(matches!(err, SplineError::DegenerateSegment { .. }));
    }

    #[test]
    fn rejects_non_finite_clamp() {
        let err = BoundaryCondition::Clamped(f64::INFINITY).validate().unwrap_err();
        assert!(matches!(err, SplineError::NonFiniteSlope { .. }));
    }
}

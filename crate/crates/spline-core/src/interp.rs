use crate::curve::{ControlCurve, SecondDerivatives, Segment};
use crate::error::SplineError;

/// 1/6 as a binary64 constant, hoisted so the fast variant multiplies
/// instead of dividing.
const SIXTH: f64 = 1.0 / 6.0;

/// How the fast interpolation variant performs its single division.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DivisionStrategy {
    /// Compute `1 / (x1 - x0)` up front and multiply the final sum by it.
    PrecomputedInverse,
    /// Divide the final sum by `(x1 - x0)` directly.
    DeferredDivision,
}

/// Evaluates the cubic interpolant in its textbook form:
/// `y = A y0 + B y1 + C ypp0 + D ypp1` with the basis weights built from the
/// normalized distances to the segment endpoints.
///
/// Exact at the endpoints: `x = x0` gives `y0`, `x = x1` gives `y1`.
pub fn interp_segment_reference(x: f64, seg: &Segment) -> f64 {
    let h = seg.x1 - seg.x0;
    let a = (seg.x1 - x) / h;
    let b = (x - seg.x0) / h;
    let c = (a * a * a - a) * (h * h) / 6.0;
    let d = (b * b * b - b) * (h * h) / 6.0;
    a * seg.y0 + b * seg.y1 + c * seg.ypp0 + d * seg.ypp1
}

/// Evaluates the same cubic with the rearranged formulation that cancels the
/// shared `(x1 - x0)` factors, leaving a single division. The two routines
/// are algebraically identical; they differ only in rounding.
pub fn interp_segment_fast(x: f64, seg: &Segment, strategy: DivisionStrategy) -> f64 {
    let ba = seg.x1 - seg.x0;
    let xa = x - seg.x0;
    let bx = seg.x1 - x;
    let ba2 = ba * ba;

    let lower = xa * seg.y1 + bx * seg.y0;
    let c = (xa * xa - ba2) * xa * seg.ypp1;
    let d = (bx * bx - ba2) * bx * seg.ypp0;
    let sum = lower + SIXTH * (c + d);

    match strategy {
        DivisionStrategy::PrecomputedInverse => {
            let inv_ba = 1.0 / ba;
            sum * inv_ba
        }
        DivisionStrategy::DeferredDivision => sum / ba,
    }
}

/// Locates the segment containing `x`: the unique `j` (0-based) with
/// `knots[j] <= x <= knots[j + 1]`.
///
/// When `x` equals an interior knot the segment with that knot as its LEFT
/// endpoint is returned; both candidates interpolate to the same value, the
/// rule just keeps the choice deterministic.
pub fn bracket(curve: &ControlCurve, x: f64) -> Result<usize, SplineError> {
    let knots = curve.knots();
    let (min, max) = curve.domain();
    if !(x >= min && x <= max) {
        return Err(SplineError::OutOfRange { x, min, max });
    }
    let below = knots.partition_point(|k| *k <= x);
    Ok((below - 1).min(knots.len() - 2))
}

/// Interpolates the curve at each of `xs`, which must be sorted ascending
/// and lie within the knot span. Bracketing is a single forward scan, no
/// per-point bisection.
pub fn evaluate_curve(
    curve: &ControlCurve,
    ypp: &SecondDerivatives,
    xs: &[f64],
) -> Result<Vec<f64>, SplineError> {
    if ypp.len() != curve.len() {
        return Err(SplineError::DerivativeLengthMismatch {
            expected: curve.len(),
            got: ypp.len(),
        });
    }
    let (min, max) = curve.domain();
    let knots = curve.knots();
    let last_seg = knots.len() - 2;

    let mut out = Vec::with_capacity(xs.len());
    let mut j = 0usize;
    let mut seg = curve.segment(ypp, 0);
    for (i, &x) in xs.iter().enumerate() {
        if i > 0 && x < xs[i - 1] {
            return Err(SplineError::UnsortedPoints { index: i });
        }
        if !(x >= min && x <= max) {
            return Err(SplineError::OutOfRange { x, min, max });
        }
        let mut moved = false;
        while j < last_seg && knots[j + 1] <= x {
            j += 1;
            moved = true;
        }
        if moved {
            seg = curve.segment(ypp, j);
        }
        out.push(interp_segment_reference(x, &seg));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solve::second_derivatives;
    use crate::BoundaryCondition;
    use proptest::prelude::*;

    fn seg(x0: f64, x1: f64, y0: f64, y1: f64, ypp0: f64, ypp1: f64) -> Segment {
        Segment::new(x0, x1, y0, y1, ypp0, ypp1).unwrap()
    }

    #[test]
    fn reference_endpoint_is_exact() {
        let s = seg(0.0, 1.0, 7.0, 9.0, 3.0, 5.0);
        assert_eq!(interp_segment_reference(0.0, &s), 7.0);
        assert_eq!(interp_segment_reference(1.0, &s), 9.0);
    }

    #[test]
    fn reference_zero_curvature_is_linear() {
        let s = seg(0.0, 1.0, 0.0, 2.0, 0.0, 0.0);
        assert_eq!(interp_segment_reference(0.5, &s), 1.0);
    }

    #[test]
    fn reference_curved_midpoint() {
        // A = B = 1/2, C = D = -1/16; independently confirmed by an
        // extended-precision evaluation of the basis form.
        let s = seg(0.0, 1.0, 0.0, 0.0, 6.0, 6.0);
        assert_eq!(interp_segment_reference(0.5, &s), -0.75);
    }

    #[test]
    fn fast_matches_on_named_cases() {
        let linear = seg(0.0, 1.0, 0.0, 2.0, 0.0, 0.0);
        let curved = seg(0.0, 1.0, 0.0, 0.0, 6.0, 6.0);
        for strategy in [
            DivisionStrategy::PrecomputedInverse,
            DivisionStrategy::DeferredDivision,
        ] {
            assert_eq!(interp_segment_fast(0.5, &linear, strategy), 1.0);
            assert_eq!(interp_segment_fast(0.5, &curved, strategy), -0.75);
        }
    }

    #[test]
    fn bracket_named_cases() {
        let curve = ControlCurve::new(vec![0.0, 1.0, 2.0, 3.0], vec![0.0; 4]).unwrap();
        // Spec counts segments 1-based; these are the same cases 0-based.
        assert_eq!(bracket(&curve, 0.0).unwrap(), 0);
        assert_eq!(bracket(&curve, 2.5).unwrap(), 2);
        // Interior knot resolves to the segment with the knot on the left.
        assert_eq!(bracket(&curve, 1.0).unwrap(), 1);
        assert_eq!(bracket(&curve, 3.0).unwrap(), 2);
    }

    #[test]
    fn bracket_rejects_out_of_range() {
        let curve = ControlCurve::new(vec![0.0, 1.0, 2.0, 3.0], vec![0.0; 4]).unwrap();
        let err = bracket(&curve, 3.5).unwrap_err();
        assert_eq!(
            err,
            SplineError::OutOfRange {
                x: 3.5,
                min: 0.0,
                max: 3.0
            }
        );
        assert!(bracket(&curve, f64::NAN).is_err());
    }

    #[test]
    fn evaluate_at_knots_returns_values() {
        let curve = ControlCurve::new(
            vec![0.0, 0.5, 1.0, 1.7, 2.0],
            vec![1.0, -0.25, 2.0, 0.5, 3.0],
        )
        .unwrap();
        let ypp = second_derivatives(&curve, BoundaryCondition::Natural, BoundaryCondition::Natural)
            .unwrap();
        let ys = evaluate_curve(&curve, &ypp, curve.knots()).unwrap();
        for (got, want) in ys.iter().zip(curve.values()) {
            let tol = 1e-12 * want.abs().max(1.0);
            assert!((got - want).abs() <= tol, "{got} vs {want}");
        }
    }

    #[test]
    fn evaluate_matches_reference_per_segment() {
        let curve =
            ControlCurve::new(vec![0.0, 1.0, 3.0], vec![0.0, 1.0, 0.0]).unwrap();
        let ypp = second_derivatives(&curve, BoundaryCondition::Natural, BoundaryCondition::Natural)
            .unwrap();
        let xs = [0.5, 2.0];
        let ys = evaluate_curve(&curve, &ypp, &xs).unwrap();
        for (j, (&x, &y)) in xs.iter().zip(&ys).enumerate() {
            let expect = interp_segment_reference(x, &curve.segment(&ypp, j));
            assert_eq!(y, expect);
        }
    }

    #[test]
    fn evaluate_rejects_unsorted_and_out_of_range() {
        let curve = ControlCurve::new(vec![0.0, 1.0, 2.0], vec![0.0, 1.0, 0.0]).unwrap();
        let ypp = second_derivatives(&curve, BoundaryCondition::Natural, BoundaryCondition::Natural)
            .unwrap();
        assert!(matches!(
            evaluate_curve(&curve, &ypp, &[1.0, 0.5]).unwrap_err(),
            SplineError::UnsortedPoints { index: 1 }
        ));
        assert!(matches!(
            evaluate_curve(&curve, &ypp, &[-0.1]).unwrap_err(),
            SplineError::OutOfRange { .. }
        ));
        let short = SecondDerivatives::new(vec![0.0, 0.0]);
        assert!(matches!(
            evaluate_curve(&curve, &short, &[0.5]).unwrap_err(),
            SplineError::DerivativeLengthMismatch { .. }
        ));
    }

    #[test]
    fn evaluate_empty_points_is_empty() {
        let curve = ControlCurve::new(vec![0.0, 1.0, 2.0], vec![0.0, 1.0, 0.0]).unwrap();
        let ypp = second_derivatives(&curve, BoundaryCondition::Natural, BoundaryCondition::Natural)
            .unwrap();
        assert!(evaluate_curve(&curve, &ypp, &[]).unwrap().is_empty());
    }

    fn segment_strategy() -> impl Strategy<Value = (Segment, f64)> {
        (
            -1.0e3..1.0e3f64,            // x0
            1.0e-4..1.0e3f64,            // width
            -1.0e3..1.0e3f64,            // y0
            -1.0e3..1.0e3f64,            // y1
            -1.0e3..1.0e3f64,            // ypp0
            -1.0e3..1.0e3f64,            // ypp1
            0.0..=1.0f64,                // relative position of x
        )
            .prop_map(|(x0, w, y0, y1, ypp0, ypp1, r)| {
                let seg = Segment::new(x0, x0 + w, y0, y1, ypp0, ypp1).unwrap();
                (seg, x0 + r * w)
            })
    }

    proptest! {
        #[test]
        fn fast_equals_reference((seg, x) in segment_strategy()) {
            let reference = interp_segment_reference(x, &seg);
            for strategy in [DivisionStrategy::PrecomputedInverse, DivisionStrategy::DeferredDivision] {
                let fast = interp_segment_fast(x, &seg, strategy);
                let tol = 1e-12 * reference.abs().max(1.0);
                prop_assert!((fast - reference).abs() <= tol,
                    "fast {} vs reference {} at x={x} seg={seg:?}", fast, reference);
            }
        }
    }
}

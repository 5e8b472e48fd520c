use crate::curve::{BoundaryCondition, ControlCurve, SecondDerivatives};
use crate::error::SplineError;

/// Solves the spline's tridiagonal system for the second derivatives.
///
/// Interior rows use `a_j = x_j - x_{j-1}`, `b_j = 2(x_{j+1} - x_{j-1})`,
/// `c_j = x_{j+1} - x_j` and the slope-difference right-hand side; the
/// endpoint rows depend on the boundary conditions. The solve is a single
/// forward/backward substitution over one scratch list, with the output
/// buffer doubling as the transformed right-hand side.
pub fn second_derivatives(
    curve: &ControlCurve,
    start: BoundaryCondition,
    end: BoundaryCondition,
) -> Result<SecondDerivatives, SplineError> {
    start.validate()?;
    end.validate()?;

    let knots = curve.knots();
    let values = curve.values();
    let n = curve.len();

    let mut c_p = vec![0.0; n]; // transformed superdiagonal c'
    let mut ypp = vec![0.0; n]; // holds d' during the sweep, y'' afterwards

    let mut cj = knots[1] - knots[0];
    let mut new_dj = (values[1] - values[0]) / cj;

    match start {
        BoundaryCondition::Natural => {
            c_p[0] = 0.0;
            ypp[0] = 0.0;
        }
        BoundaryCondition::Clamped(slope) => {
            c_p[0] = 0.5;
            ypp[0] = 3.0 * (new_dj - slope) / cj;
        }
    }

    for j in 1..n - 1 {
        let aj = cj;
        let old_dj = new_dj;

        cj = knots[j + 1] - knots[j];
        new_dj = (values[j + 1] - values[j]) / cj;
        let bj = 2.0 * (cj + aj);
        debug_assert!(bj.abs() >= aj.abs() + cj.abs(), "row {j} not diagonally dominant");
        let inv_denom = 1.0 / (bj - aj * c_p[j - 1]);
        let dj = 6.0 * (new_dj - old_dj);

        ypp[j] = (dj - aj * ypp[j - 1]) * inv_denom;
        c_p[j] = cj * inv_denom;
    }

    let j = n - 1;
    match end {
        BoundaryCondition::Natural => {
            c_p[j] = 0.0;
            ypp[j] = 0.0;
        }
        BoundaryCondition::Clamped(slope) => {
            let aj = cj;
            let old_dj = new_dj;

            // Zeroing c_n while injecting the slope into d_n realizes the
            // clamped end row a_n = x_n - x_{n-1}, b_n = 2(x_n - x_{n-1}).
            let cj = 0.0;
            let new_dj = slope;
            let bj = 2.0 * (cj + aj);
            let inv_denom = 1.0 / (bj - aj * c_p[j - 1]);
            let dj = 6.0 * (new_dj - old_dj);

            ypp[j] = (dj - aj * ypp[j - 1]) * inv_denom;
            c_p[j] = cj * inv_denom;
        }
    }

    for j in (0..n - 1).rev() {
        ypp[j] -= c_p[j] * ypp[j + 1];
    }

    Ok(SecondDerivatives::new(ypp))
}

/// The reduced-continuity variant: both endpoint rows come from collapsing
/// the out-of-range knots onto the boundary (`x_0 = x_1`, `y_0 = y_1` and the
/// mirrored end), rather than prescribing curvature or slope. Retained
/// because it is the cheapest form to benchmark; it is NOT the natural
/// spline.
pub fn second_derivatives_simple(curve: &ControlCurve) -> Result<SecondDerivatives, SplineError> {
    let knots = curve.knots();
    let values = curve.values();
    let n = curve.len();

    let mut c_p = vec![0.0; n];
    let mut ypp = vec![0.0; n];

    let mut cj = knots[1] - knots[0];
    let mut new_dj = (values[1] - values[0]) / cj;

    c_p[0] = 0.5;
    ypp[0] = 3.0 * new_dj / cj;

    for j in 1..n - 1 {
        let aj = cj;
        let old_dj = new_dj;

        cj = knots[j + 1] - knots[j];
        new_dj = (values[j + 1] - values[j]) / cj;
        let bj = 2.0 * (cj + aj);
        debug_assert!(bj.abs() >= aj.abs() + cj.abs(), "row {j} not diagonally dominant");
        let inv_denom = 1.0 / (bj - aj * c_p[j - 1]);
        let dj = 6.0 * (new_dj - old_dj);

        ypp[j] = (dj - aj * ypp[j - 1]) * inv_denom;
        c_p[j] = cj * inv_denom;
    }

    // Last row: zeroing c_n and the incoming slope is equivalent to skipping
    // c_n and negating d_n.
    let j = n - 1;
    {
        let aj = cj;
        let old_dj = new_dj;

        let cj = 0.0;
        let new_dj = 0.0;
        let bj = 2.0 * (cj + aj);
        let inv_denom = 1.0 / (bj - aj * c_p[j - 1]);
        let dj = 6.0 * (new_dj - old_dj);

        ypp[j] = (dj - aj * ypp[j - 1]) * inv_denom;
        c_p[j] = cj * inv_denom;
    }

    for j in (0..n - 1).rev() {
        ypp[j] -= c_p[j] * ypp[j + 1];
    }

    Ok(SecondDerivatives::new(ypp))
}

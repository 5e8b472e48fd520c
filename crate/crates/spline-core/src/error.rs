use thiserror::Error;

/// Errors produced while constructing or evaluating splines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SplineError {
    /// Knot and value sequences differ in length.
    #[error("knot/value length mismatch: {knots} knots vs {values} values")]
    LengthMismatch { knots: usize, values: usize },

    /// Fewer than three control points.
    #[error("need at least 3 control points, got {n}")]
    TooFewPoints { n: usize },

    /// Knots are not strictly increasing at `index`.
    #[error("knots not strictly increasing at index {index}: {prev} then {next}")]
    NonIncreasingKnots { index: usize, prev: f64, next: f64 },

    /// A segment with `right <= left` was requested.
    #[error("degenerate segment: right endpoint {right} is not greater than left {left}")]
    DegenerateSegment { left: f64, right: f64 },

    /// An evaluation point lies outside the curve domain.
    #[error("x = {x} outside the curve domain [{min}, {max}]")]
    OutOfRange { x: f64, min: f64, max: f64 },

    /// Evaluation points are not sorted ascending.
    #[error("evaluation points not sorted ascending at index {index}")]
    UnsortedPoints { index: usize },

    /// A clamped boundary condition carries a non-finite slope.
    #[error("clamped boundary slope must be finite, got {slope}")]
    NonFiniteSlope { slope: f64 },

    /// A second-derivative sequence does not match the curve length.
    #[error("second-derivative length {got} does not match curve length {expected}")]
    DerivativeLengthMismatch { expected: usize, got: usize },
}

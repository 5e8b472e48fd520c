//! Cubic spline interpolation on strictly increasing knots.
//!
//! The crate provides the two halves of the classic spline workflow:
//! generating second derivatives from a set of control points by solving the
//! underlying tridiagonal system ([`second_derivatives`]), and evaluating the
//! cubic interpolant on a segment ([`interp_segment_reference`],
//! [`interp_segment_fast`]). Natural and clamped boundary conditions are
//! supported; all arithmetic is IEEE binary64.

mod curve;
mod error;
mod interp;
mod solve;

pub use curve::{BoundaryCondition, ControlCurve, SecondDerivatives, Segment};
pub use error::SplineError;
pub use interp::{
    bracket, evaluate_curve, interp_segment_fast, interp_segment_reference, DivisionStrategy,
};
pub use solve::{second_derivatives, second_derivatives_simple};

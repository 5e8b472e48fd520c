//! Extended-precision reference implementations and error metrics.
//!
//! The double-precision spline routines are validated against the same
//! algorithms executed in software big-floats at a configurable number of
//! decimal digits, and against a dense linear solve of the assembled
//! tridiagonal system. Comparisons between a double result and an oracle
//! result are carried out in extended precision before being reported as
//! `f64`.

mod dense;
mod error;
mod hp;
mod metrics;

pub use dense::{
    assemble_simple_system, assemble_system, dense_tridiag_solve, thomas_solve, TridiagonalSystem,
};
pub use error::OracleError;
pub use hp::{
    hp_dense_second_derivatives, hp_evaluate_curve, hp_interpolate, hp_second_derivatives,
    HpNumber, PrecisionConfig,
};
pub use metrics::{
    max_disagreement, max_disagreement_hp, max_disagreement_vs_hp, mse, mse_hp, mse_vs_hp,
};

use thiserror::Error;

/// Errors from the oracle layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    /// Two sequences that must match in length do not.
    #[error("sequence length mismatch: {left} vs {right}")]
    ShapeMismatch { left: usize, right: usize },

    /// An operation that needs at least one element got none.
    #[error("empty input")]
    Empty,

    /// Tridiagonal system bands have inconsistent lengths.
    #[error("inconsistent tridiagonal bands: diag {diag}, sub {sub}, super {sup}, rhs {rhs}")]
    BadBands {
        diag: usize,
        sub: usize,
        sup: usize,
        rhs: usize,
    },

    /// A row violates diagonal dominance.
    #[error("row {row} is not diagonally dominant")]
    NotDiagonallyDominant { row: usize },

    /// Elimination hit a zero pivot.
    #[error("singular system: zero pivot at column {col}")]
    Singular { col: usize },

    /// Working precision below the supported minimum.
    #[error("precision must be at least 10 decimal digits, got {digits}")]
    PrecisionTooLow { digits: u32 },

    /// Propagated from the spline layer.
    #[error(transparent)]
    Spline(#[from] spline_core::SplineError),
}

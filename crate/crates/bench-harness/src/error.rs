use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    /// Bad benchmark configuration.
    #[error("invalid config: {reason}")]
    InvalidConfig { reason: String },

    /// Curve generation needs at least three points.
    #[error("cannot generate a curve with {n} control points (minimum 3)")]
    CurveTooSmall { n: usize },

    /// An order sequence is not a permutation of the registered loop IDs.
    #[error("not a permutation of the registered loop ids: {ids:?}")]
    NotAPermutation { ids: Vec<u8> },

    /// An order code does not decode to a valid permutation.
    #[error("order code {code} does not decode to a permutation")]
    BadOrderCode { code: u64 },

    /// Output failed after some rows were already written.
    #[error("output failed after {rows_written} rows: {source}")]
    Io {
        rows_written: u64,
        #[source]
        source: std::io::Error,
    },
}

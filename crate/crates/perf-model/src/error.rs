use thiserror::Error;

#[derive(Debug, Error)]
pub enum ModelError {
    /// A parameter is outside its mathematical domain.
    #[error("domain error: {reason}")]
    Domain { reason: String },

    /// No samples to summarize.
    #[error("empty posterior")]
    EmptySamples,

    /// No data to fit.
    #[error("empty dataset")]
    EmptyData,

    /// Bad sampler configuration.
    #[error("invalid fit config: {reason}")]
    InvalidConfig { reason: String },

    /// Walker initialization could not find a usable starting point.
    #[error("walker initialization failed after {attempts} draws; last violation: {violation}")]
    Initialization {
        attempts: usize,
        violation: &'static str,
    },

    /// A required column is missing from the input TSV.
    #[error("column {name:?} not found; available: {available:?}")]
    MissingColumn {
        name: String,
        available: Vec<String>,
    },

    /// Malformed TSV input.
    #[error("bad TSV input at line {line}: {reason}")]
    BadInput { line: usize, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Invalid input to a numeric routine (non-finite value, sigma <= 0,
    /// probability outside (0,1), ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// An integer result would leave the representable range, or a checked
    /// accumulator overflowed. Never silently wrapped.
    #[error("overflow: {0}")]
    Overflow(String),

    /// Tensor or graph shapes do not line up.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// Rounding collapsed two activation thresholds to the same integer, or
    /// produced a non-positive one. The sigma is too small for this bit width.
    #[error("degenerate threshold table: {0}")]
    DegenerateTable(String),

    /// Weight tensor has zero spread; the CDF quantizer is undefined.
    #[error("degenerate weights: population sigma is zero")]
    DegenerateWeights,

    /// The model is in the wrong state for the requested operation
    /// (e.g. integer execution of a partially quantized graph).
    #[error("model state: {0}")]
    ModelState(String),

    /// Bad configuration or manifest contents.
    #[error("config error: {0}")]
    Config(String),

    /// Training diverged or produced non-finite values.
    #[error("numeric error: {0}")]
    Numeric(String),

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors surfaced by constructors, exact arithmetic and the search entry points.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter is outside the domain documented for the operation.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An exact integer computation would exceed the 64-bit result width.
    /// The caller must reduce `n` or `r`; results are never wrapped.
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    /// The input is larger than the cap configured for this operation.
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    /// Bytes that do not parse as graph6.
    #[error("malformed graph6 input: {0}")]
    MalformedInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

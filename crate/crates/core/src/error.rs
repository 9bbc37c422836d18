use thiserror::Error;

/// Errors raised by the construction and verification pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("index {index} out of range (expected < {len})")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("internal precision failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

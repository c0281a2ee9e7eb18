//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Precondition violated by a caller-supplied value.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An enumeration would exceed its documented desk-scale cap.
    #[error("size cap exceeded: {0}")]
    SizeExceeded(String),

    /// A group family/degree combination with no implemented generators.
    #[error("unsupported group family: {0}")]
    UnsupportedFamily(String),

    /// Malformed design file or certificate file.
    #[error("parse error: {0}")]
    Parse(String),

    /// A certificate failed independent recheck.
    #[error("replay failure: {0}")]
    Replay(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

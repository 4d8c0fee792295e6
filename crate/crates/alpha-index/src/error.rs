//! Crate-wide error type and exit-code mapping.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied value violates a documented precondition.
    #[error("parameter error: {0}")]
    Parameter(String),

    /// The request exceeds a hard size cap (vertex count, enumeration order).
    #[error("capacity error: {0}")]
    Capacity(String),

    /// A numeric routine failed to meet its accuracy contract.
    #[error("numeric error: {0}")]
    Numeric(String),

    /// Malformed graph6 text; `offset` is the byte position within the record.
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn parameter(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }

    pub fn numeric(msg: impl Into<String>) -> Self {
        Error::Numeric(msg.into())
    }

    pub fn graph6(offset: usize, message: impl Into<String>) -> Self {
        Error::Graph6 { offset, message: message.into() }
    }

    /// Process exit code for the CLI: 2 parameter, 3 capacity, 4 numeric.
    /// Parse and I/O problems count as parameter errors (bad input).
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parameter(_) | Error::Graph6 { .. } | Error::Io(_) => 2,
            Error::Capacity(_) => 3,
            Error::Numeric(_) => 4,
        }
    }
}

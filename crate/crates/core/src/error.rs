use thiserror::Error;

use crate::citation::Citation;

/// Errors raised by lattice, classification and recipe operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: expected length {expected}, got {actual}")]
    Shape { expected: usize, actual: usize },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("branch degrees must share one parity, got ({0}, {1}, {2}) [{cite}]", cite = Citation::SameParity.label())]
    Parity(i64, i64, i64),

    #[error("at most one branch degree may be zero, got ({0}, {1}, {2}); the cover would be disconnected [{cite}]", cite = Citation::Disconnected.label())]
    Disconnected(i64, i64, i64),

    #[error("{0}")]
    Domain(String),

    #[error("excluded case: {message} [{}]", citation.label())]
    ExcludedCase { message: String, citation: Citation },

    #[error("unknown lattice preset `{0}`")]
    UnknownPreset(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn consistency(msg: impl Into<String>) -> Self {
        Error::Consistency(msg.into())
    }

    /// Process exit code used by the CLI: 3 for internal consistency failures,
    /// 2 for everything caused by input.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Consistency(_) => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

use crate::engine::Violation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or semantically invalid input (graph, set, instance, parameters).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A sequence handed to a lift/projection did not validate.
    #[error("invalid sequence: {0}")]
    InvalidSequence(Violation),

    /// Syntax error in a text document.
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    /// A configured state, enumeration or size budget was exhausted.
    /// Never a "no" answer.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// A condition that a correctness argument rules out was observed.
    /// Only an implementation bug can produce this.
    #[error("internal consistency violated: {0}")]
    InternalConsistency(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::InternalConsistency(msg.into())
    }

    /// Exit status used by the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_) | Error::InvalidSequence(_) | Error::Syntax { .. } | Error::Io(_) => 2,
            Error::ResourceLimit(_) => 3,
            Error::InternalConsistency(_) => 4,
        }
    }
}

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed text input. `line` and `column` are 1-based.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    /// A caller broke a documented precondition (non-square cost matrix,
    /// forged witness, non-nested subuniverses, unknown vertex, ...).
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("size cap {requested} exceeds the hard limit of {limit}")]
    CapTooLarge { requested: usize, limit: usize },
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    pub(crate) fn contract(message: impl Into<String>) -> Self {
        Error::Contract(message.into())
    }
}

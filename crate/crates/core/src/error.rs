use thiserror::Error;

/// Errors raised by the library. Columns are 1-based character positions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("parse error at column {col}: {msg}")]
    Parse { col: usize, msg: String },

    #[error("unknown generator `{name}` at column {col}")]
    UnknownGenerator { name: String, col: usize },

    #[error("ordering {0} is not admissible and cannot drive a basis computation")]
    NotAdmissible(String),

    #[error("orderings {0} and {1} are not harmonious (their first ordering functions must be identical and extendible)")]
    NotHarmonious(String, String),
}

pub type Result<T> = std::result::Result<T, Error>;

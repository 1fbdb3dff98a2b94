use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The operation needs a two-dimensional polygon.
    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("polygon has non-integer vertices")]
    NotLattice,

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("graph order {order} exceeds the exhaustive-search cap of {cap} vertices")]
    SizeLimit { order: usize, cap: usize },

    #[error("insufficient edges: need {needed} edges after deleting the chosen vertices, only {available} remain")]
    InsufficientEdges { needed: usize, available: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}

use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("{0} is not an edge of the graph")]
    NotAnEdge(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("resource cap exceeded: {what} is {actual}, cap is {limit}")]
    ResourceCap {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("generator {0} is not a squarefree quadratic monomial")]
    NotQuadratic(String),

    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub fn invalid(message: impl Into<String>) -> Self {
        Error::InvalidArgument(message.into())
    }

    pub fn is_resource(&self) -> bool {
        matches!(self, Error::ResourceCap { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;

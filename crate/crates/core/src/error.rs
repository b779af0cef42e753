use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has {n} vertices, at most {max} are supported")]
    TooManyVertices { n: usize, max: usize },

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{what} is limited to {cap} vertices, got {n}")]
    TooLargeForExact { what: &'static str, n: usize, cap: usize },

    #[error("exhaustive search is capped at n = {cap}, got n = {n}")]
    SearchCapExceeded { n: usize, cap: usize },

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("argument outside the domain: {0}")]
    Domain(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}

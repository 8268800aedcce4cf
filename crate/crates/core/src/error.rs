use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("cannot stack on {u}{v}: not an edge")]
    NotAnEdge { u: usize, v: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("{what} of {n} exceeds the supported maximum of {cap}")]
    CapacityExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("malformed graph: {0}")]
    Malformed(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

/// Errors produced by graph construction, counting and verification.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("edge {0}-{1} is not present")]
    MissingEdge(usize, usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A size limit guarding exponential work was exceeded. Partial results are never returned.
    #[error("{what} has size {size}, above the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("graph is not a tree")]
    NotATree,

    #[error("graph is not a threshold graph")]
    NotThreshold,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("inconsistent input: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

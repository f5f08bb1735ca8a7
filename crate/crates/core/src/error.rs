use thiserror::Error;

/// Errors raised by graph construction, parsing and the resistance engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    InvalidVertex { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not a cactus; use the Laplacian oracle instead")]
    NotCactus,
    #[error("canonical labeling is limited to {limit} vertices (got {order}); raise the limit explicitly if you really need it")]
    TooLarge { order: usize, limit: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

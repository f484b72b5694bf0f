use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// Vertices are reported 1-based.
    #[error("edge {{{u},{v}}} is not an edge of the graph")]
    InvalidEdge { u: usize, v: usize },
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("graph of order {0} exceeds the supported maximum of {max}", max = crate::graph::MAX_ORDER)]
    OrderTooLarge(usize),
    #[error("graph has no edges")]
    NoEdges,
    #[error("graph has no pair of distinct vertices at distance at most two")]
    NoQualifyingPair,
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("gamma-set enumeration hit the cap of {cap} sets")]
    EnumerationIncomplete { cap: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

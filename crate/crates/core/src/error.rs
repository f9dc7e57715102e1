use alloc::string::String;

use crate::graph::{Edge, Vertex};

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),

    #[error("vertex {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange { vertex: Vertex, vertex_count: usize },

    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),

    #[error("edges {0} and {1} share a vertex")]
    OverlappingEdges(Edge, Edge),

    #[error("invalid alternating path: {0}")]
    InvalidPath(String),

    #[error("edge {0} belongs to both the matching and the K edge set")]
    EdgeInBoth(Edge),

    #[error("edge {0} belongs to the matching")]
    EdgeInMatching(Edge),

    #[error("edge {0} belongs to the graph")]
    EdgeInGraph(Edge),

    #[error("matching of size {size} is not maximum (maximum is {maximum})")]
    NotMaximum { size: usize, maximum: usize },

    #[error("no matching misses exactly vertex {0}")]
    NoNearPerfectMatching(Vertex),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("matching of color {color} has {size} edges, need at least {required}")]
    MatchingTooSmall {
        color: usize,
        size: usize,
        required: usize,
    },

    #[error("instance exceeds oracle bound: {0}")]
    OracleBound(String),

    /// A guarantee proved for every input failed. Never expected; callers
    /// should surface it loudly together with the instance.
    #[error("contract violation: {0}")]
    ContractViolation(String),
}

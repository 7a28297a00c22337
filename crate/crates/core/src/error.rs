use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("invalid cycle: {0}")]
    InvalidCycle(String),

    #[error("not a partition of the vertex set: {0}")]
    NotAPartition(String),

    #[error("part {0} does not induce a connected subgraph")]
    DisconnectedPart(usize),

    #[error("not a permutation of the vertex set")]
    NotAPermutation,

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("sidecar: {0}")]
    Sidecar(String),

    #[error("cap exceeded: {what} needs {size} vertices, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("graph is not chordal")]
    NotChordal,

    #[error("vertex set is not cyclable")]
    NotCyclable,

    #[error("cycle is missing heavy edge {0}-{1}")]
    MissingHeavyEdge(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;

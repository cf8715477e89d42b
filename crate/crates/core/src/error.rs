use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {index} is empty")]
    EmptyEdge { index: usize },
    #[error("vertex {vertex} lies in no edge")]
    UncoveredVertex { vertex: usize },
    #[error("edge {edge} contains unknown vertex {vertex}")]
    UnknownVertexInEdge { vertex: usize, edge: usize },
    #[error("empty vertex set")]
    EmptyVertexSet,
    #[error("empty edge set")]
    EmptyEdgeSet,
    #[error("unknown target {target}")]
    UnknownTarget { target: usize },
    #[error("operation removed every edge")]
    ResultEmpty,
    #[error("instance exceeds the configured search budget")]
    InstanceTooLarge,
    #[error("hypergraph is not balanced")]
    NotBalanced,
    #[error("search exhausted on a balanced instance; this is a defect")]
    SearchExhausted,
    #[error("matching for vertex {vertex} covers it")]
    MatchingCoversForbiddenVertex { vertex: usize },
    #[error("edge set {0:?} is not a matching")]
    NotAMatching(crate::set::IdSet),
    #[error("id {id} exceeds the fixed capacity {limit}")]
    CapacityExceeded { id: usize, limit: usize },
    #[error("invalid weight function: {0}")]
    InvalidWeight(String),
    #[error("generation failed: {0}")]
    GenerationFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
}

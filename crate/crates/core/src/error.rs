use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EdgeOutOfRange { u: usize, v: usize, n: usize },
    #[error("edge ({v}, {v}) is a self-loop")]
    SelfLoop { v: usize },
    #[error("vertex {vertex} is outside 0..{n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{family}: {constraint}")]
    InvalidParams {
        family: &'static str,
        constraint: String,
    },
    #[error("{op} requires a nonempty graph")]
    EmptyGraph { op: &'static str },
    #[error("{op} undefined for disconnected graphs")]
    Disconnected { op: &'static str },
    #[error("{op} requires a graph without full vertices, but vertex {vertex} is full")]
    FullVertex { op: &'static str, vertex: usize },
    #[error("{op} requires at least {min} vertices, got {n}")]
    TooFewVertices {
        op: &'static str,
        min: usize,
        n: usize,
    },
    #[error("{op} requires a graph with at least one edge")]
    Edgeless { op: &'static str },
    #[error("coalition candidates must be nonempty")]
    EmptySet,
    #[error("coalition candidates overlap at vertex {vertex}")]
    Overlap { vertex: usize },
    #[error("not a partition of V(G): {reason}")]
    NotAPartition { reason: String },
    #[error("part {index} is not a connected dominating set")]
    NotConnectedDominating { index: usize },
    #[error("not a valid connected coalition partition: {reason}")]
    InvalidCcPartition { reason: String },
    #[error("triple ({a}, {b}, {c}) is not made of distinct vertices")]
    NonDistinctTriple { a: usize, b: usize, c: usize },
    #[error("{op}: order {n} exceeds guard {limit}")]
    GuardExceeded {
        op: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("domatic expansion failed: {reason}")]
    ExpansionFailed { reason: String },
}

impl Error {
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::GuardExceeded { .. })
    }
}

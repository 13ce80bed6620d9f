use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {msg}")]
    Parse { offset: usize, msg: String },
    #[error("graph6 graphs with {0} vertices are not supported (maximum 62)")]
    UnsupportedSize(usize),
    #[error("length unit must be positive, got {0}")]
    InvalidUnit(String),
    #[error("graph has no edges; total length must be positive")]
    EmptyGraph,
    #[error("graphs are incomparable: total lengths {0} and {1} differ")]
    Incomparable(String, String),
    #[error("invalid subdivision: {0}")]
    InvalidSubdivision(String),
    #[error("cannot smooth vertex {vertex}: {reason}")]
    NotSmoothable { vertex: usize, reason: String },
    #[error("operation requires a simple graph (no self-loops or parallel edges)")]
    NotSimple,
    #[error("graph is not connected")]
    Disconnected,
    #[error("vertex {vertex} out of range (graph has {n} vertices)")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("length units differ: {0} vs {1}")]
    UnitMismatch(String, String),
    #[error("invalid family specification: {0}")]
    InvalidSpec(String),
    #[error("no closed-form secular equation known for {0}")]
    NoFormula(String),
    #[error("illegal permutation: {0}")]
    IllegalPermutation(String),
    #[error("internal consistency error: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

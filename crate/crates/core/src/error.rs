use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 input: {msg} (byte offset {offset})")]
    Graph6 { offset: usize, msg: String },

    #[error("graph has {0} vertices; at most {max} are supported", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex set is not independent: {0:?} and {1:?} are adjacent")]
    NotIndependent(usize, usize),

    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("invalid Cameron-Walker shape: {0}")]
    InvalidShape(String),

    #[error("invalid parameters for {family}: {msg}")]
    InvalidParams { family: &'static str, msg: String },

    #[error("{what} out of supported range: {msg}")]
    OutOfRange { what: &'static str, msg: String },

    #[error("expected a set of arity {expected}, got arity {got}")]
    Arity { expected: usize, got: usize },

    #[error("point {point:?} is not in {set}")]
    PointNotInSet { point: Vec<u32>, set: String },

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("cache: {0}")]
    Cache(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

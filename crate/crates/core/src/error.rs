use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has {n} vertices but this operation supports at most {cap}")]
    TooLarge { n: usize, cap: usize },

    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),

    #[error("vertex {0} appears more than once in the ordering")]
    DuplicateVertex(usize),

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("the connected variant cannot be validated from a color partition alone")]
    ConnectedVariantUnsupported,

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph is empty")]
    EmptyGraph,

    #[error("{what} = {value} exceeds the guard of {limit}")]
    GuardExceeded { what: &'static str, value: u128, limit: u128 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("assignment does not satisfy the formula: {0}")]
    NotSatisfying(String),

    #[error("malformed tree: {0}")]
    MalformedTree(String),
}

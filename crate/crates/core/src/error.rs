use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported graph order {0} (must be 1..=64)")]
    UnsupportedOrder(usize),

    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("malformed graph6 record: {0}")]
    Graph6(String),

    #[error("vertex set is empty")]
    EmptySet,

    #[error("invalid vertex sequence: {0}")]
    InvalidSequence(String),

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("operation undefined for graphs of order {0}")]
    UndefinedOrder(usize),

    #[error("oracle limited to order {limit}, got {order}")]
    OracleSize { order: usize, limit: usize },

    #[error("invalid parameters: {0}")]
    Parameter(String),

    #[error("no induced path of order {order} starting at vertex {vertex}")]
    Structure { vertex: usize, order: usize },

    #[error("graph is not {0}-connected")]
    Connectivity(usize),

    #[error("graph minus the induced path has no spanning {0}")]
    Spine(&'static str),

    #[error("generator limited to order {limit}, got {order}")]
    GeneratorSize { order: usize, limit: usize },

    #[error("malformed certificate: {0}")]
    Certificate(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("graph order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },

    #[error("operation requires a nonempty graph")]
    EmptyGraph,

    #[error("operation requires a connected graph")]
    Disconnected,

    #[error("operation requires two distinct vertices, got {0} twice")]
    SameVertex(usize),

    #[error("edge {0}-{1} is not present")]
    EdgeAbsent(usize, usize),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("input graph is not a tree")]
    NotATree,

    #[error("total domination is undefined on a graph with an isolated vertex")]
    IsolatedVertex,

    #[error("no power dominating set of size at most {0}")]
    BoundTooSmall(usize),

    #[error("pattern of order {0} is too large for minor search (max 6)")]
    PatternTooLarge(usize),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown parameter {0:?}")]
    UnknownParameter(String),

    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),

    #[error("{theorem}: universe cap exceeded ({message})")]
    CapExceeded { theorem: String, message: String },

    #[error("{0}: built-in enumeration disabled and no universe file supplied")]
    MissingUniverse(String),

    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

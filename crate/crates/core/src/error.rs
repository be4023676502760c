use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph has no edges")]
    NoEdges,
    #[error("graph is too small: {0}")]
    TooSmall(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("vertex of degree 0 raised to non-positive exponent {0}")]
    ZeroDegreeNegativeExponent(f64),
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("edge ({0}, {1}) is not a minimal edge")]
    NotMinimalEdge(usize, usize),
    #[error("order {n} exceeds the supported limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

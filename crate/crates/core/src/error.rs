use thiserror::Error;

/// Errors produced by graph construction, I/O and the solvers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {msg}")]
    Graph6Parse { offset: usize, msg: String },
    #[error("graph6 encoding supports at most 62 vertices, got {0}")]
    Graph6TooLarge(usize),
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph order {0} exceeds the design limit of 64 vertices")]
    TooManyVertices(usize),
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("operation requires a connected graph")]
    Disconnected,
    #[error("{0}")]
    Precondition(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("edge list parse error at line {line}: {msg}")]
    EdgeListParse { line: usize, msg: String },
    #[error("catalog error at line {line}: {msg}")]
    Catalog { line: usize, msg: String },
    #[error("unknown family spec '{0}'")]
    UnknownFamily(String),
    #[error("family parameter out of range: {0}")]
    FamilyParam(String),
    #[error("canonical form supported only for n <= {limit}, got {n}")]
    CanonicalTooLarge { n: usize, limit: usize },
    #[error("exhaustive enumeration supported only for n <= {limit}, got {n}")]
    EnumerationTooLarge { n: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

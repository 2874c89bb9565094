use thiserror::Error;

/// Errors produced by graph operations, decompositions and ordering builders.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{u}{v} is not an edge")]
    NotAnEdge { u: usize, v: usize },

    #[error("vertex sets overlap")]
    OverlappingSets,

    #[error("vertices {a} and {b} in one part are not twins")]
    NotTwins { a: usize, b: usize },

    #[error("{what}: size {size} exceeds the cap of {cap}")]
    SizeCap {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph is not a forest")]
    NotAForest,

    #[error("graph is not a tree")]
    NotATree,

    #[error("ordering is not a permutation of the vertex set")]
    NotAPermutation,

    #[error("unmarked vertices {x} and {y} are not linked in the decomposition")]
    NotLinked { x: usize, y: usize },

    #[error("vertex {0} of the decomposition is not an unmarked vertex")]
    NotUnmarked(usize),

    #[error("malformed decomposition: {0}")]
    MalformedDecomposition(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A structural fact the construction relies on did not hold for this input.
    #[error("structural check failed: {0}")]
    Structure(String),

    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),

    #[error("io: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    pub(crate) fn structure(message: impl Into<String>) -> Error {
        Error::Structure(message.into())
    }

    pub(crate) fn precondition(message: impl Into<String>) -> Error {
        Error::Precondition(message.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

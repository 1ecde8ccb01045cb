use thiserror::Error;

/// Errors produced by graph construction, parsing, and the exact solvers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graphs must have at least two vertices (got {0})")]
    TooFewVertices(usize),

    #[error("graph order {0} exceeds the {1}-vertex construction limit")]
    TooManyVertices(usize, usize),

    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex set width {found} does not match graph order {expected}")]
    WidthMismatch { expected: usize, found: usize },

    #[error("expected two distinct vertices, got {0} twice")]
    SameVertex(usize),

    #[error("graph is not identifiable: two vertices share a closed neighborhood")]
    NotIdentifiable,

    #[error("parameter is undefined for this graph")]
    UndefinedParameter,

    #[error("graph order {order} exceeds the exact-search cap {cap}")]
    TooLargeForExactSearch { order: usize, cap: usize },

    #[error("first factor of the product must be connected")]
    GNotConnected,

    #[error("the lexicographic product of these graphs is not identifiable")]
    NotIdentifiableProduct,

    #[error("the given set is not an identifying code of the product")]
    NotAnIdentifyingCode,

    #[error("order {n} is outside the closed-form range for {family}")]
    OutOfCorollaryRange { family: &'static str, n: usize },

    #[error("radius must be at least 2 (got {0})")]
    InvalidRadius(usize),

    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("unrecognized graph expression `{0}`")]
    UnknownExpression(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("graph would have {n} vertices, cap is {cap}")]
    TooManyVertices { n: usize, cap: usize },

    #[error("graph must have at least one vertex")]
    NoVertices,

    #[error("operation requires two distinct vertices, got {0} twice")]
    SameVertex(usize),

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("exact canonical form is capped at {cap} vertices (got {n}); enable large-graph mode explicitly")]
    CanonCapExceeded { n: usize, cap: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("not a pre-support structure: {0}")]
    NotPreSupport(String),

    #[error("invalid padding plan: {0}")]
    InvalidPlan(String),

    #[error("assembly check failed: {0}")]
    AssemblyFailed(String),

    #[error("unknown appendix gadget `{0}`")]
    UnknownGadget(String),

    #[error("unknown bound `{0}`")]
    UnknownBound(String),

    #[error("bound `{name}` outside its hypotheses: {reason}")]
    BoundHypothesis { name: String, reason: String },

    #[error("vertex {vertex} has degree {degree}, expected {expected}")]
    DegreeMismatch {
        vertex: usize,
        degree: usize,
        expected: usize,
    },

    #[error("graph is not K_{s}-saturated")]
    NotSaturated { s: usize },

    #[error("neighborhood pattern: {0}")]
    NeighborhoodPattern(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("certificate does not re-validate: {0}")]
    CertificateInvalid(String),

    #[error("invalid search query: {0}")]
    InvalidQuery(String),
}

pub type Result<T> = std::result::Result<T, Error>;

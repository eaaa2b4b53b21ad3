use thiserror::Error;

/// Errors produced by digraph construction, spectral computation and verification.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("digraph must have at least one vertex")]
    EmptyVertexSet,

    #[error("vertex {vertex} out of range for a digraph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop arc at vertex {0} is not allowed")]
    LoopArc(usize),

    #[error("operation requires a simple digraph (found arc multiplicity {multiplicity} on ({tail}, {head}))")]
    NotSimple {
        tail: usize,
        head: usize,
        multiplicity: u32,
    },

    #[error("operation requires a strongly connected digraph")]
    NotStronglyConnected,

    #[error("operation requires a nonempty arc set")]
    EmptyArcSet,

    #[error("vertex {0} has out-degree 0")]
    ZeroOutDegree(usize),

    #[error("arc ({tail}, {head}) is not present")]
    MissingArc { tail: usize, head: usize },

    #[error("n = {n} exceeds the supported maximum of {max} for {what}")]
    TooLarge {
        what: &'static str,
        n: usize,
        max: usize,
    },

    #[error("invalid parameters: {0}")]
    InvalidParameter(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("power iteration did not certify within {iterations} iterations (interval width {width:e})")]
    NotConverged { iterations: usize, width: f64 },

    #[error("matrix must be square and nonnegative")]
    InvalidMatrix,

    #[error("polynomial has no real root")]
    NoRealRoot,

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
}

pub type Result<T> = std::result::Result<T, Error>;

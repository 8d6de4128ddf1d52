use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph order {n} is outside 1..={cap}")]
    OrderOutOfRange { n: usize, cap: usize },

    #[error("vertex {v} out of range for a graph of order {n}")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("order {n} exceeds the enumeration cap {cap}")]
    EnumerationCap { n: usize, cap: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("the given set is a zero forcing set")]
    IsZeroForcing,

    #[error("the given set is not a zero forcing set")]
    NotZeroForcing,

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },

    #[error("unknown claim `{0}`")]
    UnknownClaim(String),

    #[error("construction failed validation: {0}")]
    ValidationFailed(String),

    #[error("independent routes disagree: {0}")]
    RouteDisagreement(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("disconnected pair ({0}, {1})")]
    DisconnectedPair(usize, usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("instance too large: {0}")]
    InstanceTooLarge(String),

    #[error("search space of {size} vertices exceeds the cap of {cap} (use force to override)")]
    CapExceeded { size: usize, cap: usize },

    #[error("input set not valid")]
    InvalidSet,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

use thiserror::Error;

/// Errors reported by every module of the engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range 1..={m}")]
    VertexOutOfRange { vertex: usize, m: usize },
    #[error("loop edge {{{0},{0}}}")]
    LoopEdge(usize),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("generator {index} out of range 1..={m}")]
    GeneratorOutOfRange { index: usize, m: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("resource cap exceeded: {0}")]
    CapExceeded(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

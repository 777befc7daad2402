use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("linear system is underdetermined ({free} free variables)")]
    Underdetermined { free: usize },
    #[error("incompatible family: {0}")]
    Incompatible(String),
    #[error("not a chain complex: {0}")]
    NotAComplex(String),
    #[error("not a simplicial vector space: {0}")]
    NotSimplicial(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

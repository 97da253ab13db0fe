use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("inexact operation: {0}")]
    Inexact(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("index {0} out of range")]
    Index(i32),
    #[error("subspace is not invariant: image of basis vector {index} leaves the span")]
    NotInvariant { index: usize },
    #[error("kind mismatch: {0}")]
    KindMismatch(String),
    #[error("not finite-dimensional: {0}")]
    NotFinite(String),
}

pub type Result<T> = std::result::Result<T, Error>;

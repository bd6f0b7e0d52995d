use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("cyclotomic order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("input exceeds supported size: {0}")]
    TooLarge(String),
    #[error("inconsistent module: {0}")]
    Inconsistent(String),
    #[error("parse error: {0}")]
    Parse(String),
}

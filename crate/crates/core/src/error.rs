use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("the zero vector generates no module")]
    ZeroVector,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("identity is not a distributive law between a commutative and an anticommutative product")]
    NotDistributive,
    #[error("product is not {0}")]
    Symmetry(&'static str),
    #[error("product violates the grading at e{i}e{j}")]
    Grading { i: usize, j: usize },
    #[error("algebra has no grading")]
    Ungraded,
    #[error("degree bound {0} exceeds the supported maximum")]
    DegreeBound(usize),
    #[error("inconsistent system: {0}")]
    Inconsistent(String),
    #[error("{path}:{line}:{column}: {message}")]
    Parse { path: String, line: usize, column: usize, message: String },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

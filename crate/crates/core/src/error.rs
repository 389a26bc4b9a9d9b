use thiserror::Error;

use crate::linalg::Field;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a supported prime modulus (need a prime below 2^32)")]
    NotPrime(u64),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not invertible (rank {rank} of {dim})")]
    NotInvertible { rank: usize, dim: usize },
    #[error("invalid structure: {0}")]
    Invalid(String),
    #[error("theorem regime mismatch: {0}")]
    Regime(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unresolved reference: {0}")]
    Unresolved(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

//! Errors for data construction and specializations.

use exact_arith::ArithError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DataError {
    #[error("invalid size or grading: {0}")]
    Invalid(String),
    #[error("unknown specialization kind {0:?}")]
    UnknownKind(String),
    #[error("matrix is not in block form diag(1, X'): {0}")]
    NotBlockForm(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

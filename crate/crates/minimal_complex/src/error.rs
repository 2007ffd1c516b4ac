//! Errors of the minimal complex construction.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum MinimalError {
    #[error("rank mismatch: {0}")]
    RankMismatch(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("identity failed: {0}")]
    Identity(String),
}

//! Errors of the Tor computations.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TorError {
    #[error("unexpected shape: {0}")]
    Shape(String),
    #[error("the presentation needs n >= 3, got {0}")]
    RankTooSmall(usize),
}

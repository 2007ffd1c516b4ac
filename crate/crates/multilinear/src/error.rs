//! Errors of the exterior-algebra layer.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MultilinearError {
    #[error("{0}: operands live on incompatible sides")]
    SideMismatch(&'static str),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("comultiplication split ({0},{1}) does not sum to degree {2}")]
    BadSplit(usize, usize, usize),
}

//! Errors for the companion constructions.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("basis change must be a constant integer matrix with determinant 1: {0}")]
    NotUnimodular(String),
    #[error("X is not of the form [[1, 0], [0, X']]: {0}")]
    NotBlockForm(String),
}

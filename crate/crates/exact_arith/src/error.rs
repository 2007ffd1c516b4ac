//! Error type shared by the arithmetic layer.

use thiserror::Error;

/// Failures of exact arithmetic, parsing and linear algebra.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    /// Two prime-field operands carry different moduli.
    #[error("coefficient-domain mismatch: modulus {0} vs {1}")]
    DomainMismatch(u64, u64),
    /// Weighted degree requested for the zero polynomial.
    #[error("weighted degree of the zero polynomial is undefined")]
    ZeroPolynomial,
    /// A modulus that is not an odd prime below 2^62.
    #[error("invalid modulus {0}: need an odd prime below 2^62")]
    BadModulus(u64),
    /// Division by a non-unit.
    #[error("division by a non-unit")]
    NotInvertible,
    /// Canonical text could not be parsed.
    #[error("parse error at `{0}`: {1}")]
    Parse(String, String),
    /// Exponent exceeded the per-variable storage width.
    #[error("exponent overflow in variable slot {0}")]
    ExponentOverflow(usize),
    /// Matrix shapes do not compose.
    #[error("shape mismatch: {0}")]
    Shape(String),
    /// A rational result was required to be integral.
    #[error("non-integral entry where an integer was required")]
    NonIntegral,
}

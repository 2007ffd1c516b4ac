//! Errors of the Gröbner engine.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("step budget of {budget} reductions exceeded with {pending} pairs pending")]
    Budget { budget: usize, pending: usize },
    #[error("{0} variables exceed the supported maximum of {1}")]
    TooManyVariables(usize, usize),
    #[error("generators live over different primes")]
    MixedPrimes,
    #[error("specialization: {0}")]
    Data(String),
}

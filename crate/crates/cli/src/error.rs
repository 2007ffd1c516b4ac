//! Errors of the front end and their exit codes.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("resource budget exceeded: {0}")]
    Budget(String),
    #[error("construction failed: {0}")]
    Build(String),
}

impl CliError {
    /// 2 for usage errors, 3 for exhausted budgets, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Io(_) | CliError::Build(_) => 1,
        }
    }
}

use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised by the algebra engines and the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The input is well formed but beyond what this crate can decide exactly.
    #[error("capability exceeded: {0}")]
    Capability(String),

    #[error("division by zero")]
    DivisionByZero,

    /// Integer factorization gave up; the caller gets no answer rather than a guess.
    #[error("unfactored cofactor {0}: beyond trial division and Pollard rho")]
    Unfactored(BigInt),

    /// Two exact computations disagreed. Always a bug.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("syntax error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn capability(msg: impl Into<String>) -> Self {
        Error::Capability(msg.into())
    }
}

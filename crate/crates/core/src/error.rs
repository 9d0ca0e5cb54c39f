use thiserror::Error;

/// Errors raised by the algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("inexact division, remainder {remainder}")]
    NonzeroRemainder { remainder: String },

    #[error("roots unavailable for a degree {degree} factor {poly}; supply factored input")]
    RootsUnavailable { degree: usize, poly: String },

    #[error("ambiguous integer-difference classification between {left} and {right}")]
    AmbiguousShift { left: String, right: String },

    #[error("radicand {0} is too large to factor")]
    RadicandTooLarge(String),

    #[error("{point} is not a zero of the polynomial")]
    NotAZero { point: String },

    #[error("cross-check failed: {0}")]
    CrossCheck(String),

    #[error("syntax error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("sampling budget exhausted after {attempts} attempts")]
    SamplingExhausted { attempts: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

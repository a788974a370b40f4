use thiserror::Error;

/// Errors raised by the library. Each variant maps onto one CLI exit status.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("modulus k = {0} is invalid (need k >= 2)")]
    InvalidModulus(u32),

    #[error("parameter mismatch: {0}")]
    Mismatch(String),

    #[error("code is not supported: {0}")]
    Unsupported(String),

    #[error("{what} exceeds the cap of {cap}")]
    CapExceeded { what: String, cap: u64 },

    #[error("parity mismatch: {0}")]
    Parity(String),

    #[error("k = {k} is above the limit {limit} for {what}")]
    KTooLarge { k: u32, limit: u32, what: &'static str },

    #[error("index [C : C ∩ C^⊥] = {0} is not a perfect square")]
    NotPerfectSquare(u64),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn cap(what: impl Into<String>, cap: u64) -> Self {
        Error::CapExceeded { what: what.into(), cap }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Caller-supplied parameters violate a documented precondition.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("reduction polynomial {0:#x} is not irreducible of the requested degree")]
    NotIrreducible(u32),

    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("element is not a unit of the chain ring")]
    NonUnit,

    #[error("{what} needs {needed} but the cap is {cap}")]
    CapExceeded {
        what: &'static str,
        needed: String,
        cap: String,
    },

    /// An algebraic identity that must hold by construction failed.
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;

//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Division by the zero polynomial.
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    /// `divrem_monic` was handed a divisor whose leading coefficient is not 1.
    #[error("divisor is not monic")]
    NonMonicDivisor,
    /// Exact division left a nonzero remainder.
    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,
    /// `gcd(0, 0)` has no greatest common divisor.
    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,
    /// A rational function was constructed with a zero denominator.
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    /// Division by the zero rational function.
    #[error("division by the zero rational function")]
    DivisionByZero,
    /// The zero rational function has no negative powers.
    #[error("zero cannot be raised to a negative power")]
    ZeroToNegativePower,
    /// A precondition on an operation's arguments was violated.
    #[error("{0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

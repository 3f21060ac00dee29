use thiserror::Error;

use crate::monomial::Monomial;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("undefined for unit monomial")]
    UnitMonomial,

    #[error("variable count mismatch: expected {expected}, found {found}")]
    VarCountMismatch { expected: usize, found: usize },

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(u32, u32),

    #[error("{divisor} does not divide {dividend}")]
    NotDivisible { divisor: Monomial, dividend: Monomial },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("ideal is not strongly stable: x{to}/x{from} * {generator} is not in the ideal")]
    NotStronglyStable {
        generator: Monomial,
        from: usize,
        to: usize,
    },

    #[error("the zero ideal is not allowed here")]
    ZeroIdeal,

    #[error("the unit ideal is not allowed here")]
    UnitIdeal,

    #[error("monomial {0} is not in the ideal")]
    NotInIdeal(Monomial),

    #[error("invalid marked set: {0}")]
    InvalidMarkedSet(String),

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("head term {0} does not have coefficient 1")]
    NonMonic(Monomial),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("ideal is not an m-truncation of a saturated strongly stable ideal")]
    NotTruncation,

    #[error("ideal is not saturated")]
    NotSaturated,

    #[error("not an admissible Hilbert polynomial: {0}")]
    NotAdmissible(String),

    #[error("operation requires a coefficient field")]
    NotAField,

    #[error("direct sum with the sous-escalier fails in degree {degree}: {reason}")]
    DirectSumFailure { degree: u32, reason: String },

    #[error("no value assigned to parameter {0}")]
    MissingAssignment(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

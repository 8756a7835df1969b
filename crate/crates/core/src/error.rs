//! Error types shared across the crate.

/// Errors produced by exact-arithmetic operations and sequence machinery.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Multiplicative inverse of zero, or a fraction with zero denominator.
    #[error("division by zero")]
    DivisionByZero,

    /// Formal power series division needs an invertible constant term.
    #[error("power series division requires a unit constant term in the denominator")]
    NonUnitConstantTerm,

    /// Evaluation at a point outside the admissible domain.
    #[error("evaluation outside domain: {0}")]
    Domain(String),

    /// Two routes that must agree exactly disagreed, or a value that must be
    /// rational carried a nonzero ω-part. Always indicates an arithmetic bug.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    /// Rejected constructor arguments.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

pub type Result<T> = std::result::Result<T, Error>;

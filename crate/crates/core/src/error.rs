use thiserror::Error;

/// Errors surfaced by the exact layers.
///
/// Contract violations that can only arise from a bug inside this crate
/// (e.g. mixing two different radicands in one arithmetic operation) panic
/// instead; everything a caller can trigger with valid-looking input is an
/// `Error`.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero polynomial")]
    ZeroPolynomialDivision,

    #[error("zero polynomial has no roots to isolate")]
    ZeroPolynomialRoots,

    #[error("polynomial has irrational coefficients; root isolation needs rational ones")]
    IrrationalCoefficients,

    #[error("operator coefficient is not expressible in generalized-power form: {0}")]
    NonPolynomializable(String),

    #[error("operator contains the formal parameter; specialize it first")]
    FormalParameter,

    #[error("matrix inverse check failed: P * Pinv != identity")]
    NotAnInverse,

    #[error("operator does not preserve the space: {0}")]
    NotInvariant(String),

    #[error("parameter domain violation: {0}")]
    Domain(String),

    #[error("banded action exceeds three-term bandwidth: state shift {0}")]
    Bandwidth(i64),

    #[error("leading recurrence coefficient is singular at level {0}")]
    SingularLeading(i64),

    #[error("no truncation degeneracy found: system is not quasi-exactly solvable in this grading")]
    NoTruncation,

    #[error("invalid parameter `{0}`: {1}")]
    Parse(String, String),

    #[error("{0}")]
    Numeric(String),
}

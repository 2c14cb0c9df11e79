//! Exact operator algebra for quasi-exactly-solvable spectral problems.
//!
//! The crate is organised in layers:
//! - [`exactnum`]: big rationals, a single adjoined square root, dense
//!   polynomials, rational functions, Sturm root isolation.
//! - [`weylop`]: normal-ordered differential operators in one variable with
//!   generalized powers `x^(q + t*a)`, and 2x2 matrices of them.
//! - [`transforms`]: gauge conjugations and algebraic changes of variable.
//! - [`spaces`]: invariant-space descriptors, invariance checking, restriction
//!   matrices, and the scalar/matrix correspondence for two-component spaces.
//! - [`catalog`]: constructors for the named operator families and exact
//!   verification of their algebraic relations.
//! - [`hamiltonians`]: end-to-end construction of the three model systems
//!   (sextic matrix potential, coupled elliptic potential, cosh-pair well).
//! - [`recurrence`]: banded actions, vector three-term recurrences, truncation
//!   polynomials, factorization checks.
//! - [`numverify`]: floating-point cross checks (Jacobi elliptic functions,
//!   finite-difference eigensolvers, spectrum comparison).
//! - [`cases`]: the runtime registry of model cases used by the CLI.

pub mod error;
pub mod exactnum;
pub mod weylop;
pub mod transforms;
pub mod spaces;
pub mod catalog;
pub mod hamiltonians;
pub mod recurrence;
pub mod numverify;
pub mod cases;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

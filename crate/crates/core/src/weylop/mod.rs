//! Normal-ordered algebra of linear differential operators in one variable.
//!
//! A term is `c(a) * x^(q + t*a) * d^k` where `a` is a single formal exponent
//! parameter, `c(a)` a polynomial in `a` with [`QuadExt`](crate::exactnum::QuadExt)
//! coefficients, `q` a rational offset, `t` an integer count of `a`, and `d`
//! the derivative. Operators are kept in a unique normal form: derivatives to
//! the right, terms sorted by `(k, t, q)`, no zero coefficients, no repeated
//! `(power, k)` pairs.

mod exponent;
mod matrix;
mod op;

pub use exponent::GenExponent;
pub use matrix::MatrixOperator;
pub use op::{DiffOperator, OperatorTerm};

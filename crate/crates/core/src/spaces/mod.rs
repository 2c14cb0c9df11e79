//! Invariant-space descriptors, membership and invariance checking,
//! restriction of operators to finite bases, and the correspondence between
//! scalar operators acting in a radical ring and 2x2 matrix operators.

mod exact_matrix;
mod fring;
mod monomial;

pub use exact_matrix::ExactMatrix;
pub use fring::{FOperator, FRing, FRingElement, FCase, TwoComponentSpace};
pub use monomial::{restrict_plain, AParam, CoupleSpace, InvarianceReport, MonomialSpace};


//! Vector three-term recurrence engine.
//!
//! A banded operator acting on a graded coefficient series induces a
//! recurrence `C(n) X(n+1) = (E I + A(n)) X(n) + B(n) X(n-1)` on de-staggered
//! state vectors. The engine derives the band matrices exactly from the
//! operator, generates the energy-polynomial coefficients with free initial
//! parameters carried symbolically, assembles truncation determinants, and
//! checks the factorization property past the truncation index.

mod banded;
mod engine;
mod factor;
mod moments;

pub use banded::BandedAction;
pub use engine::{
    EPolyVector, FreeSpec, Generated, Grading, RecurrenceSystem, Scaling, TruncationSpec,
};
pub use factor::{
    eigenvector_identity_check, scalar_factorization, vector_factorization, FactorizationReport,
};
pub use moments::{hankel_determinants, moments_of_monic_chain};

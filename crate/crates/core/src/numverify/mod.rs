//! Independent floating-point verification: Jacobi elliptic functions via
//! the arithmetic-geometric mean, finite-difference eigensolvers for scalar,
//! coupled and periodic problems, and the comparison harness that matches
//! algebraic levels against numerical spectra.
//!
//! Everything here is binary64 with error estimates from grid doubling; the
//! exact layers never depend on this module.

mod compare;
mod eigen;
mod elliptic;
mod grid;

pub use compare::{compare_levels, CompareReport, LevelMatch};
pub use eigen::{dense_symmetric_lowest, tridiagonal_lowest, BandedSymmetric};
pub use elliptic::{complete_elliptic_k, jacobi_sncndn};
pub use grid::{Domain, GridProblem, Potential, SpectrumNumeric};

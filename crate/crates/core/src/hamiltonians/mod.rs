//! End-to-end construction of the three model systems in physical and
//! algebraic (polynomial-preserving) form.
//!
//! Each builder runs the full gauge/variable-change pipeline with exact
//! arithmetic and verifies the result against an independently constructed
//! closed form, so a silent algebra slip cannot survive.

mod bose_hubbard;
mod lame;
mod polypot;

pub use bose_hubbard::{indicial_roots, BoseHubbardParams};
pub use lame::LameParams;
pub use polypot::PolyPotParams;

//! Constructors for the named operator families and exact verification of
//! their algebraic relations.
//!
//! Families are registered by name so the CLI (and tests) can select them at
//! runtime; see [`family_registry`]. Relations are likewise a name-keyed
//! registry over [`verify_relation`].

mod families;
mod relations;

pub use families::{
    affine_to_canonical, build, cap_j_minus, cap_j_plus, cap_j_zero, family_registry,
    j_minus, j_plus, j_zero, k_conj, kernel_plain, kernel_shifted, lame_halfinteger_solution,
    monomial_space_pullback_exponents, q_mix, q_mix_bar, q_raise, q_lower, s_triple,
    stilde_triple, w_minus, w_plus, Built, BuiltOperator, DeclaredSpace, FamilyInfo, FamilyParams,
};
pub use relations::{
    fit_anticommutator, fit_casimir, is_zero_on_space, proportionality_constant,
    relation_registry, verify_relation, AlgebraFitResult, RelationReport,
};


use crate::exactnum::Poly;
use crate::spaces::ExactMatrix;
use crate::{Error, Result};

use super::engine::{Generated, RecurrenceSystem};

/// Division outcomes past the truncation index.
#[derive(Clone, Debug)]
pub struct FactorizationReport {
    /// `(state offset j, every checked coefficient divisible)` for `j = 1..`.
    pub checked: Vec<(i64, bool)>,
    pub all_divisible: bool,
}

/// For a one-free (scalar) chain: is every `X(N + j)` divisible by `X(N)`?
pub fn scalar_factorization(
    sys: &RecurrenceSystem,
    gen: &Generated,
    truncation_state: i64,
    extra: i64,
) -> Result<FactorizationReport> {
    if sys.frees.len() != 1 || sys.dim() != 1 {
        return Err(Error::Domain("scalar factorization needs a one-component, one-free chain".into()));
    }
    let idx = |state: i64| sys.grading.stride * state + sys.grading.phases[0];
    let base = gen.coefficient(0, idx(truncation_state)).per_free[0].clone();
    if base.is_zero() {
        return Err(Error::Domain("truncation coefficient vanishes identically".into()));
    }
    let mut checked = vec![];
    let mut all = true;
    for j in 1..=extra {
        let p = gen.coefficient(0, idx(truncation_state + j)).per_free[0].clone();
        let (_, r) = p.divmod(&base)?;
        let ok = r.is_zero();
        all &= ok;
        checked.push((j, ok));
    }
    Ok(FactorizationReport { checked, all_divisible: all })
}

/// For a two-free vector system: substitute the adjugate ray of the
/// truncation conditions and check every later coefficient is divisible by
/// the truncation determinant.
pub fn vector_factorization(
    sys: &RecurrenceSystem,
    gen: &Generated,
    truncation_state: i64,
    extra: i64,
) -> Result<FactorizationReport> {
    let det = sys.truncation_polynomial(gen)?;
    let ray = sys.truncation_adjugate(gen)?;
    let mut checked = vec![];
    let mut all = true;
    for j in 0..=extra {
        let state = truncation_state + j;
        let mut ok = true;
        for comp in 0..sys.dim() {
            let idx = sys.grading.stride * state + sys.grading.phases[comp];
            let value = gen.coefficient(comp, idx).substitute(&ray);
            if value.is_zero() {
                continue;
            }
            let (_, r) = value.divmod(&det)?;
            ok &= r.is_zero();
        }
        all &= ok;
        checked.push((j, ok));
    }
    Ok(FactorizationReport { checked, all_divisible: all })
}

/// Exact eigenvector identity: with the adjugate ray substituted, the vector
/// of generated coefficients on the restriction basis satisfies
/// `(M - E I) v(E) = 0 (mod P(E))` componentwise, where `P` is the
/// truncation determinant. This certifies that every truncation root is an
/// eigenvalue of the restriction with the truncated series as eigenvector.
pub fn eigenvector_identity_check(
    restriction: &ExactMatrix,
    basis_values: &[Poly],
    truncation_poly: &Poly,
) -> Result<bool> {
    let n = restriction.dim();
    if basis_values.len() != n {
        return Err(Error::Domain("basis vector length mismatch".into()));
    }
    for i in 0..n {
        let mut acc = Poly::zero();
        for j in 0..n {
            acc = &acc + &basis_values[j].scale(restriction.get(i, j));
        }
        // subtract E * v_i
        acc = &acc - &basis_values[i].mul_xpow(1);
        if acc.is_zero() {
            continue;
        }
        let (_, r) = acc.divmod(truncation_poly)?;
        if !r.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

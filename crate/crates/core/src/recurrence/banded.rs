use std::collections::BTreeMap;

use crate::exactnum::{Poly, QuadExt};
use crate::weylop::{DiffOperator, MatrixOperator};
use crate::{Error, Result};

/// Exact action of an operator family on monomial series coefficients.
///
/// For each (output component, input component) pair, the action is a finite
/// list of `(shift, c(nu))`: the monomial `x^nu` of the input component
/// contributes `c(nu) x^(nu + shift)` to the output component, with `c` a
/// polynomial in the source index `nu`.
#[derive(Clone, Debug)]
pub struct BandedAction {
    dim: usize,
    entries: BTreeMap<(usize, usize), BTreeMap<i64, Poly>>,
}

impl BandedAction {
    pub fn dim(&self) -> usize {
        self.dim
    }

    fn insert(&mut self, out: usize, inn: usize, op: &DiffOperator) -> Result<()> {
        let cell = self.entries.entry((out, inn)).or_default();
        for t in op.terms() {
            let e = t.power.as_int().ok_or(Error::FormalParameter)?;
            let c = t.coeff.as_constant().ok_or(Error::FormalParameter)?;
            let shift = e - t.deriv as i64;
            // falling factorial nu (nu-1) ... (nu-k+1) as a polynomial in nu
            let mut fall = Poly::constant(c);
            for r in 0..t.deriv as i64 {
                fall = &fall
                    * &Poly::from_rat_coeffs(vec![crate::exactnum::rat(-r), crate::exactnum::rat(1)]);
            }
            let slot = cell.entry(shift).or_insert_with(Poly::zero);
            *slot = &*slot + &fall;
        }
        cell.retain(|_, p| !p.is_zero());
        Ok(())
    }

    pub fn from_scalar(op: &DiffOperator) -> Result<Self> {
        let mut b = BandedAction { dim: 1, entries: BTreeMap::new() };
        b.insert(0, 0, op)?;
        Ok(b)
    }

    pub fn from_matrix(op: &MatrixOperator) -> Result<Self> {
        let mut b = BandedAction { dim: 2, entries: BTreeMap::new() };
        for i in 0..2 {
            for j in 0..2 {
                b.insert(i, j, op.entry(i, j))?;
            }
        }
        Ok(b)
    }

    /// All shifts that occur between a component pair.
    pub fn shifts(&self, out: usize, inn: usize) -> Vec<i64> {
        self.entries
            .get(&(out, inn))
            .map(|m| m.keys().copied().collect())
            .unwrap_or_default()
    }

    /// The largest |shift| over all component pairs.
    pub fn bandwidth(&self) -> i64 {
        self.entries
            .values()
            .flat_map(|m| m.keys())
            .map(|s| s.abs())
            .max()
            .unwrap_or(0)
    }

    /// Coefficient polynomial (in the source index) for a given shift.
    pub fn coefficient_poly(&self, out: usize, inn: usize, shift: i64) -> Poly {
        self.entries
            .get(&(out, inn))
            .and_then(|m| m.get(&shift))
            .cloned()
            .unwrap_or_else(Poly::zero)
    }

    /// Coefficient evaluated at a concrete source index.
    pub fn coefficient(&self, out: usize, inn: usize, shift: i64, nu: i64) -> QuadExt {
        self.coefficient_poly(out, inn, shift)
            .eval(&QuadExt::from_rat(crate::exactnum::rat(nu)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::weylop::GenExponent;

    #[test]
    fn banded_action_of_raising_operator() {
        // j+(n) = x(D - n): action on x^nu is (nu - n) x^(nu+1)
        let n = 3;
        let op = crate::catalog::j_plus(n);
        let b = BandedAction::from_scalar(&op).unwrap();
        assert_eq!(b.shifts(0, 0), vec![1]);
        assert_eq!(b.coefficient(0, 0, 1, 5), QuadExt::from_int(2));
        assert_eq!(b.coefficient(0, 0, 1, 3), QuadExt::zero());
    }

    #[test]
    fn bandwidth_of_second_derivative() {
        let b = BandedAction::from_scalar(&DiffOperator::d_pow(2)).unwrap();
        assert_eq!(b.bandwidth(), 2);
        // d^2 x^nu = nu(nu-1) x^(nu-2)
        assert_eq!(b.coefficient(0, 0, -2, 4), QuadExt::from_int(12));
        let _ = GenExponent::int(0);
        let _ = rat(0);
    }
}

use std::fmt;

use crate::exactnum::{Rat, QuadExt};
use crate::weylop::{DiffOperator, GenExponent, MatrixOperator};
use crate::{Error, Result};

use super::ExactMatrix;

/// The exponent parameter `a`: either kept formal or specialized to a rational.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AParam {
    Formal,
    Value(Rat),
}

impl AParam {
    pub fn value(&self) -> Option<&Rat> {
        match self {
            AParam::Formal => None,
            AParam::Value(v) => Some(v),
        }
    }
}

/// Span of `{x^0..x^n}` and/or `{x^a..x^(a+m)}`.
///
/// Either sector may be absent. For integer specializations of `a` the two
/// sectors may overlap; the basis is de-duplicated then.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialSpace {
    plain: Option<i64>,
    shifted: Option<i64>,
    a: AParam,
}

/// One invariance violation: which basis element produced which stray term.
#[derive(Clone, Debug)]
pub struct InvarianceFailure {
    pub basis: String,
    pub exponent: String,
    pub coefficient: String,
}

#[derive(Clone, Debug, Default)]
pub struct InvarianceReport {
    pub failures: Vec<InvarianceFailure>,
}

impl InvarianceReport {
    pub fn invariant(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        if self.invariant() {
            Ok(())
        } else {
            let f = &self.failures[0];
            Err(Error::NotInvariant(format!(
                "{} maps {} outside the space (term {} * x^({}))",
                if self.failures.len() > 1 { "several basis elements, e.g." } else { "basis element" },
                f.basis,
                f.coefficient,
                f.exponent,
            )))
        }
    }
}

impl MonomialSpace {
    /// Full two-sector space with degree bounds `n` and `m`.
    pub fn two_sector(n: i64, m: i64, a: AParam) -> Self {
        assert!(n >= 0 && m >= 0);
        MonomialSpace { plain: Some(n), shifted: Some(m), a }
    }

    /// Polynomials of degree at most `n`.
    pub fn plain(n: i64) -> Self {
        assert!(n >= 0);
        MonomialSpace { plain: Some(n), shifted: None, a: AParam::Formal }
    }

    /// The shifted sector `x^a * P_m` alone.
    pub fn shifted(m: i64, a: AParam) -> Self {
        assert!(m >= 0);
        MonomialSpace { plain: None, shifted: Some(m), a }
    }

    pub fn plain_degree(&self) -> Option<i64> {
        self.plain
    }

    pub fn shifted_degree(&self) -> Option<i64> {
        self.shifted
    }

    pub fn a_param(&self) -> &AParam {
        &self.a
    }

    pub fn specialize(&self, value: &Rat) -> MonomialSpace {
        MonomialSpace { plain: self.plain, shifted: self.shifted, a: AParam::Value(value.clone()) }
    }

    /// Ordered basis exponents: plain sector by ascending degree, then the
    /// shifted sector by ascending degree, de-duplicated for integer `a`.
    pub fn basis_exponents(&self) -> Vec<GenExponent> {
        let mut out = vec![];
        if let Some(n) = self.plain {
            for j in 0..=n {
                out.push(GenExponent::int(j));
            }
        }
        if let Some(m) = self.shifted {
            for j in 0..=m {
                let e = match &self.a {
                    AParam::Formal => GenExponent::a_plus(j),
                    AParam::Value(v) => GenExponent::from_rat(v + crate::exactnum::rat(j)),
                };
                if !out.contains(&e) {
                    out.push(e);
                }
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.basis_exponents().len()
    }

    /// Membership of a single generalized exponent.
    pub fn contains(&self, e: &GenExponent) -> bool {
        match &self.a {
            AParam::Formal => {
                if e.a_count() == 0 {
                    match (self.plain, e.as_int()) {
                        (Some(n), Some(j)) => 0 <= j && j <= n,
                        _ => false,
                    }
                } else if e.a_count() == 1 {
                    match self.shifted {
                        Some(m) => {
                            e.offset().is_integer()
                                && {
                                    let j: i64 = e.offset().to_integer().try_into().unwrap_or(i64::MAX);
                                    0 <= j && j <= m
                                }
                        }
                        None => false,
                    }
                } else {
                    false
                }
            }
            AParam::Value(v) => {
                if e.a_count() != 0 {
                    return false;
                }
                if let (Some(n), Some(j)) = (self.plain, e.as_int()) {
                    if 0 <= j && j <= n {
                        return true;
                    }
                }
                if let Some(m) = self.shifted {
                    let rel = e.offset() - v;
                    if rel.is_integer() {
                        if let Ok(j) = TryInto::<i64>::try_into(rel.to_integer()) {
                            return 0 <= j && j <= m;
                        }
                    }
                }
                false
            }
        }
    }

    /// Apply the operator to every basis element and report exact failures.
    ///
    /// With a specialized `a` the operator is specialized first; with formal
    /// `a` the check is symbolic (exponent bookkeeping in `(q, t)` pairs).
    pub fn check_invariance(&self, op: &DiffOperator) -> InvarianceReport {
        let op = match &self.a {
            AParam::Formal => op.clone(),
            AParam::Value(v) => op.specialize_a(v),
        };
        let mut report = InvarianceReport::default();
        for b in self.basis_exponents() {
            for (e, c) in op.apply_to_monomial(&b) {
                if !self.contains(&e) {
                    report.failures.push(InvarianceFailure {
                        basis: format!("x^({b})"),
                        exponent: e.to_string(),
                        coefficient: c.display_with("a"),
                    });
                }
            }
        }
        report
    }

    /// Matrix of the operator in the canonical ordered basis.
    ///
    /// Requires a specialized `a` (or an `a`-free operator on a plain space)
    /// so the entries land in the quadratic extension.
    pub fn restrict(&self, op: &DiffOperator) -> Result<ExactMatrix> {
        let op = match &self.a {
            AParam::Formal => {
                if self.shifted.is_some() || !op.is_a_free() {
                    return Err(Error::FormalParameter);
                }
                op.clone()
            }
            AParam::Value(v) => op.specialize_a(v),
        };
        let basis = self.basis_exponents();
        let index = |e: &GenExponent| basis.iter().position(|b| b == e);
        let n = basis.len();
        let mut m = ExactMatrix::zero(n);
        for (j, b) in basis.iter().enumerate() {
            for (e, c) in op.apply_to_monomial(b) {
                let i = index(&e).ok_or_else(|| {
                    Error::NotInvariant(format!("image of x^({b}) contains x^({e})"))
                })?;
                let v = c.as_constant().ok_or(Error::FormalParameter)?;
                let prev = m.get(i, j).clone();
                m.set(i, j, &prev + &v);
            }
        }
        Ok(m)
    }
}

impl fmt::Display for MonomialSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = match &self.a {
            AParam::Formal => "a".to_string(),
            AParam::Value(v) => v.to_string(),
        };
        match (self.plain, self.shifted) {
            (Some(n), Some(m)) => write!(f, "span{{x^0..x^{n}}} + x^({a})*span{{x^0..x^{m}}}"),
            (Some(n), None) => write!(f, "span{{x^0..x^{n}}}"),
            (None, Some(m)) => write!(f, "x^({a})*span{{x^0..x^{m}}}"),
            (None, None) => write!(f, "{{0}}"),
        }
    }
}

/// Couples of polynomials `(P_top, P_bottom)^t` with independent degree bounds.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CoupleSpace {
    pub top: i64,
    pub bottom: i64,
}

impl CoupleSpace {
    pub fn new(top: i64, bottom: i64) -> Self {
        assert!(top >= 0 && bottom >= 0);
        CoupleSpace { top, bottom }
    }

    pub fn dim(&self) -> usize {
        (self.top + self.bottom + 2) as usize
    }

    fn sector_degree(&self, s: usize) -> i64 {
        if s == 0 {
            self.top
        } else {
            self.bottom
        }
    }

    /// Basis index of `x^j` in sector `s` (top sector first, ascending degree).
    fn index(&self, s: usize, j: i64) -> Option<usize> {
        if j < 0 || j > self.sector_degree(s) {
            return None;
        }
        Some(if s == 0 { j as usize } else { (self.top + 1 + j) as usize })
    }

    pub fn check_invariance(&self, op: &MatrixOperator) -> InvarianceReport {
        let mut report = InvarianceReport::default();
        for s_in in 0..2 {
            for j in 0..=self.sector_degree(s_in) {
                for s_out in 0..2 {
                    let entry = op.entry(s_out, s_in);
                    for (e, c) in entry.apply_to_monomial(&GenExponent::int(j)) {
                        let ok = e
                            .as_int()
                            .map_or(false, |q| 0 <= q && q <= self.sector_degree(s_out));
                        if !ok {
                            report.failures.push(InvarianceFailure {
                                basis: format!("e{}*x^{}", s_in + 1, j),
                                exponent: format!("e{}*x^({})", s_out + 1, e),
                                coefficient: c.display_with("a"),
                            });
                        }
                    }
                }
            }
        }
        report
    }

    /// Matrix of a 2x2 operator in the ordered couple basis.
    pub fn restrict(&self, op: &MatrixOperator) -> Result<ExactMatrix> {
        self.check_invariance(op).into_result()?;
        let n = self.dim();
        let mut m = ExactMatrix::zero(n);
        for s_in in 0..2 {
            for j in 0..=self.sector_degree(s_in) {
                let col = self.index(s_in, j).unwrap();
                for s_out in 0..2 {
                    for (e, c) in op.entry(s_out, s_in).apply_to_monomial(&GenExponent::int(j)) {
                        let q = e.as_int().unwrap();
                        let row = self.index(s_out, q).unwrap();
                        let v = c.as_constant().ok_or(Error::FormalParameter)?;
                        let prev = m.get(row, col).clone();
                        m.set(row, col, &prev + &v);
                    }
                }
            }
        }
        Ok(m)
    }
}

impl fmt::Display for CoupleSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(P_{}, P_{})^t", self.top, self.bottom)
    }
}

/// Convenience: restriction entries for a scalar operator on `P_n`.
pub fn restrict_plain(op: &DiffOperator, n: i64) -> Result<ExactMatrix> {
    MonomialSpace::plain(n).restrict(op)
}

#[allow(dead_code)]
pub(crate) fn quad(v: i64) -> QuadExt {
    QuadExt::from_int(v)
}

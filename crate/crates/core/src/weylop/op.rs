use std::collections::BTreeMap;
use std::fmt;

use crate::exactnum::{rat, Poly, QuadExt, Rat};

use super::exponent::{const_poly, const_poly_q};
use super::GenExponent;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct TermKey {
    deriv: u32,
    power: GenExponent,
}

/// One normal-ordered term `coeff(a) * x^power * d^deriv`.
#[derive(Clone, PartialEq, Eq)]
pub struct OperatorTerm {
    pub coeff: Poly,
    pub power: GenExponent,
    pub deriv: u32,
}

/// Normal-ordered linear differential operator.
///
/// The zero operator is the empty term map; equality of operators is equality
/// of normal forms.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct DiffOperator {
    terms: BTreeMap<TermKey, Poly>,
}

fn binomial(n: u32, k: u32) -> Rat {
    let mut acc = Rat::from_integer(1.into());
    for i in 0..k {
        acc = acc * rat((n - i) as i64) / rat((i + 1) as i64);
    }
    acc
}

impl DiffOperator {
    pub fn zero() -> Self {
        DiffOperator { terms: BTreeMap::new() }
    }

    pub fn identity() -> Self {
        DiffOperator::term(Poly::one(), GenExponent::int(0), 0)
    }

    pub fn term(coeff: Poly, power: GenExponent, deriv: u32) -> Self {
        let mut op = DiffOperator::zero();
        op.push(coeff, power, deriv);
        op
    }

    /// Multiplication by `x^e`.
    pub fn x_pow(e: GenExponent) -> Self {
        DiffOperator::term(Poly::one(), e, 0)
    }

    /// `d^k`.
    pub fn d_pow(k: u32) -> Self {
        DiffOperator::term(Poly::one(), GenExponent::int(0), k)
    }

    /// Multiplication operator by a constant (polynomial in `a`).
    pub fn const_op(c: Poly) -> Self {
        DiffOperator::term(c, GenExponent::int(0), 0)
    }

    pub fn rat_op(c: Rat) -> Self {
        DiffOperator::const_op(const_poly(c))
    }

    pub fn quad_op(c: QuadExt) -> Self {
        DiffOperator::const_op(const_poly_q(c))
    }

    /// `D = x d`.
    pub fn big_d() -> Self {
        DiffOperator::term(Poly::one(), GenExponent::int(1), 1)
    }

    /// Multiplication operator by a polynomial in `x` with constant coefficients.
    pub fn from_x_poly(p: &Poly) -> Self {
        let mut op = DiffOperator::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                op.push(const_poly_q(c.clone()), GenExponent::int(i as i64), 0);
            }
        }
        op
    }

    fn push(&mut self, coeff: Poly, power: GenExponent, deriv: u32) {
        if coeff.is_zero() {
            return;
        }
        let key = TermKey { deriv, power };
        match self.terms.get_mut(&key) {
            Some(c) => {
                let s = &*c + &coeff;
                if s.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *c = s;
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = OperatorTerm> + '_ {
        self.terms.iter().map(|(k, c)| OperatorTerm {
            coeff: c.clone(),
            power: k.power.clone(),
            deriv: k.deriv,
        })
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn max_deriv_order(&self) -> u32 {
        self.terms.keys().map(|k| k.deriv).max().unwrap_or(0)
    }

    /// Largest and smallest degree shift `power - deriv` over all terms
    /// (plain integer exponents only; `None` when empty or non-integer).
    pub fn degree_shift_range(&self) -> Option<(i64, i64)> {
        let mut lo = i64::MAX;
        let mut hi = i64::MIN;
        for k in self.terms.keys() {
            let e = k.power.as_int()?;
            let s = e - k.deriv as i64;
            lo = lo.min(s);
            hi = hi.max(s);
        }
        if lo > hi {
            None
        } else {
            Some((lo, hi))
        }
    }

    pub fn add(&self, other: &DiffOperator) -> DiffOperator {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.push(c.clone(), k.power.clone(), k.deriv);
        }
        out
    }

    pub fn sub(&self, other: &DiffOperator) -> DiffOperator {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> DiffOperator {
        DiffOperator { terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect() }
    }

    pub fn scale(&self, c: &Poly) -> DiffOperator {
        if c.is_zero() {
            return DiffOperator::zero();
        }
        let mut out = DiffOperator::zero();
        for (k, v) in &self.terms {
            out.push(v * c, k.power.clone(), k.deriv);
        }
        out
    }

    pub fn scale_rat(&self, c: &Rat) -> DiffOperator {
        self.scale(&const_poly(c.clone()))
    }

    pub fn scale_quad(&self, c: &QuadExt) -> DiffOperator {
        self.scale(&const_poly_q(c.clone()))
    }

    /// Normal-ordered product `self . other` via the Leibniz rule
    /// `d^k x^s = sum_i C(k,i) s^(falling i) x^(s-i) d^(k-i)`.
    pub fn compose(&self, other: &DiffOperator) -> DiffOperator {
        let mut out = DiffOperator::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let cc = c1 * c2;
                for i in 0..=k1.deriv {
                    let fall = k2.power.falling(i);
                    if fall.is_zero() {
                        continue;
                    }
                    let coeff = (&cc * &fall).scale(&QuadExt::from_rat(binomial(k1.deriv, i)));
                    let power = k1.power.add(&k2.power).sub_int(i as i64);
                    out.push(coeff, power, k1.deriv - i + k2.deriv);
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &DiffOperator) -> DiffOperator {
        self.compose(other).sub(&other.compose(self))
    }

    pub fn pow(&self, e: u32) -> DiffOperator {
        let mut acc = DiffOperator::identity();
        for _ in 0..e {
            acc = acc.compose(self);
        }
        acc
    }

    /// Image of the monomial `x^s`, as exponent/coefficient pairs
    /// (coefficients are polynomials in `a`).
    pub fn apply_to_monomial(&self, s: &GenExponent) -> Vec<(GenExponent, Poly)> {
        let mut acc: BTreeMap<GenExponent, Poly> = BTreeMap::new();
        for (k, c) in &self.terms {
            let fall = s.falling(k.deriv);
            if fall.is_zero() {
                continue;
            }
            let coeff = c * &fall;
            let e = s.add(&k.power).sub_int(k.deriv as i64);
            match acc.get_mut(&e) {
                Some(v) => *v = &*v + &coeff,
                None => {
                    acc.insert(e, coeff);
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Substitute `a := value` in all coefficients and exponents, merging
    /// terms that collide after specialization.
    pub fn specialize_a(&self, value: &Rat) -> DiffOperator {
        let v = QuadExt::from_rat(value.clone());
        let mut out = DiffOperator::zero();
        for (k, c) in &self.terms {
            let coeff = Poly::constant(c.eval(&v));
            out.push(coeff, k.power.specialize(value), k.deriv);
        }
        out
    }

    /// True if neither coefficients nor exponents mention the formal parameter.
    pub fn is_a_free(&self) -> bool {
        self.terms
            .iter()
            .all(|(k, c)| k.power.a_count() == 0 && c.degree().map_or(true, |d| d == 0))
    }

    /// Product `(D - s_0)(D - s_1)...` for shifts given as polynomials in `a`.
    pub fn prod_d_minus(shifts: &[Poly]) -> DiffOperator {
        let mut acc = DiffOperator::identity();
        for s in shifts {
            let factor = DiffOperator::big_d().sub(&DiffOperator::const_op(s.clone()));
            acc = acc.compose(&factor);
        }
        acc
    }

    /// Render as a sorted term list `c * x^(power) * d^k`.
    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = vec![];
        for (k, c) in &self.terms {
            let mut factors = vec![];
            let coeff_str = match c.as_constant() {
                Some(q) => {
                    let s = q.to_string();
                    if s.contains('+') || s.contains("sqrt") || s.contains('-') && !s.starts_with('-') {
                        format!("({s})")
                    } else {
                        s
                    }
                }
                None => format!("({})", c.display_with("a")),
            };
            factors.push(coeff_str);
            if !k.power.is_zero() {
                let e = &k.power;
                let simple = e.is_plain() && e.offset().is_integer() && !e.offset().lt(&rat(0));
                if simple {
                    factors.push(format!("x^{}", e.offset()));
                } else {
                    factors.push(format!("x^({e})"));
                }
            }
            if k.deriv > 0 {
                factors.push(format!("d^{}", k.deriv));
            }
            parts.push(factors.join(" * "));
        }
        parts.join(" + ")
    }
}

impl fmt::Display for DiffOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl fmt::Debug for DiffOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d() -> DiffOperator {
        DiffOperator::d_pow(1)
    }

    fn x() -> DiffOperator {
        DiffOperator::x_pow(GenExponent::int(1))
    }

    #[test]
    fn leibniz_d_after_x() {
        // d . x = x d + 1
        let got = d().compose(&x());
        let want = x().compose(&d()).add(&DiffOperator::identity());
        assert_eq!(got, want);
        assert_eq!(got.display(), "1 + 1 * x^1 * d^1");
    }

    #[test]
    fn commutator_with_self_vanishes() {
        let a = x().compose(&d()).add(&DiffOperator::d_pow(2));
        assert!(a.commutator(&a).is_zero());
    }

    #[test]
    fn action_on_constant() {
        let img = d().apply_to_monomial(&GenExponent::int(0));
        assert!(img.is_empty());
    }

    #[test]
    fn action_with_formal_exponent() {
        // d x^a = a x^(a-1)
        let img = d().apply_to_monomial(&GenExponent::a_plus(0));
        assert_eq!(img.len(), 1);
        let (e, c) = &img[0];
        assert_eq!(e, &GenExponent::new(rat(-1), 1));
        assert_eq!(c, &Poly::from_rat_coeffs(vec![rat(0), rat(1)]));
    }

    #[test]
    fn specialize_is_a_homomorphism_sample() {
        // (x^a d) . (x^(-a) d) specialized at a = 7/3 equals the product of the
        // specialized factors.
        let one_third = Rat::new(7.into(), 3.into());
        let p = DiffOperator::term(Poly::one(), GenExponent::a_plus(0), 1);
        let q = DiffOperator::term(Poly::one(), GenExponent::new(rat(0), -1), 1);
        let lhs = p.compose(&q).specialize_a(&one_third);
        let rhs = p.specialize_a(&one_third).compose(&q.specialize_a(&one_third));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn negative_and_fractional_powers_compose() {
        // (2 x^(1/2) d)^2 = 4 x d^2 + 2 d
        let half_step = DiffOperator::term(
            Poly::from_int(2),
            GenExponent::from_rat(Rat::new(1.into(), 2.into())),
            1,
        );
        let sq = half_step.compose(&half_step);
        let want = DiffOperator::term(Poly::from_int(4), GenExponent::int(1), 2)
            .add(&DiffOperator::term(Poly::from_int(2), GenExponent::int(0), 1));
        assert_eq!(sq, want);
    }
}

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::{Poly, QuadExt};
use crate::{Error, Result};

/// Reduced rational function `num / den` with monic denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RationalFunction { num, den: Poly::one() };
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.degree() > Some(0) || g.degree().is_none() {
            let (n, rn) = num.divmod(&g).unwrap();
            let (d, rd) = den.divmod(&g).unwrap();
            debug_assert!(rn.is_zero() && rd.is_zero());
            (n, d)
        } else {
            (num, den)
        };
        let lead = d.leading().unwrap().inverse();
        if !lead.is_one() {
            n = n.scale(&lead);
            d = d.scale(&lead);
        }
        RationalFunction { num: n, den: d }
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction { num: p, den: Poly::one() }
    }

    pub fn from_const(c: QuadExt) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        if self.is_polynomial() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomialDivision);
        }
        Ok(RationalFunction::new(self.den.clone(), self.num.clone()))
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RationalFunction::new(n, &self.den * &self.den)
    }

    pub fn scale(&self, c: &QuadExt) -> Self {
        RationalFunction::new(self.num.scale(c), self.den.clone())
    }

    pub fn eval(&self, x: &QuadExt) -> Option<QuadExt> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(&self.num.eval(x) / &d)
        }
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_rf_ops {
    ($($t:ident :: $f:ident),*) => {$(
        impl $t for RationalFunction {
            type Output = RationalFunction;
            fn $f(self, rhs: RationalFunction) -> RationalFunction { (&self).$f(&rhs) }
        }
    )*};
}
forward_rf_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_rat_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn reduces_to_lowest_terms_with_monic_denominator() {
        // (x^2 - 1) / (2x - 2) = (x + 1) / 2
        let r = RationalFunction::new(p(&[-1, 0, 1]), p(&[-2, 2]));
        assert!(r.denominator().is_one());
        assert_eq!(r.numerator(), &Poly::from_rat_coeffs(vec![super::super::ratio(1, 2), super::super::ratio(1, 2)]));
    }

    #[test]
    fn derivative_quotient_rule() {
        // d/dx (1/x) = -1/x^2
        let r = RationalFunction::new(p(&[1]), p(&[0, 1]));
        let d = r.derivative();
        assert_eq!(d, RationalFunction::new(p(&[-1]), p(&[0, 0, 1])));
    }
}

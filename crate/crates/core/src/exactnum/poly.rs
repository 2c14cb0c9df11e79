use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Rat, QuadExt};
use crate::{Error, Result};

/// Dense univariate polynomial over [`QuadExt`], indexed by degree.
///
/// Invariant: the highest stored coefficient is nonzero; the zero polynomial
/// stores no coefficients and reports degree `None`.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<QuadExt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(QuadExt::one())
    }

    pub fn constant(c: QuadExt) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn from_rat(r: Rat) -> Self {
        Poly::constant(QuadExt::from_rat(r))
    }

    pub fn from_int(n: i64) -> Self {
        Poly::constant(QuadExt::from_int(n))
    }

    /// `c * X^k`.
    pub fn monomial(c: QuadExt, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![QuadExt::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn x() -> Self {
        Poly::monomial(QuadExt::one(), 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<QuadExt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_rat_coeffs(coeffs: Vec<Rat>) -> Self {
        Poly::from_coeffs(coeffs.into_iter().map(QuadExt::from_rat).collect())
    }

    pub fn coeffs(&self) -> &[QuadExt] {
        &self.coeffs
    }

    /// Coefficient of `X^k` (zero beyond the stored degree).
    pub fn coeff(&self, k: usize) -> QuadExt {
        self.coeffs.get(k).cloned().unwrap_or_else(QuadExt::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading(&self) -> Option<&QuadExt> {
        self.coeffs.last()
    }

    /// `Some(c)` when the polynomial is a constant (including zero).
    pub fn as_constant(&self) -> Option<QuadExt> {
        match self.coeffs.len() {
            0 => Some(QuadExt::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &QuadExt) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul_xpow(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![QuadExt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&super::rat(k as i64)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &QuadExt) -> QuadExt {
        let mut acc = QuadExt::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn eval_rat(&self, x: &Rat) -> QuadExt {
        self.eval(&QuadExt::from_rat(x.clone()))
    }

    /// Substitute another polynomial for the variable.
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Quotient and remainder with `deg(rem) < deg(divisor)`; exact.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let dd = divisor.degree().ok_or(Error::ZeroPolynomialDivision)?;
        let inv_lead = divisor.leading().unwrap().inverse();
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return Ok((Poly::zero(), self.clone()));
        }
        let qlen = rem.len() - dd;
        let mut quot = vec![QuadExt::zero(); qlen];
        for i in (0..qlen).rev() {
            let c = &rem[i + dd] * &inv_lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let t = &c * dc;
                rem[i + j] = &rem[i + j] - &t;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// Monic greatest common divisor (zero when both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        match a.leading() {
            Some(l) if !l.is_one() => {
                let inv = l.inverse();
                a.scale(&inv)
            }
            _ => a,
        }
    }

    /// Squarefree part `p / gcd(p, p')`, monic.
    pub fn squarefree(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            let inv = self.leading().unwrap().inverse();
            return self.scale(&inv);
        }
        let (q, r) = self.divmod(&g).unwrap();
        debug_assert!(r.is_zero());
        let inv = q.leading().unwrap().inverse();
        q.scale(&inv)
    }

    /// True when every coefficient has zero surd part.
    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_rational())
    }

    pub fn rat_coeffs(&self) -> Result<Vec<Rat>> {
        self.coeffs
            .iter()
            .map(|c| c.as_rat().cloned().ok_or(Error::IrrationalCoefficients))
            .collect()
    }

    /// Monic rescale (no-op on zero).
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(l) if !l.is_one() => self.scale(&l.inverse()),
            _ => self.clone(),
        }
    }

    /// Render with a chosen variable name, lowest degree first.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let minus_one = QuadExt::from_int(-1);
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let body = match k {
                0 => cs,
                1 if c.is_one() => var.to_string(),
                1 if *c == minus_one => format!("-{var}"),
                1 => format!("{cs}*{var}"),
                _ if c.is_one() => format!("{var}^{k}"),
                _ if *c == minus_one => format!("-{var}^{k}"),
                _ => format!("{cs}*{var}^{k}"),
            };
            if out.is_empty() {
                out = body;
            } else if let Some(rest) = body.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&body);
            }
        }
        out
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(&self.coeff(i) + &rhs.coeff(i));
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(&self.coeff(i) - &rhs.coeff(i));
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![QuadExt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = a * b;
                coeffs[i + j] = &coeffs[i + j] + &t;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_poly_ops {
    ($($t:ident :: $f:ident),*) => {$(
        impl $t for Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly { (&self).$f(&rhs) }
        }
    )*};
}
forward_poly_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("x"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("x"))
    }
}

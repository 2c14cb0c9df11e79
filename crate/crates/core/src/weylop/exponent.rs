use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};

use crate::exactnum::{Poly, QuadExt, Rat};

/// Generalized exponent `q + t*a` with rational offset `q` and integer `t`.
///
/// `a` is the single formal parameter of the algebra. All spaces of interest
/// use `t` in `{-1, 0, +1}`, but operator products (kernel compositions,
/// mixing-operator squares) legitimately produce larger `|t|`, so `t` is an
/// unrestricted integer here; membership checks downstream reject exponents a
/// space cannot hold.
#[derive(Clone, PartialEq, Eq)]
pub struct GenExponent {
    offset: Rat,
    a_count: i64,
}

impl GenExponent {
    pub fn new(offset: Rat, a_count: i64) -> Self {
        GenExponent { offset, a_count }
    }

    pub fn int(k: i64) -> Self {
        GenExponent { offset: crate::exactnum::rat(k), a_count: 0 }
    }

    pub fn from_rat(q: Rat) -> Self {
        GenExponent { offset: q, a_count: 0 }
    }

    /// `a + k`.
    pub fn a_plus(k: i64) -> Self {
        GenExponent { offset: crate::exactnum::rat(k), a_count: 1 }
    }

    pub fn offset(&self) -> &Rat {
        &self.offset
    }

    pub fn a_count(&self) -> i64 {
        self.a_count
    }

    pub fn is_zero(&self) -> bool {
        self.offset.is_zero() && self.a_count == 0
    }

    pub fn is_plain(&self) -> bool {
        self.a_count == 0
    }

    /// Plain integer value if `t = 0` and the offset is an integer.
    pub fn as_int(&self) -> Option<i64> {
        if self.a_count != 0 || !self.offset.is_integer() {
            return None;
        }
        // Offsets in this artifact stay tiny; i64 is ample.
        self.offset.to_integer().try_into().ok()
    }

    pub fn add(&self, other: &GenExponent) -> GenExponent {
        GenExponent { offset: &self.offset + &other.offset, a_count: self.a_count + other.a_count }
    }

    pub fn sub_int(&self, k: i64) -> GenExponent {
        GenExponent { offset: &self.offset - crate::exactnum::rat(k), a_count: self.a_count }
    }

    pub fn add_rat(&self, q: &Rat) -> GenExponent {
        GenExponent { offset: &self.offset + q, a_count: self.a_count }
    }

    /// The exponent as a degree-(<=1) polynomial in `a`.
    pub fn as_poly_in_a(&self) -> Poly {
        Poly::from_rat_coeffs(vec![self.offset.clone(), crate::exactnum::rat(self.a_count)])
    }

    /// Substitute a rational value for `a`.
    pub fn specialize(&self, a: &Rat) -> GenExponent {
        GenExponent {
            offset: &self.offset + crate::exactnum::rat(self.a_count) * a,
            a_count: 0,
        }
    }

    /// Falling factorial `s (s-1) ... (s-k+1)` as a polynomial in `a`.
    pub fn falling(&self, k: u32) -> Poly {
        let mut acc = Poly::one();
        for r in 0..k as i64 {
            acc = &acc * &self.sub_int(r).as_poly_in_a();
        }
        acc
    }
}

impl PartialOrd for GenExponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GenExponent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.a_count.cmp(&other.a_count).then_with(|| self.offset.cmp(&other.offset))
    }
}

impl fmt::Display for GenExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = &self.offset;
        let t = self.a_count;
        if t == 0 {
            return write!(f, "{q}");
        }
        let a_part = match t {
            1 => "a".to_string(),
            -1 => "-a".to_string(),
            _ => format!("{t}*a"),
        };
        if q.is_zero() {
            write!(f, "{a_part}")
        } else if t > 0 {
            write!(f, "{q}+{a_part}")
        } else {
            write!(f, "{q}{a_part}")
        }
    }
}

impl fmt::Debug for GenExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Constant polynomial-in-`a` from a rational.
pub(crate) fn const_poly(c: Rat) -> Poly {
    Poly::from_rat(c)
}

/// Constant polynomial-in-`a` from a quadratic-extension value.
pub(crate) fn const_poly_q(c: QuadExt) -> Poly {
    Poly::constant(c)
}

#[allow(dead_code)]
pub(crate) fn rat_is_one(r: &Rat) -> bool {
    r.is_one()
}

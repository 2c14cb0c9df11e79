use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use super::{rat_sqrt_exact, rat_to_f64, Rat};

/// Element of the quadratic extension `Q(sqrt(r))`: `rat + surd * sqrt(radicand)`.
///
/// Canonical form:
/// - if `surd == 0` then `radicand == 0`;
/// - `radicand` is never a perfect rational square (such values are folded
///   into the rational part on construction);
/// - `radicand >= 0`.
///
/// Two values with different nonzero radicands never meet in one operation;
/// the single adjoined root is fixed per computation context, and mixing is a
/// hard (panicking) contract violation rather than an error value.
#[derive(Clone, PartialEq, Eq)]
pub struct QuadExt {
    rat: Rat,
    surd: Rat,
    radicand: Rat,
}

impl QuadExt {
    pub fn new(rat: Rat, surd: Rat, radicand: Rat) -> Self {
        assert!(
            !radicand.is_negative(),
            "negative radicand {radicand} is outside the supported extension"
        );
        if surd.is_zero() || radicand.is_zero() {
            return QuadExt { rat, surd: Rat::zero(), radicand: Rat::zero() };
        }
        if let Some(root) = rat_sqrt_exact(&radicand) {
            // sqrt(radicand) is rational; fold it in.
            return QuadExt { rat: rat + surd * root, surd: Rat::zero(), radicand: Rat::zero() };
        }
        QuadExt { rat, surd, radicand }
    }

    pub fn from_rat(r: Rat) -> Self {
        QuadExt { rat: r, surd: Rat::zero(), radicand: Rat::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(super::rat(n))
    }

    /// The pure surd `sqrt(radicand)`.
    pub fn sqrt_of(radicand: Rat) -> Self {
        Self::new(Rat::zero(), Rat::from_integer(1.into()), radicand)
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn rational_part(&self) -> &Rat {
        &self.rat
    }

    pub fn surd_part(&self) -> &Rat {
        &self.surd
    }

    pub fn radicand(&self) -> &Rat {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.surd.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.surd.is_zero() && self.rat == super::rat(1)
    }

    pub fn is_rational(&self) -> bool {
        self.surd.is_zero()
    }

    /// The rational value, if the surd part vanishes.
    pub fn as_rat(&self) -> Option<&Rat> {
        if self.surd.is_zero() {
            Some(&self.rat)
        } else {
            None
        }
    }

    /// Galois conjugate `rat - surd*sqrt(radicand)`.
    pub fn conjugate(&self) -> Self {
        QuadExt { rat: self.rat.clone(), surd: -self.surd.clone(), radicand: self.radicand.clone() }
    }

    /// Norm `rat^2 - surd^2 * radicand`; zero iff the value is zero.
    pub fn norm(&self) -> Rat {
        &self.rat * &self.rat - &self.surd * &self.surd * &self.radicand
    }

    pub fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "division by zero value");
        let n = self.norm();
        debug_assert!(!n.is_zero(), "nonzero value with zero norm: radicand was a square");
        QuadExt {
            rat: &self.rat / &n,
            surd: -&self.surd / &n,
            radicand: if self.surd.is_zero() { Rat::zero() } else { self.radicand.clone() },
        }
    }

    fn joint_radicand(&self, other: &Self) -> Rat {
        if self.surd.is_zero() {
            return other.radicand.clone();
        }
        if other.surd.is_zero() {
            return self.radicand.clone();
        }
        assert!(
            self.radicand == other.radicand,
            "mixed radicands {} and {}: one adjoined root per context",
            self.radicand,
            other.radicand
        );
        self.radicand.clone()
    }

    /// Sign of the real value: -1, 0 or +1.
    pub fn signum(&self) -> i32 {
        if self.surd.is_zero() {
            return sign_of(&self.rat);
        }
        let a = sign_of(&self.rat);
        let b = sign_of(&self.surd);
        if a == b {
            return b; // both parts pull the same way (radicand > 0)
        }
        if a == 0 {
            return b;
        }
        if b == 0 {
            return a;
        }
        // Opposite signs: compare rat^2 with surd^2 * radicand.
        let cmp = (&self.rat * &self.rat).cmp(&(&self.surd * &self.surd * &self.radicand));
        match cmp {
            Ordering::Greater => a,
            Ordering::Less => b,
            Ordering::Equal => 0,
        }
    }

    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.rat) + rat_to_f64(&self.surd) * rat_to_f64(&self.radicand).sqrt()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        QuadExt::new(&self.rat * c, &self.surd * c, self.radicand.clone())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = QuadExt::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

fn sign_of(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_negative() {
        -1
    } else {
        1
    }
}

impl PartialOrd for QuadExt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if !(self.surd.is_zero() || other.surd.is_zero() || self.radicand == other.radicand) {
            return None;
        }
        let d = self - other;
        Some(match d.signum() {
            x if x < 0 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        })
    }
}

impl Add for &QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: &QuadExt) -> QuadExt {
        let r = self.joint_radicand(rhs);
        QuadExt::new(&self.rat + &rhs.rat, &self.surd + &rhs.surd, r)
    }
}

impl Sub for &QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: &QuadExt) -> QuadExt {
        let r = self.joint_radicand(rhs);
        QuadExt::new(&self.rat - &rhs.rat, &self.surd - &rhs.surd, r)
    }
}

impl Mul for &QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &QuadExt) -> QuadExt {
        let r = self.joint_radicand(rhs);
        let rat = &self.rat * &rhs.rat + &self.surd * &rhs.surd * &r;
        let surd = &self.rat * &rhs.surd + &self.surd * &rhs.rat;
        QuadExt::new(rat, surd, r)
    }
}

impl Div for &QuadExt {
    type Output = QuadExt;
    fn div(self, rhs: &QuadExt) -> QuadExt {
        self * &rhs.inverse()
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt { rat: -self.rat.clone(), surd: -self.surd.clone(), radicand: self.radicand.clone() }
    }
}

macro_rules! forward_value_ops {
    ($($t:ident :: $f:ident),*) => {$(
        impl $t for QuadExt {
            type Output = QuadExt;
            fn $f(self, rhs: QuadExt) -> QuadExt { (&self).$f(&rhs) }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -&self
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.surd.is_zero() {
            return write!(f, "{}", self.rat);
        }
        if self.rat.is_zero() {
            return write!(f, "{}*sqrt({})", self.surd, self.radicand);
        }
        if self.surd.is_negative() {
            write!(f, "{}-{}*sqrt({})", self.rat, -self.surd.clone(), self.radicand)
        } else {
            write!(f, "{}+{}*sqrt({})", self.rat, self.surd, self.radicand)
        }
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

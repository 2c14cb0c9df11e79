//! Exact arithmetic foundation.
//!
//! Everything downstream computes over [`QuadExt`]: a big rational extended by
//! at most one adjoined square root, fixed per computation context. Dense
//! polynomials ([`Poly`]) and reduced rational functions
//! ([`RationalFunction`]) are built on top, and [`isolate_real_roots`] turns
//! a rational polynomial into isolating intervals via Sturm sequences.

mod poly;
mod quad;
mod ratfn;
mod sturm;

pub use poly::Poly;
pub use quad::QuadExt;
pub use ratfn::RationalFunction;
pub use sturm::{isolate_real_roots, sturm_root_count};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always stored reduced with positive denominator.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parse an exact rational from a string like `3`, `-5/7` or `+2/4`.
pub fn parse_rat(s: &str) -> crate::Result<Rat> {
    let t = s.trim();
    let mk_err = || crate::Error::Parse(s.to_string(), "expected an exact rational like 3 or -5/7".into());
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| mk_err())?;
    let d: BigInt = den.parse().map_err(|_| mk_err())?;
    if d.is_zero() {
        return Err(mk_err());
    }
    Ok(Rat::new(n, d))
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Out-of-range ratios: fall back to sign * infinity.
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Exact square root of a rational if it is a perfect square.
pub fn rat_sqrt_exact(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    if r.is_zero() {
        return Some(Rat::zero());
    }
    let num = r.numer();
    let den = r.denom();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Some(Rat::new(sn, sd))
    } else {
        None
    }
}

pub fn rat_one() -> Rat {
    Rat::one()
}

pub fn rat_zero() -> Rat {
    Rat::zero()
}

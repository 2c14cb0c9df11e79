use num_traits::Zero;

use crate::exactnum::{rat, ratio, Poly, Rat};
use crate::transforms::{conjugate_scalar, substitute_polynomial, GaugeFactor};
use crate::weylop::{DiffOperator, GenExponent};
use crate::{Error, Result};

/// Parameters of the cosh-pair well `-d^2/dx^2 + (cosh(alpha x)/alpha - M)^2`.
///
/// The integer `Mtilde = 2M/alpha - 1` controls quasi-exact solvability; the
/// boson-number form sets `M = (n+1) alpha / 2` so that `Mtilde = n`.
#[derive(Clone, Debug)]
pub struct BoseHubbardParams {
    pub alpha: Rat,
    pub big_m: Rat,
    pub s: Rat,
}

impl BoseHubbardParams {
    pub fn new(alpha: Rat, big_m: Rat, s: Rat) -> Result<Self> {
        let p = BoseHubbardParams { alpha, big_m, s };
        p.validate()?;
        Ok(p)
    }

    /// Convenience constructor pinning the solvable family: `M = (mt+1) a/2`.
    pub fn from_mtilde(alpha: Rat, mtilde: i64, s: Rat) -> Result<Self> {
        let big_m = rat(mtilde + 1) * &alpha / rat(2);
        Self::new(alpha, big_m, s)
    }

    pub fn validate(&self) -> Result<()> {
        if self.alpha <= rat(0) {
            return Err(Error::Domain("alpha must be positive".into()));
        }
        if !self.s.is_zero() && self.s != ratio(1, 2) {
            return Err(Error::Domain("the peeled exponent s must be 0 or 1/2".into()));
        }
        Ok(())
    }

    /// `Mtilde = 2M/alpha - 1`.
    pub fn mtilde(&self) -> Rat {
        rat(2) * &self.big_m / &self.alpha - rat(1)
    }

    pub fn mtilde_int(&self) -> Option<i64> {
        let mt = self.mtilde();
        if mt.is_integer() {
            mt.to_integer().try_into().ok()
        } else {
            None
        }
    }

    /// Constant offset between the original-well energy `E1` and the shifted
    /// square-form energy `E = E1 + E0`, defined on the solvable family:
    /// `E0 = (n+1)^2 a^2/4 + 1/a^2 + (a^2/4) n (n-2)` with `n = Mtilde`.
    pub fn e0(&self) -> Result<Rat> {
        let n = self
            .mtilde_int()
            .ok_or_else(|| Error::Domain("E0 is defined for integer Mtilde".into()))?;
        let a2 = &self.alpha * &self.alpha;
        Ok(rat((n + 1) * (n + 1)) * &a2 / rat(4) + rat(1) / &a2 + &a2 * rat(n * (n - 2)) / rat(4))
    }

    /// The reduced operator in `z = cosh(alpha x) - 1`, without the energy:
    ///
    /// ```text
    /// L = a^2 z(z+2) d^2 + [a^2 (z+1) - 2z^2 - 4z] d
    ///     + [ -1/a^2 - M^2 + (2M/a - 1)(z+1) ]
    /// ```
    ///
    /// The eigenvalue equation reads `(L + E) phi = 0`.
    pub fn reduced_z_operator(&self) -> DiffOperator {
        let a2 = &self.alpha * &self.alpha;
        let m = &self.big_m;
        // a^2 z (z + 2) = a^2 z^2 + 2 a^2 z
        let d2 = DiffOperator::from_x_poly(&Poly::from_rat_coeffs(vec![
            rat(0),
            rat(2) * &a2,
            a2.clone(),
        ]))
        .compose(&DiffOperator::d_pow(2));
        let d1 = DiffOperator::from_x_poly(&Poly::from_rat_coeffs(vec![
            a2.clone(),
            a2.clone() - rat(4),
            rat(-2),
        ]))
        .compose(&DiffOperator::d_pow(1));
        let slope = rat(2) * m / &self.alpha - rat(1);
        let scalar = DiffOperator::from_x_poly(&Poly::from_rat_coeffs(vec![
            -rat(1) / &a2 - m * m + slope.clone(),
            slope,
        ]));
        d2.add(&d1).add(&scalar)
    }

    /// Peel the indicial factor `z^s`: conjugation by the power gauge.
    pub fn peeled_z_operator(&self) -> Result<DiffOperator> {
        conjugate_scalar(&self.reduced_z_operator(), &GaugeFactor::power(self.s.clone()))
    }

    /// The operator in the half-power variable `w` with `z + 2 = 2 w^2`
    /// (so `w = cosh(alpha x / 2)`); polynomial coefficients, even shifts.
    pub fn w_operator(&self) -> Result<DiffOperator> {
        let u = Poly::from_rat_coeffs(vec![rat(-2), rat(0), rat(2)]);
        let op = substitute_polynomial(&self.peeled_z_operator()?, &u)?;
        for t in op.terms() {
            let e = t.power.as_int().ok_or(Error::FormalParameter)?;
            if e < 0 {
                return Err(Error::NonPolynomializable(format!(
                    "half-power substitution left x^{e}"
                )));
            }
        }
        Ok(op)
    }

    /// Shifted-well potential `(cosh(alpha x)/alpha - M)^2`; its spectrum is
    /// the `E` the truncation polynomials produce.
    pub fn potential_shifted(&self, x: f64) -> f64 {
        let a = crate::exactnum::rat_to_f64(&self.alpha);
        let m = crate::exactnum::rat_to_f64(&self.big_m);
        let c = (a * x).cosh() / a - m;
        c * c
    }

    /// Original-well potential; its spectrum is `E1 = E - E0`.
    pub fn potential_original(&self, x: f64) -> f64 {
        let a = crate::exactnum::rat_to_f64(&self.alpha);
        let g = a * a;
        let n = crate::exactnum::rat_to_f64(&self.mtilde());
        let ch = (a * x).cosh();
        ch * ch / g - (n + 1.0) * ch - 1.0 / g - g * (n / 2.0) * (n / 2.0 - 1.0)
    }
}

/// Exponents `s` for which `z^s (regular series)` solves the equation at the
/// regular singular point `z = 0`: the rational roots of the indicial
/// polynomial read off the lowest-shift part of the operator.
pub fn indicial_roots(op: &DiffOperator) -> Result<Vec<Rat>> {
    // Apply to the formal monomial z^a and collect the coefficient of z^(a-1).
    let img = op.apply_to_monomial(&GenExponent::a_plus(0));
    let mut indicial = Poly::zero();
    for (e, c) in img {
        if e.a_count() == 1 && e.offset() == &rat(-1) {
            indicial = &indicial + &c;
        }
    }
    if indicial.is_zero() {
        return Err(Error::Domain("no indicial condition at z = 0".into()));
    }
    rational_roots_of_low_degree(&indicial)
}

/// Rational roots of a polynomial of degree <= 2 (exact).
fn rational_roots_of_low_degree(p: &Poly) -> Result<Vec<Rat>> {
    let coeffs = p.rat_coeffs()?;
    match coeffs.len() {
        0 | 1 => Ok(vec![]),
        2 => Ok(vec![-(coeffs[0].clone() / coeffs[1].clone())]),
        3 => {
            let (c, b, a) = (coeffs[0].clone(), coeffs[1].clone(), coeffs[2].clone());
            let disc = &b * &b - rat(4) * &a * &c;
            let root = crate::exactnum::rat_sqrt_exact(&disc).ok_or_else(|| {
                Error::Domain("indicial discriminant is not a rational square".into())
            })?;
            let two_a = rat(2) * &a;
            let mut out = vec![(-&b + &root) / &two_a, (-&b - &root) / &two_a];
            out.sort();
            out.dedup();
            Ok(out)
        }
        _ => Err(Error::Domain("indicial polynomial of unexpected degree".into())),
    }
}

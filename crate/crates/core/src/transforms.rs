//! Gauge conjugations and algebraic changes of variable.
//!
//! Gauge factors are carried only through their logarithmic derivatives
//! (rational functions); the factor itself never appears. Conjugation is
//! computed in an intermediate ring of operators with rational-function
//! coefficients ([`RatOp`]) and converted back to generalized-power normal
//! form, erroring when denominators fail to clear.

use crate::exactnum::{Poly, QuadExt, Rat, RationalFunction};
use crate::weylop::{DiffOperator, GenExponent, MatrixOperator};
use crate::{Error, Result};

/// Operator with rational-function coefficients, indexed by derivative order.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RatOp {
    coeffs: Vec<RationalFunction>,
}

impl RatOp {
    pub fn zero() -> Self {
        RatOp { coeffs: vec![] }
    }

    pub fn identity() -> Self {
        RatOp { coeffs: vec![RationalFunction::one()] }
    }

    pub fn from_fn(f: RationalFunction) -> Self {
        RatOp { coeffs: vec![f] }.trimmed()
    }

    pub fn from_poly(p: &Poly) -> Self {
        RatOp::from_fn(RationalFunction::from_poly(p.clone()))
    }

    pub fn d() -> Self {
        RatOp { coeffs: vec![RationalFunction::zero(), RationalFunction::one()] }
    }

    pub fn with_coeffs(coeffs: Vec<RationalFunction>) -> Self {
        RatOp { coeffs }.trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn coeffs(&self) -> &[RationalFunction] {
        &self.coeffs
    }

    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &RatOp) -> RatOp {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(&self.coeff(i) + &other.coeff(i));
        }
        RatOp { coeffs }.trimmed()
    }

    pub fn sub(&self, other: &RatOp) -> RatOp {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatOp {
        RatOp { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn coeff(&self, k: usize) -> RationalFunction {
        self.coeffs.get(k).cloned().unwrap_or_else(RationalFunction::zero)
    }

    pub fn scale(&self, c: &RationalFunction) -> RatOp {
        RatOp { coeffs: self.coeffs.iter().map(|f| f * c).collect() }.trimmed()
    }

    /// Normal-ordered product: `d^k . g = sum_i C(k,i) g^(i) d^(k-i)`.
    pub fn compose(&self, other: &RatOp) -> RatOp {
        let mut out = vec![RationalFunction::zero(); self.coeffs.len() + other.coeffs.len()];
        for (k, f) in self.coeffs.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            for (l, g) in other.coeffs.iter().enumerate() {
                if g.is_zero() {
                    continue;
                }
                // d^k g d^l: differentiate g i times, i = 0..k.
                let mut gder = g.clone();
                let mut binom = Rat::from_integer(1.into());
                for i in 0..=k {
                    if i > 0 {
                        gder = gder.derivative();
                        binom = binom * crate::exactnum::rat((k - i + 1) as i64)
                            / crate::exactnum::rat(i as i64);
                    }
                    if gder.is_zero() {
                        break;
                    }
                    let term = &(f * &gder).scale(&QuadExt::from_rat(binom.clone()));
                    let idx = k - i + l;
                    out[idx] = &out[idx] + term;
                }
            }
        }
        RatOp { coeffs: out }.trimmed()
    }

    pub fn commutator(&self, other: &RatOp) -> RatOp {
        self.compose(other).sub(&other.compose(self))
    }

    /// Conjugation `g^-1 . self . g` where `ell = g'/g`: substitutes `d -> d + ell`.
    pub fn conjugate(&self, ell: &RationalFunction) -> RatOp {
        let shifted = RatOp { coeffs: vec![ell.clone(), RationalFunction::one()] };
        let mut power = RatOp::identity();
        let mut out = RatOp::zero();
        for (k, f) in self.coeffs.iter().enumerate() {
            if k > 0 {
                power = power.compose(&shifted);
            }
            if !f.is_zero() {
                out = out.add(&power.scale(f));
            }
        }
        out
    }

    /// Apply to a rational function.
    pub fn apply(&self, u: &RationalFunction) -> RationalFunction {
        let mut out = RationalFunction::zero();
        let mut der = u.clone();
        for (k, f) in self.coeffs.iter().enumerate() {
            if k > 0 {
                der = der.derivative();
            }
            if !f.is_zero() {
                out = &out + &(f * &der);
            }
        }
        out
    }

    /// Conversion from a normal-ordered operator with plain integer powers.
    pub fn from_diffop(op: &DiffOperator) -> Result<RatOp> {
        let mut out = RatOp::zero();
        for t in op.terms() {
            if t.power.a_count() != 0 {
                return Err(Error::FormalParameter);
            }
            if !t.power.offset().is_integer() {
                return Err(Error::NonPolynomializable(format!(
                    "fractional power x^({})",
                    t.power
                )));
            }
            let c = t
                .coeff
                .as_constant()
                .ok_or(Error::FormalParameter)?;
            let e: i64 = t.power.as_int().unwrap();
            let f = if e >= 0 {
                RationalFunction::from_poly(Poly::monomial(c, e as usize))
            } else {
                RationalFunction::new(Poly::constant(c), Poly::monomial(QuadExt::one(), (-e) as usize))
            };
            let mut coeffs = vec![RationalFunction::zero(); t.deriv as usize + 1];
            coeffs[t.deriv as usize] = f;
            out = out.add(&RatOp { coeffs });
        }
        Ok(out)
    }

    /// Conversion back to generalized-power form. Each coefficient must be a
    /// polynomial or have a pure monomial denominator (Laurent form).
    pub fn to_diffop(&self) -> Result<DiffOperator> {
        let mut out = DiffOperator::zero();
        for (k, f) in self.coeffs.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            let den = f.denominator();
            let dd = den.degree().unwrap();
            let monomial_den = den.coeffs().iter().take(dd).all(|c| c.is_zero());
            if !monomial_den {
                return Err(Error::NonPolynomializable(format!(
                    "coefficient of d^{k} has denominator {den}"
                )));
            }
            let lead = den.leading().unwrap().inverse();
            for (i, c) in f.numerator().coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let coeff = Poly::constant(c * &lead);
                out = out.add(&DiffOperator::term(
                    coeff,
                    GenExponent::int(i as i64 - dd as i64),
                    k as u32,
                ));
            }
        }
        Ok(out)
    }
}

/// A gauge factor `g`, represented solely by its logarithmic derivative `g'/g`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GaugeFactor {
    ell: RationalFunction,
}

impl GaugeFactor {
    pub fn from_log_derivative(ell: RationalFunction) -> Self {
        GaugeFactor { ell }
    }

    /// `g = x^e`, so `ell = e / x`.
    pub fn power(e: Rat) -> Self {
        GaugeFactor {
            ell: RationalFunction::new(
                Poly::from_rat(e),
                Poly::monomial(QuadExt::one(), 1),
            ),
        }
    }

    /// `g = exp(p(x))`, so `ell = p'`.
    pub fn exp_of_poly(p: &Poly) -> Self {
        GaugeFactor { ell: RationalFunction::from_poly(p.derivative()) }
    }

    /// `g = sqrt(p(x))`, so `ell = p' / (2p)`.
    pub fn sqrt_of_poly(p: &Poly) -> Self {
        GaugeFactor {
            ell: RationalFunction::new(
                p.derivative(),
                p.scale(&QuadExt::from_int(2)),
            ),
        }
    }

    /// Combined factor `g1 * g2` (log-derivatives add).
    pub fn product(&self, other: &GaugeFactor) -> GaugeFactor {
        GaugeFactor { ell: &self.ell + &other.ell }
    }

    pub fn inverse(&self) -> GaugeFactor {
        GaugeFactor { ell: -&self.ell }
    }

    pub fn log_derivative(&self) -> &RationalFunction {
        &self.ell
    }
}

/// An algebraic change of variable `x = h(z)` described by
/// `sigma(x) = (dx/dz)^2` expressed in the new variable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VariableChange {
    sigma: Poly,
}

impl VariableChange {
    pub fn new(sigma: Poly) -> Result<Self> {
        if sigma.is_zero() {
            return Err(Error::Domain("sigma must be nonzero".into()));
        }
        Ok(VariableChange { sigma })
    }

    pub fn sigma(&self) -> &Poly {
        &self.sigma
    }

    /// Exact image of `d^2/dz^2`: `sigma(x) d^2 + (sigma'(x)/2) d`.
    pub fn pullback_second_derivative(&self) -> DiffOperator {
        let d2 = DiffOperator::from_x_poly(&self.sigma).compose(&DiffOperator::d_pow(2));
        let half = Rat::new(1.into(), 2.into());
        let d1 = DiffOperator::from_x_poly(&self.sigma.derivative().scale(&QuadExt::from_rat(half)))
            .compose(&DiffOperator::d_pow(1));
        d2.add(&d1)
    }
}

/// Conjugate a scalar operator by a gauge factor: `g^-1 . A . g`.
///
/// Errors when the result does not clear denominators into generalized-power
/// (Laurent) form, which signals an inadmissible gauge for this operator.
pub fn conjugate_scalar(op: &DiffOperator, g: &GaugeFactor) -> Result<DiffOperator> {
    let r = RatOp::from_diffop(op)?;
    r.conjugate(g.log_derivative()).to_diffop()
}

/// Conjugate a matrix operator: `Pinv . A . P`, with the inverse pair checked.
pub fn conjugate_matrix(
    a: &MatrixOperator,
    p: &MatrixOperator,
    pinv: &MatrixOperator,
) -> Result<MatrixOperator> {
    if !p.compose(pinv).is_identity() || !pinv.compose(p).is_identity() {
        return Err(Error::NotAnInverse);
    }
    Ok(pinv.compose(a).compose(p))
}

/// Map an operator written in `y` to the variable `x = y^2`:
/// `y = x^(1/2)`, `d_y = 2 x^(1/2) d_x`. Half-integer powers may appear in
/// intermediate terms; callers assert integrality of the final result.
pub fn to_square_variable(op_in_y: &DiffOperator) -> Result<DiffOperator> {
    let half = Rat::new(1.into(), 2.into());
    let step = DiffOperator::term(Poly::from_int(2), GenExponent::from_rat(half.clone()), 1);
    let mut out = DiffOperator::zero();
    for t in op_in_y.terms() {
        if t.power.a_count() != 0 {
            return Err(Error::FormalParameter);
        }
        let new_power = GenExponent::from_rat(t.power.offset() * &half);
        let mut term = DiffOperator::term(t.coeff.clone(), new_power, 0);
        term = term.compose(&step.pow(t.deriv));
        out = out.add(&term);
    }
    Ok(out)
}

/// Substitute `z = u(x)` into an operator written in `z`, for polynomial `u`
/// whose derivative is a monomial (the affine and square-shift cases used
/// here). `d_z` becomes `(1/u') d_x`.
pub fn substitute_polynomial(op_in_z: &DiffOperator, u: &Poly) -> Result<DiffOperator> {
    let du = u.derivative();
    let dd = du.degree().ok_or_else(|| Error::Domain("constant substitution".into()))?;
    if !du.coeffs().iter().take(dd).all(|c| c.is_zero()) {
        return Err(Error::NonPolynomializable(format!(
            "substitution derivative {du} is not a monomial"
        )));
    }
    let inv_lead = du.leading().unwrap().inverse();
    // (1/u') d = inv_lead * x^(-dd) d
    let step = DiffOperator::term(Poly::constant(inv_lead), GenExponent::int(-(dd as i64)), 1);
    let mut out = DiffOperator::zero();
    for t in op_in_z.terms() {
        let e = t
            .power
            .as_int()
            .ok_or_else(|| Error::NonPolynomializable(format!("power z^({})", t.power)))?;
        if e < 0 {
            return Err(Error::NonPolynomializable(format!("negative power z^{e}")));
        }
        let mult = DiffOperator::from_x_poly(&u.pow(e as u32)).scale(&t.coeff);
        out = out.add(&mult.compose(&step.pow(t.deriv)));
    }
    Ok(out)
}

use std::fmt;

use crate::exactnum::{Poly, QuadExt, Rat, RationalFunction};
use crate::transforms::RatOp;
use crate::weylop::MatrixOperator;
use crate::{Error, Result};

use super::monomial::{InvarianceFailure, InvarianceReport};
use super::ExactMatrix;

/// Which radical the two-component space adjoins.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FCase {
    /// `f = sqrt((1-x)(1-lambda x))`, requires `m = n - 1`.
    SqrtP2,
    /// `f = sqrt((1-x)/(1-lambda x))`, requires `m = n`.
    SqrtRatio,
}

/// The ring `Q(x)[f]` with `f^2` a fixed rational function; elements are
/// pairs `plain + f * fpart`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FRing {
    fsq: RationalFunction,
    ell: RationalFunction,
}

impl FRing {
    /// Build from `f^2`; the log-derivative `f'/f = (f^2)'/(2 f^2)` is all
    /// the arithmetic ever needs.
    pub fn new(fsq: RationalFunction) -> Self {
        let two = RationalFunction::from_const(QuadExt::from_int(2));
        let ell = &fsq.derivative() / &(&two * &fsq);
        FRing { fsq, ell }
    }

    pub fn f_squared(&self) -> &RationalFunction {
        &self.fsq
    }

    pub fn log_derivative(&self) -> &RationalFunction {
        &self.ell
    }
}

/// Element `plain + f * fpart`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FRingElement {
    pub plain: RationalFunction,
    pub fpart: RationalFunction,
}

impl FRingElement {
    pub fn new(plain: RationalFunction, fpart: RationalFunction) -> Self {
        FRingElement { plain, fpart }
    }

    pub fn zero() -> Self {
        FRingElement { plain: RationalFunction::zero(), fpart: RationalFunction::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.plain.is_zero() && self.fpart.is_zero()
    }

    /// `d/dx`, closed in the ring via `f' = ell * f`.
    pub fn derivative(&self, ring: &FRing) -> FRingElement {
        FRingElement {
            plain: self.plain.derivative(),
            fpart: &self.fpart.derivative() + &(ring.log_derivative() * &self.fpart),
        }
    }

    pub fn add(&self, other: &FRingElement) -> FRingElement {
        FRingElement { plain: &self.plain + &other.plain, fpart: &self.fpart + &other.fpart }
    }
}

/// Operator `A + f . B` acting on [`FRingElement`]s, with `A`, `B` operators
/// with rational-function coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FOperator {
    plain: RatOp,
    fpart: RatOp,
    ring: FRing,
}

impl FOperator {
    pub fn new(plain: RatOp, fpart: RatOp, ring: FRing) -> Self {
        FOperator { plain, fpart, ring }
    }

    pub fn from_plain(plain: RatOp, ring: FRing) -> Self {
        FOperator { plain, fpart: RatOp::zero(), ring }
    }

    /// `f . B`.
    pub fn f_times(fpart: RatOp, ring: FRing) -> Self {
        FOperator { plain: RatOp::zero(), fpart, ring }
    }

    pub fn zero(ring: FRing) -> Self {
        FOperator { plain: RatOp::zero(), fpart: RatOp::zero(), ring }
    }

    pub fn ring(&self) -> &FRing {
        &self.ring
    }

    pub fn plain_part(&self) -> &RatOp {
        &self.plain
    }

    pub fn f_part(&self) -> &RatOp {
        &self.fpart
    }

    pub fn is_zero(&self) -> bool {
        self.plain.is_zero() && self.fpart.is_zero()
    }

    fn same_ring(&self, other: &FOperator) {
        assert!(self.ring == other.ring, "operators live in different radical rings");
    }

    pub fn add(&self, other: &FOperator) -> FOperator {
        self.same_ring(other);
        FOperator {
            plain: self.plain.add(&other.plain),
            fpart: self.fpart.add(&other.fpart),
            ring: self.ring.clone(),
        }
    }

    pub fn sub(&self, other: &FOperator) -> FOperator {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> FOperator {
        FOperator { plain: self.plain.neg(), fpart: self.fpart.neg(), ring: self.ring.clone() }
    }

    pub fn scale(&self, c: &RationalFunction) -> FOperator {
        FOperator {
            plain: self.plain.scale(c),
            fpart: self.fpart.scale(c),
            ring: self.ring.clone(),
        }
    }

    pub fn scale_quad(&self, c: &QuadExt) -> FOperator {
        self.scale(&RationalFunction::from_const(c.clone()))
    }

    fn conj(&self, op: &RatOp) -> RatOp {
        op.conjugate(self.ring.log_derivative())
    }

    /// Operator product, using `X . f = f . (f^-1 X f)` and `f . f = f^2`.
    pub fn compose(&self, other: &FOperator) -> FOperator {
        self.same_ring(other);
        let fsq = RatOp::from_fn(self.ring.fsq.clone());
        let plain = self
            .plain
            .compose(&other.plain)
            .add(&fsq.compose(&self.conj(&self.fpart)).compose(&other.fpart));
        let fpart = self
            .conj(&self.plain)
            .compose(&other.fpart)
            .add(&self.fpart.compose(&other.plain));
        FOperator { plain, fpart, ring: self.ring.clone() }
    }

    pub fn commutator(&self, other: &FOperator) -> FOperator {
        self.compose(other).sub(&other.compose(self))
    }

    pub fn apply(&self, e: &FRingElement) -> FRingElement {
        let fsq = &self.ring.fsq;
        let plain = &self.plain.apply(&e.plain)
            + &(fsq * &self.conj(&self.fpart).apply(&e.fpart));
        let fpart = &self.conj(&self.plain).apply(&e.fpart) + &self.fpart.apply(&e.plain);
        FRingElement { plain, fpart }
    }

    /// Transport through a scalar gauge `h` with `h^2 = h_sq` into a new
    /// radical ring, where the old radical factors as `f = f_over_g * g`.
    /// Returns `h^-1 (A + f B) h` expressed as an operator in the new ring.
    pub fn gauge_transport(
        &self,
        h_sq: &Poly,
        f_over_g: &RationalFunction,
        new_ring: FRing,
    ) -> FOperator {
        let two = RationalFunction::from_const(QuadExt::from_int(2));
        let h_sq_fn = RationalFunction::from_poly(h_sq.clone());
        let ell_h = &h_sq_fn.derivative() / &(&two * &h_sq_fn);
        let plain = self.plain.conjugate(&ell_h);
        let fpart = RatOp::from_fn(f_over_g.clone()).compose(&self.fpart.conjugate(&ell_h));
        FOperator { plain, fpart, ring: new_ring }
    }
}

impl fmt::Display for FOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |op: &RatOp| -> String {
            if op.is_zero() {
                return "0".into();
            }
            op.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| if k == 0 { format!("({c})") } else { format!("({c}) * d^{k}") })
                .collect::<Vec<_>>()
                .join(" + ")
        };
        write!(f, "{} + f * [{}]  (f^2 = {})", show(&self.plain), show(&self.fpart), self.ring.fsq)
    }
}

/// Two-component invariant space: pairs `(p, q)` with `deg p <= n`,
/// `deg q <= m`, representing `p + f q`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoComponentSpace {
    pub n: i64,
    pub m: i64,
    pub fcase: FCase,
    pub lambda: Rat,
}

impl TwoComponentSpace {
    pub fn new(n: i64, m: i64, fcase: FCase, lambda: Rat) -> Result<Self> {
        match fcase {
            FCase::SqrtP2 if m != n - 1 => {
                return Err(Error::Domain(format!(
                    "sqrt-quadratic case requires m = n - 1, got n = {n}, m = {m}"
                )))
            }
            FCase::SqrtRatio if m != n => {
                return Err(Error::Domain(format!(
                    "sqrt-ratio case requires m = n, got n = {n}, m = {m}"
                )))
            }
            _ => {}
        }
        if n < 0 || m < 0 {
            return Err(Error::Domain("degrees must be nonnegative".into()));
        }
        Ok(TwoComponentSpace { n, m, fcase, lambda })
    }

    /// `(1-x)(1-lambda x)` for the quadratic case.
    pub fn quadratic_poly(lambda: &Rat) -> Poly {
        let one_minus_x = Poly::from_rat_coeffs(vec![crate::exactnum::rat(1), crate::exactnum::rat(-1)]);
        let one_minus_lx = Poly::from_rat_coeffs(vec![crate::exactnum::rat(1), -lambda.clone()]);
        &one_minus_x * &one_minus_lx
    }

    pub fn ring(&self) -> FRing {
        let one_minus_x = Poly::from_rat_coeffs(vec![crate::exactnum::rat(1), crate::exactnum::rat(-1)]);
        let one_minus_lx =
            Poly::from_rat_coeffs(vec![crate::exactnum::rat(1), -self.lambda.clone()]);
        let fsq = match self.fcase {
            FCase::SqrtP2 => RationalFunction::from_poly(&one_minus_x * &one_minus_lx),
            FCase::SqrtRatio => RationalFunction::new(one_minus_x, one_minus_lx),
        };
        FRing::new(fsq)
    }

    pub fn dim(&self) -> usize {
        (self.n + self.m + 2) as usize
    }

    /// Canonical ordered basis: plain monomials ascending, then f-sector.
    fn basis(&self) -> Vec<FRingElement> {
        let mut out = vec![];
        for j in 0..=self.n {
            out.push(FRingElement::new(
                RationalFunction::from_poly(Poly::monomial(QuadExt::one(), j as usize)),
                RationalFunction::zero(),
            ));
        }
        for j in 0..=self.m {
            out.push(FRingElement::new(
                RationalFunction::zero(),
                RationalFunction::from_poly(Poly::monomial(QuadExt::one(), j as usize)),
            ));
        }
        out
    }

    fn element_in_space(&self, e: &FRingElement) -> std::result::Result<(), String> {
        let check = |f: &RationalFunction, bound: i64, tag: &str| {
            if f.is_zero() {
                return Ok(());
            }
            let p = f
                .as_poly()
                .ok_or_else(|| format!("{tag} component is not polynomial: {f}"))?;
            let d = p.degree().unwrap() as i64;
            if d > bound {
                return Err(format!("{tag} component has degree {d} > {bound}"));
            }
            Ok(())
        };
        check(&e.plain, self.n, "plain")?;
        check(&e.fpart, self.m, "radical")?;
        Ok(())
    }

    pub fn check_invariance(&self, op: &FOperator) -> InvarianceReport {
        let mut report = InvarianceReport::default();
        for (idx, b) in self.basis().iter().enumerate() {
            let img = op.apply(b);
            if let Err(msg) = self.element_in_space(&img) {
                let basis = if (idx as i64) <= self.n {
                    format!("x^{idx}")
                } else {
                    format!("f*x^{}", idx as i64 - self.n - 1)
                };
                report.failures.push(InvarianceFailure {
                    basis,
                    exponent: msg,
                    coefficient: String::new(),
                });
            }
        }
        report
    }

    /// Matrix of the operator in the canonical basis.
    pub fn restrict(&self, op: &FOperator) -> Result<ExactMatrix> {
        self.check_invariance(op).into_result()?;
        let dim = self.dim();
        let mut m = ExactMatrix::zero(dim);
        for (col, b) in self.basis().iter().enumerate() {
            let img = op.apply(b);
            let plain = img.plain.as_poly().unwrap().clone();
            let fpart = img.fpart.as_poly().unwrap().clone();
            for (j, c) in plain.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    m.set(j, col, c.clone());
                }
            }
            for (j, c) in fpart.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    m.set(self.n as usize + 1 + j, col, c.clone());
                }
            }
        }
        Ok(m)
    }

    /// The unique 2x2 matrix operator `M` with
    /// `(A + fB)(p + f q) = (M(p,q))_1 + f (M(p,q))_2`:
    /// `M = [[A, f^2 conj(B)], [B, conj(A)]]`.
    ///
    /// Errors when an entry fails to clear denominators, i.e. when the
    /// operator does not act polynomially on the two sectors.
    pub fn scalar_to_matrix(&self, op: &FOperator) -> Result<MatrixOperator> {
        let ell = op.ring().log_derivative().clone();
        let fsq = RatOp::from_fn(op.ring().f_squared().clone());
        let m11 = op.plain_part().to_diffop()?;
        let m12 = fsq.compose(&op.plain_conj_helper(&ell, false)).to_diffop()?;
        let m21 = op.f_part().to_diffop()?;
        let m22 = op.plain_conj_helper(&ell, true).to_diffop()?;
        Ok(MatrixOperator::new(m11, m12, m21, m22))
    }
}

impl FOperator {
    fn plain_conj_helper(&self, ell: &RationalFunction, plain: bool) -> RatOp {
        if plain {
            self.plain.conjugate(ell)
        } else {
            self.fpart.conjugate(ell)
        }
    }
}

impl fmt::Display for TwoComponentSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rad = match self.fcase {
            FCase::SqrtP2 => format!("sqrt((1-x)(1-({})x))", self.lambda),
            FCase::SqrtRatio => format!("sqrt((1-x)/(1-({})x))", self.lambda),
        };
        write!(f, "P_{} + {} * P_{}", self.n, rad, self.m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn canonical_space(n: i64) -> TwoComponentSpace {
        TwoComponentSpace::new(n, n - 1, FCase::SqrtP2, rat(-1)).unwrap()
    }

    /// f d in the canonical ring.
    fn f_d(n: i64) -> FOperator {
        FOperator::f_times(RatOp::d(), canonical_space(n).ring())
    }

    #[test]
    fn derivative_closure_in_ring() {
        // d(f * 1) = f' = ell * f in the ring with f^2 = 1 - x^2.
        let ring = canonical_space(2).ring();
        let e = FRingElement::new(RationalFunction::zero(), RationalFunction::one());
        let d = e.derivative(&ring);
        assert!(d.plain.is_zero());
        assert_eq!(&d.fpart, ring.log_derivative());
    }

    #[test]
    fn apply_matches_compose() {
        // (S S) e  ==  S (S e) for S = f d on a sample element.
        let s = f_d(3);
        let e = FRingElement::new(
            RationalFunction::from_poly(Poly::from_rat_coeffs(vec![rat(1), rat(2), rat(0), rat(1)])),
            RationalFunction::from_poly(Poly::from_rat_coeffs(vec![rat(-1), rat(3)])),
        );
        let lhs = s.compose(&s).apply(&e);
        let rhs = s.apply(&s.apply(&e));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn f_d_preserves_canonical_space() {
        let sp = canonical_space(3);
        let report = sp.check_invariance(&f_d(3));
        assert!(report.invariant(), "{:?}", report.failures);
    }

    #[test]
    fn scalar_to_matrix_identity() {
        let sp = canonical_space(2);
        let id = FOperator::from_plain(RatOp::identity(), sp.ring());
        let m = sp.scalar_to_matrix(&id).unwrap();
        assert!(m.is_identity());
    }

    #[test]
    fn wrong_degree_pairing_rejected() {
        assert!(TwoComponentSpace::new(3, 3, FCase::SqrtP2, rat(-1)).is_err());
        assert!(TwoComponentSpace::new(3, 2, FCase::SqrtRatio, rat(-1)).is_err());
    }
}

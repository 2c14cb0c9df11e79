use num_traits::Zero;

use crate::catalog::j_plus;
use crate::exactnum::{rat, Poly, QuadExt, Rat};
use crate::spaces::CoupleSpace;
use crate::transforms::{conjugate_matrix, conjugate_scalar, to_square_variable, GaugeFactor};
use crate::weylop::{DiffOperator, GenExponent, MatrixOperator};
use crate::{Error, Result};

/// Parameters of the sextic 2x2 polynomial potential.
#[derive(Clone, Debug)]
pub struct PolyPotParams {
    pub m: i64,
    pub p2: Rat,
    pub p1: Rat,
    pub kappa0: Rat,
    pub epsilon: Rat,
}

impl PolyPotParams {
    pub fn new(m: i64, p2: Rat, p1: Rat, kappa0: Rat) -> Result<Self> {
        let p = PolyPotParams { m, p2, p1, kappa0, epsilon: rat(0) };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.p2 <= rat(0) {
            return Err(Error::Domain("p2 must be positive".into()));
        }
        if self.m < 0 {
            return Err(Error::Domain("m must be nonnegative".into()));
        }
        Ok(())
    }

    /// The symmetric 2x2 polynomial potential in `y` (without the
    /// `epsilon(epsilon-1)/y^2` tail, which only exists off the algebraic
    /// path and is added by the numerical evaluator).
    pub fn potential_matrix(&self) -> [[Poly; 2]; 2] {
        let p2 = &self.p2;
        let p1 = &self.p1;
        let e = &self.epsilon;
        // scalar part: 4 p2^2 y^6 + 8 p1 p2 y^4 + (4 p1^2 - 8 m p2 + 2(1 - 2e) p2) y^2
        let y2_coeff = rat(4) * p1 * p1 - rat(8 * self.m) * p2
            + rat(2) * (rat(1) - rat(2) * e) * p2;
        let mut scalar = vec![rat(0); 7];
        scalar[6] = rat(4) * p2 * p2;
        scalar[4] = rat(8) * p1 * p2;
        scalar[2] = y2_coeff;
        let scalar = Poly::from_rat_coeffs(scalar);
        // sigma3 part: (8 p2 y^2 + 4 p1) diag(1, -1)
        let s3 = Poly::from_rat_coeffs(vec![rat(4) * p1, rat(0), rat(8) * p2]);
        // sigma1 part: -8 m p2 kappa0 (off-diagonal)
        let s1 = Poly::from_rat(rat(-8 * self.m) * p2 * &self.kappa0);
        [
            [&scalar + &s3, s1.clone()],
            [s1, &scalar - &s3],
        ]
    }

    /// Physical operator `-d^2/dy^2 I + V(y)` over polynomials in `y`.
    pub fn physical_operator(&self) -> MatrixOperator {
        let v = self.potential_matrix();
        let kin = DiffOperator::d_pow(2).neg();
        MatrixOperator::new(
            kin.add(&DiffOperator::from_x_poly(&v[0][0])),
            DiffOperator::from_x_poly(&v[0][1]),
            DiffOperator::from_x_poly(&v[1][0]),
            kin.add(&DiffOperator::from_x_poly(&v[1][1])),
        )
    }

    fn gauge(&self) -> GaugeFactor {
        // phi = y^eps exp(-(p2/2) y^4 - p1 y^2)
        let half = Rat::new(1.into(), 2.into());
        let mut quartic = vec![rat(0); 5];
        quartic[4] = -(&self.p2 * half);
        quartic[2] = -self.p1.clone();
        GaugeFactor::power(self.epsilon.clone())
            .product(&GaugeFactor::exp_of_poly(&Poly::from_rat_coeffs(quartic)))
    }

    /// The mixing conjugation `P = I + kappa0 d sigma+` and its inverse
    /// (`sigma+` is nilpotent, so the inverse flips the sign).
    pub fn mixing_pair(&self) -> (MatrixOperator, MatrixOperator) {
        let off = DiffOperator::d_pow(1).scale_rat(&self.kappa0);
        let mut p = MatrixOperator::identity();
        p.set_entry(0, 1, off.clone());
        let mut pinv = MatrixOperator::identity();
        pinv.set_entry(0, 1, off.neg());
        (p, pinv)
    }

    /// Gauge + variable-change + mixing pipeline. Returns the intermediate
    /// operator in `x = y^2` before the mixing stage and the final operator.
    pub fn pipeline(&self) -> Result<(MatrixOperator, MatrixOperator)> {
        if !self.epsilon.is_zero() {
            return Err(Error::Domain(
                "the algebraic pipeline requires epsilon = 0 (nonzero epsilon only alters the numerical potential)".into(),
            ));
        }
        let g = self.gauge();
        let h = self.physical_operator();
        let mut gauged = MatrixOperator::zero();
        for i in 0..2 {
            for j in 0..2 {
                gauged.set_entry(i, j, conjugate_scalar(h.entry(i, j), &g)?);
            }
        }
        let mut in_x = MatrixOperator::zero();
        for i in 0..2 {
            for j in 0..2 {
                let e = to_square_variable(gauged.entry(i, j))?;
                // the even/odd structure must give integer powers
                for t in e.terms() {
                    if !t.power.offset().is_integer() {
                        return Err(Error::NonPolynomializable(format!(
                            "half-integer power survived the change of variable: x^({})",
                            t.power
                        )));
                    }
                }
                in_x.set_entry(i, j, e);
            }
        }
        let (p, pinv) = self.mixing_pair();
        let final_form = conjugate_matrix(&in_x, &p, &pinv)?;
        Ok((in_x, final_form))
    }

    /// Closed form of the algebraic operator (for `p1 = 0`):
    /// `-(4xd^2+2d) I + 8 p2 m k0^2 sigma3 d + 8 p2 diag(j+(m-2), j+(m))
    ///  + 4 k0 (1 + 2 m p2 k0^2) sigma+ d^2 - 8 m p2 k0 sigma-`.
    pub fn closed_form(&self) -> MatrixOperator {
        let p2 = &self.p2;
        let k0 = &self.kappa0;
        let m = self.m;
        let kin = DiffOperator::term(Poly::from_int(-4), GenExponent::int(1), 2)
            .add(&DiffOperator::term(Poly::from_int(-2), GenExponent::int(0), 1));
        let s3d = DiffOperator::d_pow(1).scale_rat(&(rat(8 * m) * p2 * k0 * k0));
        let top = kin
            .add(&s3d)
            .add(&j_plus(m - 2).scale_rat(&(rat(8) * p2)));
        let bottom = kin
            .sub(&s3d)
            .add(&j_plus(m).scale_rat(&(rat(8) * p2)));
        let off_up = DiffOperator::d_pow(2)
            .scale_rat(&(rat(4) * k0 * (rat(1) + rat(2 * m) * p2 * k0 * k0)));
        let off_down = DiffOperator::rat_op(rat(-8 * m) * p2 * k0);
        MatrixOperator::new(top, off_up, off_down, bottom)
    }

    /// Invariant couple space `(P_(m-2), P_m)^t`.
    pub fn couple_space(&self) -> Result<CoupleSpace> {
        if self.m < 2 {
            return Err(Error::Domain("the couple space needs m >= 2".into()));
        }
        Ok(CoupleSpace::new(self.m - 2, self.m))
    }

    /// Full algebraic construction: runs the pipeline, verifies it against
    /// the closed form (when `p1 = 0`), checks invariance, and returns the
    /// operator with its invariant space.
    pub fn build_algebraic(&self) -> Result<(MatrixOperator, CoupleSpace)> {
        let space = self.couple_space()?;
        let (_, op) = self.pipeline()?;
        if self.p1.is_zero() {
            let closed = self.closed_form();
            let residual = op.sub(&closed);
            if !residual.is_zero() {
                return Err(Error::Domain(format!(
                    "pipeline disagrees with the closed form; residual {residual}"
                )));
            }
        }
        space.check_invariance(&op).into_result()?;
        Ok((op, space))
    }

    /// Numerical potential matrix at a point, including the `epsilon` tail.
    pub fn potential_at(&self, y: f64) -> [[f64; 2]; 2] {
        let v = self.potential_matrix();
        let yq = QuadExt::from_rat(approx_rat(y));
        let mut out = [[0.0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] = v[i][j].eval(&yq).to_f64();
            }
        }
        if !self.epsilon.is_zero() {
            let e = crate::exactnum::rat_to_f64(&self.epsilon);
            let tail = e * (e - 1.0) / (y * y);
            out[0][0] += tail;
            out[1][1] += tail;
        }
        out
    }
}

/// Closest dyadic rational to a float (exact evaluation of polynomials at
/// grid points stays cheap and reproducible).
fn approx_rat(x: f64) -> Rat {
    let scaled = (x * (1u64 << 32) as f64).round() as i64;
    Rat::new(scaled.into(), (1u64 << 32).into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;

    fn params(m: i64) -> PolyPotParams {
        PolyPotParams::new(m, rat(1), rat(0), ratio(1, 2)).unwrap()
    }

    #[test]
    fn pipeline_reproduces_closed_form() {
        for (m, p2, k0) in [(2, rat(1), ratio(1, 2)), (3, rat(1), ratio(1, 2)), (4, rat(2), ratio(1, 3))] {
            let p = PolyPotParams::new(m, p2, rat(0), k0).unwrap();
            let (_, got) = p.pipeline().unwrap();
            assert!(got.sub(&p.closed_form()).is_zero(), "m = {m}");
        }
    }

    #[test]
    fn algebraic_operator_preserves_couples() {
        let (op, space) = params(3).build_algebraic().unwrap();
        assert!(space.check_invariance(&op).invariant());
        assert_eq!(space.dim(), 6);
    }

    #[test]
    fn zero_mixing_block_diagonalizes() {
        let p = PolyPotParams::new(3, rat(1), rat(0), rat(0)).unwrap();
        let (op, _) = p.build_algebraic().unwrap();
        assert!(op.entry(0, 1).is_zero());
        assert!(op.entry(1, 0).is_zero());
    }

    #[test]
    fn nonzero_p1_stays_invariant() {
        let p = PolyPotParams::new(3, rat(1), rat(1), ratio(1, 2)).unwrap();
        let (op, space) = p.build_algebraic().unwrap();
        assert!(space.check_invariance(&op).invariant());
    }

    #[test]
    fn potential_matrix_is_symmetric() {
        let v = params(2).potential_matrix();
        assert_eq!(v[0][1], v[1][0]);
        let at = params(2).potential_at(0.37);
        assert!((at[0][1] - at[1][0]).abs() < 1e-14);
    }

    #[test]
    fn epsilon_gate_on_algebraic_path() {
        let mut p = params(2);
        p.epsilon = ratio(1, 3);
        assert!(p.pipeline().is_err());
    }
}

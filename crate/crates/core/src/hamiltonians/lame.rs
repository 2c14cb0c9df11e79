use crate::exactnum::{rat, ratio, Poly, QuadExt, Rat};
use crate::spaces::CoupleSpace;
use crate::transforms::{conjugate_matrix, conjugate_scalar, GaugeFactor, VariableChange};
use crate::weylop::{DiffOperator, GenExponent, MatrixOperator};
use crate::{Error, Result};

/// Parameters of the coupled elliptic (periodic) system.
///
/// The potential couples two channels through `cn dn`; after the change of
/// variable `x = sn^2` and the channel gauge, everything lives in the
/// quadratic extension generated by `kappa` with `kappa^2 = k2 * R`.
#[derive(Clone, Debug)]
pub struct LameParams {
    pub m: i64,
    pub delta: Rat,
    pub k2: Rat,
}

impl LameParams {
    pub fn new(m: i64, delta: Rat, k2: Rat) -> Result<Self> {
        let p = LameParams { m, delta, k2 };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.m < 0 {
            return Err(Error::Domain("m must be nonnegative".into()));
        }
        if !(rat(0) < self.k2.clone() && self.k2 < rat(1)) {
            return Err(Error::Domain("k2 must lie in (0, 1)".into()));
        }
        let bound = rat(4 * self.m + 3);
        if &self.delta * &self.delta >= &bound * &bound {
            return Err(Error::Domain("(4m+3)^2 must exceed delta^2".into()));
        }
        Ok(())
    }

    /// Diagonal potential strengths `A = 4m^2+6m+3-delta`, `C = A + 2 delta`.
    pub fn a_const(&self) -> Rat {
        rat(4 * self.m * self.m + 6 * self.m + 3) - self.delta.clone()
    }

    pub fn c_const(&self) -> Rat {
        rat(4 * self.m * self.m + 6 * self.m + 3) + self.delta.clone()
    }

    /// `R = (4m+3-delta)/(4m+3+delta)`.
    pub fn r_ratio(&self) -> Rat {
        (rat(4 * self.m + 3) - self.delta.clone()) / (rat(4 * self.m + 3) + self.delta.clone())
    }

    /// `kappa = sqrt(k2 R)` as an exact extension element.
    pub fn kappa(&self) -> QuadExt {
        QuadExt::sqrt_of(&self.k2 * &self.r_ratio())
    }

    /// Off-diagonal coupling `theta = sqrt((4m+3)^2 - delta^2) / 2` (numeric).
    pub fn theta_f64(&self) -> f64 {
        let b = (4 * self.m + 3) as f64;
        let d = crate::exactnum::rat_to_f64(&self.delta);
        0.5 * (b * b - d * d).sqrt()
    }

    /// `w(x) = (1 - x)(1 - k2 x)`, the square of the channel prefactor.
    pub fn prefactor_square(&self) -> Poly {
        &Poly::from_rat_coeffs(vec![rat(1), rat(-1)])
            * &Poly::from_rat_coeffs(vec![rat(1), -self.k2.clone()])
    }

    /// Pullback of `-d^2/dz^2` under `x = sn^2`: `sigma = 4x(1-x)(1-k2 x)`.
    pub fn kinetic_in_x(&self) -> DiffOperator {
        let sigma = &Poly::from_rat_coeffs(vec![rat(0), rat(4)]) * &self.prefactor_square();
        VariableChange::new(sigma).unwrap().pullback_second_derivative().neg()
    }

    /// Full pipeline: channel prefactor conjugation followed by the
    /// triangular `kappa x` mixing. Returns (pre-mixing operator, final).
    pub fn pipeline(&self) -> Result<(MatrixOperator, MatrixOperator)> {
        let kappa = self.kappa();
        let beta = self.delta.clone() + rat(4 * self.m + 3);
        let coupling = kappa.scale(&beta); // kappa (delta + 4m + 3) == 2 theta k exactly
        let kin = self.kinetic_in_x();
        let half = ratio(1, 2);
        let diag_shift = (rat(1) + self.k2.clone()) * &self.delta * half;
        let h11 = kin
            .add(&DiffOperator::from_x_poly(&Poly::from_rat_coeffs(vec![
                diag_shift.clone(),
                self.a_const() * &self.k2,
            ])));
        let h22_base = kin.add(&DiffOperator::from_x_poly(&Poly::from_rat_coeffs(vec![
            -diag_shift,
            self.c_const() * &self.k2,
        ])));
        // channel gauge diag(1, g) with g^2 = w(x)
        let g = GaugeFactor::sqrt_of_poly(&self.prefactor_square());
        let h22 = conjugate_scalar(&h22_base, &g)?;
        let h12 = DiffOperator::from_x_poly(&self.prefactor_square()).scale_quad(&coupling);
        let h21 = DiffOperator::quad_op(coupling);
        let pre_mixing = MatrixOperator::new(h11, h12, h21, h22);

        // triangular mixing U = [[1, kappa x], [0, 1]]
        let kx = DiffOperator::x_pow(GenExponent::int(1)).scale_quad(&kappa);
        let mut u = MatrixOperator::identity();
        u.set_entry(0, 1, kx.clone());
        let mut uinv = MatrixOperator::identity();
        uinv.set_entry(0, 1, kx.neg());
        let final_form = conjugate_matrix(&pre_mixing, &u, &uinv)?;
        Ok((pre_mixing, final_form))
    }

    /// Closed form of the four entries over `Q(kappa)` with `D = x d`:
    ///
    /// ```text
    /// H11 = -4x k2 (D + m + 1/2)(D - m) + (k2+1)(4D^2 + delta/2)      - 2(1+2D) d
    /// H12 = 4 x kappa (k2+1)(D - m) + kappa (-8D + delta + 4m + 1)
    /// H21 = kappa (delta + 4m + 3)
    /// H22 = -4x k2 (D + m + 5/2)(D - m) + (k2+1)((2D+1)^2 - delta/2)  - 2(1+2D) d
    /// ```
    ///
    /// The first sector carries the squared grading `(2D)^2`, the second the
    /// half-odd-shifted `(2D+1)^2`.
    pub fn closed_form(&self) -> MatrixOperator {
        let k2 = &self.k2;
        let kappa = self.kappa();
        let m = self.m;
        let delta = &self.delta;
        let half = ratio(1, 2);
        let x = || DiffOperator::x_pow(GenExponent::int(1));
        let dd = DiffOperator::big_d;
        let k2p1 = rat(1) + k2;

        let band = |extra: Rat| {
            // -4x k2 (D + m + extra)(D - m)
            x().compose(&DiffOperator::prod_d_minus(&[
                Poly::from_rat(-(rat(m) + extra)),
                Poly::from_rat(rat(m)),
            ]))
            .scale_rat(&(rat(-4) * k2))
        };
        let tail = DiffOperator::identity()
            .add(&dd().scale_rat(&rat(2)))
            .compose(&DiffOperator::d_pow(1))
            .scale_rat(&rat(-2)); // -2(1+2D) d

        let h11 = band(half.clone())
            .add(&dd().compose(&dd()).scale_rat(&(rat(4) * &k2p1)))
            .add(&DiffOperator::rat_op(&k2p1 * delta * &half))
            .add(&tail);

        let two_d_plus_1 = DiffOperator::identity().add(&dd().scale_rat(&rat(2)));
        let h22 = band(ratio(5, 2))
            .add(&two_d_plus_1.compose(&two_d_plus_1).scale_rat(&k2p1))
            .sub(&DiffOperator::rat_op(&k2p1 * delta * &half))
            .add(&tail);

        let h12 = x()
            .compose(&dd().sub(&DiffOperator::rat_op(rat(m))))
            .scale_rat(&(rat(4) * &k2p1))
            .add(&dd().scale_rat(&rat(-8)))
            .add(&DiffOperator::rat_op(delta + rat(4 * m + 1)))
            .scale_quad(&kappa);

        let h21 = DiffOperator::quad_op(kappa.scale(&(delta + rat(4 * m + 3))));

        MatrixOperator::new(h11, h12, h21, h22)
    }

    pub fn couple_space(&self) -> CoupleSpace {
        CoupleSpace::new(self.m, self.m)
    }

    /// Pipeline + closed-form cross-check + invariance.
    pub fn build_algebraic(&self) -> Result<(MatrixOperator, CoupleSpace)> {
        let (_, op) = self.pipeline()?;
        let closed = self.closed_form();
        let residual = op.sub(&closed);
        if !residual.is_zero() {
            return Err(Error::Domain(format!(
                "pipeline disagrees with the closed form; residual {residual}"
            )));
        }
        let space = self.couple_space();
        space.check_invariance(&op).into_result()?;
        Ok((op, space))
    }

    /// Numerical 2x2 potential at elliptic coordinate `z`, given the Jacobi
    /// function values at `z`.
    pub fn potential_at(&self, sn: f64, cn: f64, dn: f64) -> [[f64; 2]; 2] {
        let k2 = crate::exactnum::rat_to_f64(&self.k2);
        let k = k2.sqrt();
        let delta = crate::exactnum::rat_to_f64(&self.delta);
        let a = crate::exactnum::rat_to_f64(&self.a_const());
        let c = crate::exactnum::rat_to_f64(&self.c_const());
        let theta = self.theta_f64();
        let sn2 = sn * sn;
        let off = 2.0 * theta * k * cn * dn;
        [
            [a * k2 * sn2 + delta * (1.0 + k2) / 2.0, off],
            [off, c * k2 * sn2 - delta * (1.0 + k2) / 2.0],
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::ExactMatrix;

    fn params(m: i64) -> LameParams {
        LameParams::new(m, ratio(1, 2), ratio(1, 3)).unwrap()
    }

    #[test]
    fn pipeline_matches_closed_form() {
        for (m, delta, k2) in [
            (0, ratio(1, 2), ratio(1, 3)),
            (1, ratio(1, 2), ratio(1, 3)),
            (2, ratio(1, 3), ratio(1, 2)),
            (1, rat(2), ratio(2, 5)),
        ] {
            let p = LameParams::new(m, delta, k2).unwrap();
            let (_, got) = p.pipeline().unwrap();
            let res = got.sub(&p.closed_form());
            assert!(res.is_zero(), "m = {m}: residual {res}");
        }
    }

    #[test]
    fn coupling_entry_is_constant() {
        let p = params(1);
        let (_, h) = p.pipeline().unwrap();
        let want = DiffOperator::quad_op(p.kappa().scale(&(p.delta.clone() + rat(7))));
        assert_eq!(h.entry(1, 0), &want);
    }

    #[test]
    fn invariance_on_equal_degree_couples() {
        for m in 0..=2 {
            let p = params(m);
            let (op, space) = p.build_algebraic().unwrap();
            assert!(space.check_invariance(&op).invariant());
            assert_eq!(space.dim(), (2 * m + 2) as usize);
        }
    }

    #[test]
    fn smallest_restriction_matrix() {
        // m = 0: restriction to constants is
        // [[(k2+1) delta/2, kappa (delta+1)], [kappa (delta+3), (k2+1)(1-delta/2)]].
        let p = params(0);
        let (op, space) = p.build_algebraic().unwrap();
        let m = space.restrict(&op).unwrap();
        let k2p1 = QuadExt::from_rat(rat(1) + p.k2.clone());
        let delta = QuadExt::from_rat(p.delta.clone());
        let kappa = p.kappa();
        let half = QuadExt::from_rat(ratio(1, 2));
        let want = ExactMatrix::from_rows(vec![
            vec![
                &(&k2p1 * &delta) * &half,
                &kappa * &(&delta + &QuadExt::from_int(1)),
            ],
            vec![
                &kappa * &(&delta + &QuadExt::from_int(3)),
                &k2p1 * &(&QuadExt::from_int(1) - &(&delta * &half)),
            ],
        ]);
        assert_eq!(m, want);
    }

    fn apply_to_poly(op: &DiffOperator, p: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (j, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (e, w) in op.apply_to_monomial(&GenExponent::int(j as i64)) {
                let q = e.as_int().expect("plain image");
                assert!(q >= 0);
                let coeff = w.as_constant().unwrap();
                out = &out + &Poly::monomial(&coeff * c, q as usize);
            }
        }
        out
    }

    #[test]
    fn mixing_stage_is_a_change_of_basis() {
        // The pre-mixing operator preserves the transported space spanned by
        // b_j = U e_j with U = [[1, kappa x],[0,1]]; its matrix there, read
        // off by applying the operator and solving the triangular coordinate
        // system, must equal the restriction of the final operator on the
        // plain couple space (so the two stages share a spectrum).
        let p = params(1);
        let (pre, post) = p.pipeline().unwrap();
        let space = p.couple_space();
        let m_post = space.restrict(&post).unwrap();
        let kappa = p.kappa();
        let m = p.m;
        let dim = space.dim();
        // transported basis: top sector (x^j, 0), bottom sector (kappa x^(j+1), x^j)
        let base: Vec<(Poly, Poly)> = (0..=m)
            .map(|j| (Poly::monomial(QuadExt::one(), j as usize), Poly::zero()))
            .chain((0..=m).map(|j| {
                (
                    Poly::monomial(kappa.clone(), j as usize + 1),
                    Poly::monomial(QuadExt::one(), j as usize),
                )
            }))
            .collect();
        let mut m_pre = ExactMatrix::zero(dim);
        for (col, (top, bot)) in base.iter().enumerate() {
            let img_top = &apply_to_poly(pre.entry(0, 0), top) + &apply_to_poly(pre.entry(0, 1), bot);
            let img_bot = &apply_to_poly(pre.entry(1, 0), top) + &apply_to_poly(pre.entry(1, 1), bot);
            // bottom coordinates are direct; top ones after stripping kappa x * bottom
            let kx_bot = Poly::monomial(kappa.clone(), 1);
            let resid = &img_top - &(&kx_bot * &img_bot);
            for (j, c) in img_bot.coeffs().iter().enumerate() {
                assert!(j as i64 <= m, "bottom image escapes the space");
                m_pre.set((m + 1) as usize + j, col, c.clone());
            }
            for (j, c) in resid.coeffs().iter().enumerate() {
                assert!(j as i64 <= m, "top image escapes the transported space");
                m_pre.set(j, col, c.clone());
            }
        }
        assert_eq!(m_pre, m_post);
        assert_eq!(m_pre.char_poly(), m_post.char_poly());
    }

    #[test]
    fn rejects_bad_modulus() {
        assert!(LameParams::new(1, ratio(1, 2), rat(2)).is_err());
        assert!(LameParams::new(0, rat(4), ratio(1, 2)).is_err());
    }
}

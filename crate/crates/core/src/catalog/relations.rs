use crate::exactnum::{rat, ratio, Poly, QuadExt, Rat, RationalFunction};
use crate::spaces::{AParam, FOperator, MonomialSpace};
use crate::weylop::{DiffOperator, GenExponent};
use crate::{Error, Result};

use super::families::{
    cap_j_minus, cap_j_plus, cap_j_zero, j_minus, j_plus, k_conj, q_mix, q_mix_bar, s_triple,
    stilde_triple, w_minus, w_plus,
};

/// Whether a relation is an identity in the operator algebra or only an
/// identity on the invariant space.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RelationKind {
    OperatorIdentity,
    OnSpace,
}

#[derive(Clone, Debug)]
pub struct RelationReport {
    pub name: String,
    pub holds: bool,
    pub kind: RelationKind,
    pub residual: String,
    pub notes: Vec<String>,
}

/// Exact fit of `[J+, J-]` as a cubic in `J0`:
/// coefficients are polynomials in the formal parameter `a`.
#[derive(Clone, Debug)]
pub struct AlgebraFitResult {
    /// Coefficients of `J0^3, J0^2, J0, 1` in that order.
    pub coefficients: [Poly; 4],
    pub residual_is_zero: bool,
}

/// True when the operator annihilates every basis element of the space
/// (exactly, with formal `a` where applicable).
pub fn is_zero_on_space(op: &DiffOperator, space: &MonomialSpace) -> bool {
    let op = match space.a_param() {
        AParam::Formal => op.clone(),
        AParam::Value(v) => op.specialize_a(v),
    };
    space
        .basis_exponents()
        .iter()
        .all(|b| op.apply_to_monomial(b).is_empty())
}

/// Diagonal eigenvalue of an operator on `x^s` (errors if the image is not a
/// multiple of `x^s`).
fn diagonal_eigenvalue(op: &DiffOperator, s: &GenExponent) -> Result<Poly> {
    let img = op.apply_to_monomial(s);
    match img.len() {
        0 => Ok(Poly::zero()),
        1 if &img[0].0 == s => Ok(img[0].1.clone()),
        _ => Err(Error::Domain(format!(
            "operator is not diagonal on x^({s})"
        ))),
    }
}

/// Solve `[J+, J-] = alpha J0^3 + beta J0^2 + gamma J0 + delta` exactly with
/// formal `a`: sample the diagonal action on four monomials, solve the
/// rational Vandermonde system, then subtract and demand the zero operator.
pub fn fit_casimir(n: i64, m: i64) -> Result<AlgebraFitResult> {
    let a = AParam::Formal;
    let c = cap_j_plus(n, m, &a).commutator(&cap_j_minus(&a));
    let center = ratio(m + n + 1, 2);
    // Nodes t_s = s - (m+n+1)/2, s = 0..3; values from the diagonal action.
    let mut nodes = vec![];
    let mut values = vec![];
    for s in 0..4i64 {
        nodes.push(rat(s) - center.clone());
        values.push(diagonal_eigenvalue(&c, &GenExponent::int(s))?);
    }
    // Vandermonde solve over Q with polynomial right-hand sides.
    let mut mat: Vec<Vec<Rat>> = nodes
        .iter()
        .map(|t| (0..4).map(|k| num_pow(t, k)).collect())
        .collect();
    let mut rhs = values;
    for col in 0..4 {
        let pivot = (col..4)
            .find(|&r| !num_is_zero(&mat[r][col]))
            .ok_or_else(|| Error::Domain("singular fit system".into()))?;
        mat.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = rat(1) / mat[col][col].clone();
        for k in col..4 {
            mat[col][k] = &mat[col][k] * &inv;
        }
        rhs[col] = rhs[col].scale(&QuadExt::from_rat(inv));
        for r in 0..4 {
            if r != col && !num_is_zero(&mat[r][col]) {
                let f = mat[r][col].clone();
                for k in col..4 {
                    mat[r][k] = &mat[r][k] - &(&f * &mat[col][k]);
                }
                let sub = rhs[col].scale(&QuadExt::from_rat(f));
                rhs[r] = &rhs[r] - &sub;
            }
        }
    }
    // rhs[k] is now the coefficient of J0^k.
    let j0 = cap_j_zero(n, m);
    let mut model = DiffOperator::zero();
    for (k, coeff) in rhs.iter().enumerate() {
        model = model.add(&j0.pow(k as u32).scale(coeff));
    }
    let residual = c.sub(&model);
    Ok(AlgebraFitResult {
        coefficients: [rhs[3].clone(), rhs[2].clone(), rhs[1].clone(), rhs[0].clone()],
        residual_is_zero: residual.is_zero(),
    })
}

fn num_pow(t: &Rat, k: usize) -> Rat {
    let mut acc = rat(1);
    for _ in 0..k {
        acc = acc * t.clone();
    }
    acc
}

fn num_is_zero(t: &Rat) -> bool {
    use num_traits::Zero;
    t.is_zero()
}

/// Exact fit of the anticommutator `{Q, Qbar}` (case `n = m`, formal `a`) as
/// a polynomial in `J0` on the invariant space: Lagrange interpolation over
/// the field of rational functions in `a` through the 2n+2 distinct
/// `J0`-eigenvalues, then verification as a zero map.
///
/// Returns the coefficients (ascending powers of `J0`, polynomials in `a`)
/// and whether the verification succeeded.
pub fn fit_anticommutator(n: i64) -> Result<(Vec<Poly>, bool)> {
    let a = AParam::Formal;
    let q = q_mix(0, n, n, &a);
    let qb = q_mix_bar(0, n, n, &a);
    let anti = q.compose(&qb).add(&qb.compose(&q));
    let space = MonomialSpace::two_sector(n, n, AParam::Formal);

    // J0-eigenvalue (node) and anticommutator eigenvalue per basis monomial.
    let center = ratio(2 * n + 1, 2);
    let mut nodes: Vec<RationalFunction> = vec![];
    let mut values: Vec<RationalFunction> = vec![];
    for b in space.basis_exponents() {
        let node = &b.as_poly_in_a() - &Poly::from_rat(center.clone());
        nodes.push(RationalFunction::from_poly(node));
        values.push(RationalFunction::from_poly(diagonal_eigenvalue(&anti, &b)?));
    }

    // Lagrange interpolation with coefficients in Q(a).
    let npts = nodes.len();
    let mut g: Vec<RationalFunction> = vec![RationalFunction::zero(); npts];
    for i in 0..npts {
        // basis polynomial prod_{j != i} (t - x_j) / (x_i - x_j)
        let mut poly_t = vec![RationalFunction::one()];
        let mut denom = RationalFunction::one();
        for j in 0..npts {
            if j == i {
                continue;
            }
            // multiply poly_t by (t - x_j)
            let mut next = vec![RationalFunction::zero(); poly_t.len() + 1];
            for (k, c) in poly_t.iter().enumerate() {
                next[k + 1] = &next[k + 1] + c;
                next[k] = &next[k] - &(c * &nodes[j]);
            }
            poly_t = next;
            denom = &denom * &(&nodes[i] - &nodes[j]);
        }
        let w = &values[i] / &denom;
        for (k, c) in poly_t.iter().enumerate() {
            g[k] = &g[k] + &(c * &w);
        }
    }
    while g.last().map_or(false, |c| c.is_zero()) {
        g.pop();
    }

    // Coefficients must clear their a-denominators.
    let mut coeffs = vec![];
    for c in &g {
        let p = c.as_poly().ok_or_else(|| {
            Error::Domain(format!("anticommutator fit coefficient is not polynomial in a: {c}"))
        })?;
        coeffs.push(p.clone());
    }

    // Verify as a zero map on the space.
    let j0 = cap_j_zero(n, n);
    let mut model = DiffOperator::zero();
    for (k, c) in coeffs.iter().enumerate() {
        model = model.add(&j0.pow(k as u32).scale(c));
    }
    let ok = is_zero_on_space(&anti.sub(&model), &space);
    Ok((coeffs, ok))
}

/// Find `c` with `lhs = c * rhs` for radical-ring operators, if it exists.
pub fn proportionality_constant(lhs: &FOperator, rhs: &FOperator) -> Option<QuadExt> {
    let pick = |op: &FOperator| -> Option<RationalFunction> {
        for c in op.plain_part().coeffs().iter().chain(op.f_part().coeffs()) {
            if !c.is_zero() {
                return Some(c.clone());
            }
        }
        None
    };
    let r = pick(rhs)?;
    // matching coefficient of lhs at the same slot
    let all = |op: &FOperator| -> Vec<RationalFunction> {
        let mut v: Vec<RationalFunction> = op.plain_part().coeffs().to_vec();
        v.push(RationalFunction::zero()); // separator cannot collide: orders differ
        v.extend(op.f_part().coeffs().to_vec());
        v
    };
    let rv = all(rhs);
    let lv = all(lhs);
    let idx = rv.iter().position(|c| c == &r)?;
    let l = lv.get(idx)?.clone();
    let c = &l / &r;
    let c = c.as_poly()?.as_constant()?;
    if lhs == &rhs.scale_quad(&c) {
        Some(c)
    } else {
        None
    }
}

/// Registry row for a named relation.
pub struct RelationInfo {
    pub name: &'static str,
    pub params: &'static str,
    pub describes: &'static str,
}

pub fn relation_registry() -> &'static [RelationInfo] {
    &[
        RelationInfo { name: "sl2", params: "n", describes: "[j0,j±] = ±j±, [j+,j-] = -2 j0" },
        RelationInfo { name: "grading", params: "n, m", describes: "[J0, J±] = ±J± (operator identity)" },
        RelationInfo { name: "nlalgebra", params: "n, m", describes: "[J+, J-] = cubic(J0), coefficients fitted exactly" },
        RelationInfo { name: "q-jminus", params: "n (= m)", describes: "[Q, J-] = (2a - n - 1) j- Q on the space" },
        RelationInfo { name: "q-jplus", params: "n (= m)", describes: "[Q, J+] = (2a + n + 1) j+ Q on the space" },
        RelationInfo { name: "qbar-jminus", params: "n (= m)", describes: "[Qbar, J-] = -(2a + n + 1) k-(a) Qbar on the space" },
        RelationInfo { name: "qbar-jplus", params: "n (= m)", describes: "[Qbar, J+] = -(2a - n - 1) k+(a) Qbar on the space" },
        RelationInfo { name: "q-grading", params: "n (= m)", describes: "[Q, D] = a Q and [Qbar, D] = -a Qbar on the space" },
        RelationInfo { name: "nilpotency", params: "n, m", describes: "Q_a Q_b = Qbar_a Qbar_b = 0 on the space" },
        RelationInfo { name: "anticommutator", params: "n (= m)", describes: "{Q, Qbar} is a polynomial in J0 on the space" },
        RelationInfo { name: "so3", params: "n, lambda", describes: "radical triple closes: [S1,S2]=-S3, [S2,S3]=S1, [S3,S1]=S2 at lambda=-1" },
        RelationInfo { name: "so3-tilde", params: "n, lambda", describes: "conjugated triple closes with the same constants" },
        RelationInfo { name: "w-ladder", params: "n, m (k = n+1)", describes: "W- = (j-)^(n+1) and W+ = (j+(m+n+1))^(n+1)" },
        RelationInfo { name: "w-commutators", params: "m (k = 2, n = 0)", describes: "[W+, J±] closed forms of order-2 ladder" },
    ]
}

fn report(name: &str, kind: RelationKind, residual_zero: bool, residual: String) -> RelationReport {
    RelationReport { name: name.into(), holds: residual_zero, kind, residual, notes: vec![] }
}

/// Verify a named relation exactly; `n`, `m` as applicable, formal `a`.
pub fn verify_relation(name: &str, n: i64, m: i64, lambda: Option<&Rat>) -> Result<RelationReport> {
    let a = AParam::Formal;
    match name {
        "sl2" => {
            let mut res = j_zero_bracket_residual(n);
            let jpm = j_plus(n).commutator(&j_minus()).add(&j_zero_times(n, 2));
            res = res.add(&jpm);
            Ok(report("sl2", RelationKind::OperatorIdentity, res.is_zero(), res.display()))
        }
        "grading" => {
            let j0 = cap_j_zero(n, m);
            let jp = cap_j_plus(n, m, &a);
            let jm = cap_j_minus(&a);
            let r1 = j0.commutator(&jp).sub(&jp);
            let r2 = j0.commutator(&jm).add(&jm);
            let res = r1.add(&r2);
            Ok(report("grading", RelationKind::OperatorIdentity, res.is_zero(), res.display()))
        }
        "nlalgebra" => {
            let fit = fit_casimir(n, m)?;
            let mut rep = report(
                "nlalgebra",
                RelationKind::OperatorIdentity,
                fit.residual_is_zero,
                if fit.residual_is_zero { "0".into() } else { "nonzero".into() },
            );
            rep.notes.push(format!(
                "cubic coefficients in J0 (deg 3..0, polynomials in a): [{}], [{}], [{}], [{}]",
                fit.coefficients[0].display_with("a"),
                fit.coefficients[1].display_with("a"),
                fit.coefficients[2].display_with("a"),
                fit.coefficients[3].display_with("a"),
            ));
            Ok(rep)
        }
        "q-jminus" | "q-jplus" | "qbar-jminus" | "qbar-jplus" => {
            mixed_relation(name, n)
        }
        "q-grading" => {
            let space = MonomialSpace::two_sector(n, n, AParam::Formal);
            let q = q_mix(0, n, n, &a);
            let qb = q_mix_bar(0, n, n, &a);
            let d_op = DiffOperator::big_d();
            let a_poly = Poly::from_rat_coeffs(vec![rat(0), rat(1)]);
            let r1 = q.commutator(&d_op).sub(&q.scale(&a_poly));
            let r2 = qb.commutator(&d_op).add(&qb.scale(&a_poly));
            let ok = is_zero_on_space(&r1, &space) && is_zero_on_space(&r2, &space);
            let mut rep = report("q-grading", RelationKind::OnSpace, ok, String::new());
            rep.notes.push("verified in the form [Q, D] = a Q, [Qbar, D] = -a Qbar".into());
            Ok(rep)
        }
        "nilpotency" => {
            let delta = (m - n).abs();
            let space = MonomialSpace::two_sector(n, m, AParam::Formal);
            let mut ok = true;
            for al in 0..=delta {
                for be in 0..=delta {
                    let qq = q_mix(al, n, m, &a).compose(&q_mix(be, n, m, &a));
                    let qbqb = q_mix_bar(al, n, m, &a).compose(&q_mix_bar(be, n, m, &a));
                    ok &= is_zero_on_space(&qq, &space) && is_zero_on_space(&qbqb, &space);
                }
            }
            Ok(report("nilpotency", RelationKind::OnSpace, ok, String::new()))
        }
        "anticommutator" => {
            let (coeffs, ok) = fit_anticommutator(n)?;
            let mut rep = report("anticommutator", RelationKind::OnSpace, ok, String::new());
            rep.notes.push(format!(
                "fitted polynomial in J0 of degree {} with polynomial-in-a coefficients",
                coeffs.len().saturating_sub(1)
            ));
            Ok(rep)
        }
        "so3" | "so3-tilde" => {
            let lambda = lambda.cloned().unwrap_or_else(|| rat(-1));
            let s = if name == "so3" {
                s_triple(&rat(n), &lambda)?
            } else {
                stilde_triple(n, &lambda)?
            };
            // Closure constants of the triple: [S1,S2] = -S3, [S2,S3] = S1,
            // [S3,S1] = S2 (antisymmetric in the first two indices).
            let checks = [
                (s[0].commutator(&s[1]), s[2].neg(), "[S1,S2] = -S3"),
                (s[1].commutator(&s[2]), s[0].clone(), "[S2,S3] = S1"),
                (s[2].commutator(&s[0]), s[1].clone(), "[S3,S1] = S2"),
            ];
            let mut ok = true;
            let mut rep = report(name, RelationKind::OperatorIdentity, true, String::new());
            for (got, want, label) in checks {
                let match_ok = got == want;
                ok &= match_ok;
                rep.notes.push(format!("{label}: {}", if match_ok { "holds" } else { "FAILS" }));
            }
            rep.holds = ok;
            if !ok && lambda != rat(-1) {
                rep.notes.push(
                    "closure with unit constants is specific to lambda = -1; other values close in the span"
                        .into(),
                );
            }
            Ok(rep)
        }
        "w-ladder" => {
            let k = n + 1;
            let r1 = w_minus(k, n).sub(&j_minus().pow(k as u32));
            let r2 = w_plus(k, m).sub(&j_plus(m + n + 1).pow(k as u32));
            let res = r1.add(&r2);
            Ok(report("w-ladder", RelationKind::OperatorIdentity, res.is_zero(), res.display()))
        }
        "w-commutators" => {
            // k = 2, n = 0, shifted parameter a = 2.
            let a2 = AParam::Value(rat(2));
            let wp = w_plus(2, m);
            let jp = cap_j_plus(0, m, &a2);
            let jm = cap_j_minus(&a2);
            // [W+, J+] = -2 x^3 (D-(m+2))(D-(m+1))(D-m)
            let want_p = DiffOperator::x_pow(GenExponent::int(3))
                .compose(&DiffOperator::prod_d_minus(&[
                    Poly::from_rat(rat(m + 2)),
                    Poly::from_rat(rat(m + 1)),
                    Poly::from_rat(rat(m)),
                ]))
                .scale_rat(&rat(-2));
            // [W+, J-] = -6 x D (D-(m+2))(D-(2/3)(m+2))
            let want_m = DiffOperator::x_pow(GenExponent::int(1))
                .compose(&DiffOperator::prod_d_minus(&[
                    Poly::from_rat(rat(0)),
                    Poly::from_rat(rat(m + 2)),
                    Poly::from_rat(ratio(2 * (m + 2), 3)),
                ]))
                .scale_rat(&rat(-6));
            let r1 = wp.commutator(&jp).sub(&want_p);
            let r2 = wp.commutator(&jm).sub(&want_m);
            let res = r1.add(&r2);
            Ok(report(
                "w-commutators",
                RelationKind::OperatorIdentity,
                res.is_zero(),
                res.display(),
            ))
        }
        other => Err(Error::Domain(format!("unknown relation `{other}`"))),
    }
}

fn j_zero_times(n: i64, c: i64) -> DiffOperator {
    super::families::j_zero(n).scale_rat(&rat(c))
}

fn j_zero_bracket_residual(n: i64) -> DiffOperator {
    let j0 = super::families::j_zero(n);
    let jp = j_plus(n);
    let jm = j_minus();
    j0.commutator(&jp).sub(&jp).add(&j0.commutator(&jm).add(&jm))
}

fn mixed_relation(name: &str, n: i64) -> Result<RelationReport> {
    let a = AParam::Formal;
    let space = MonomialSpace::two_sector(n, n, AParam::Formal);
    let q = q_mix(0, n, n, &a);
    let qb = q_mix_bar(0, n, n, &a);
    let jp = cap_j_plus(n, n, &a);
    let jm = cap_j_minus(&a);
    // coefficient polynomials in a
    let c_low = Poly::from_rat_coeffs(vec![rat(-n - 1), rat(2)]); // 2a - n - 1
    let c_high = Poly::from_rat_coeffs(vec![rat(n + 1), rat(2)]); // 2a + n + 1
    let residual = match name {
        "q-jminus" => q.commutator(&jm).sub(&j_minus().compose(&q).scale(&c_low)),
        "q-jplus" => q.commutator(&jp).sub(&j_plus(n).compose(&q).scale(&c_high)),
        "qbar-jminus" => qb
            .commutator(&jm)
            .add(&k_conj(-1, n, &a).compose(&qb).scale(&c_high)),
        "qbar-jplus" => qb
            .commutator(&jp)
            .add(&k_conj(1, n, &a).compose(&qb).scale(&c_low)),
        _ => unreachable!(),
    };
    let ok = is_zero_on_space(&residual, &space);
    Ok(report(name, RelationKind::OnSpace, ok, String::new()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_brackets_close() {
        for n in 0..=4 {
            let rep = verify_relation("sl2", n, 0, None).unwrap();
            assert!(rep.holds, "n = {n}");
        }
    }

    #[test]
    fn sl2_commutator_is_minus_two_j0() {
        // [j+(n), j-] = -2 j0(n)
        let n = 3;
        let got = j_plus(n).commutator(&j_minus());
        assert_eq!(got, j_zero_times(n, -2));
    }

    #[test]
    fn grading_bracket_at_specific_rational_a() {
        // [J0, J+] = +J+ also after specializing a = 7/3.
        let a = ratio(7, 3);
        let jp = cap_j_plus(2, 3, &AParam::Value(a));
        let j0 = cap_j_zero(2, 3);
        assert_eq!(j0.commutator(&jp), jp);
    }

    #[test]
    fn casimir_fit_small() {
        let fit = fit_casimir(2, 3).unwrap();
        assert!(fit.residual_is_zero);
    }

    #[test]
    fn mixed_relations_hold_on_space() {
        for name in ["q-jminus", "q-jplus", "qbar-jminus", "qbar-jplus", "q-grading"] {
            let rep = verify_relation(name, 2, 2, None).unwrap();
            assert!(rep.holds, "{name}: {:?}", rep.notes);
        }
    }

    #[test]
    fn nilpotency_on_space() {
        for (n, m) in [(1, 1), (2, 2), (1, 3)] {
            let rep = verify_relation("nilpotency", n, m, None).unwrap();
            assert!(rep.holds, "(n, m) = ({n}, {m})");
        }
    }

    #[test]
    fn anticommutator_is_polynomial_in_j0() {
        let (coeffs, ok) = fit_anticommutator(1).unwrap();
        assert!(ok);
        assert!(!coeffs.is_empty());
    }

    #[test]
    fn so3_closure_at_minus_one() {
        for n in 1..=3 {
            let rep = verify_relation("so3", n, 0, Some(&rat(-1))).unwrap();
            assert!(rep.holds, "n = {n}: {:?}", rep.notes);
        }
    }

    #[test]
    fn so3_tilde_closure_at_minus_one() {
        let rep = verify_relation("so3-tilde", 2, 0, Some(&rat(-1))).unwrap();
        assert!(rep.holds, "{:?}", rep.notes);
    }

    #[test]
    fn w_ladder_identity() {
        for (n, m) in [(0, 3), (1, 4), (2, 6)] {
            let rep = verify_relation("w-ladder", n, m, None).unwrap();
            assert!(rep.holds, "(n, m) = ({n}, {m})");
        }
    }

    #[test]
    fn w_commutators_closed_forms() {
        for m in [4, 5, 7] {
            let rep = verify_relation("w-commutators", 0, m, None).unwrap();
            assert!(rep.holds, "m = {m}: residual {}", rep.residual);
        }
    }
}

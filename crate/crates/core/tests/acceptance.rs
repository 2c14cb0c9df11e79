//! Acceptance suite. One test per criterion; the test name is the pass/fail
//! line. Every threshold is pinned here, in code. Run with
//! `cargo test --test acceptance -- --nocapture` to see the detail lines.

use qes_core::cases::{
    spectrum_report, verify_report, BoseHubbardCase, LameCase, PolyPotCase, QesCase, RawParams,
};
use qes_core::catalog::{
    self, build, family_registry, fit_casimir, verify_relation, BuiltOperator, DeclaredSpace,
    FamilyParams,
};
use qes_core::exactnum::{rat, ratio, Poly, QuadExt, Rat};
use qes_core::hamiltonians::{BoseHubbardParams, LameParams, PolyPotParams};
use qes_core::numverify::{complete_elliptic_k, jacobi_sncndn, Domain, GridProblem, Potential};
use qes_core::recurrence::scalar_factorization;
use qes_core::spaces::{AParam, CoupleSpace, ExactMatrix, FCase, TwoComponentSpace};
use qes_core::weylop::{DiffOperator, GenExponent, MatrixOperator};

fn raw(pairs: &[(&str, &str)]) -> RawParams {
    let mut r = RawParams::default();
    for (k, v) in pairs {
        r.set(k, *v);
    }
    r
}

#[test]
fn criterion_01_operator_identities_grading_and_cubic_commutator() {
    for n in 0..=6i64 {
        for m in 0..=6i64 {
            let rep = verify_relation("grading", n, m, None).unwrap();
            assert!(rep.holds, "grading bracket failed at (n, m) = ({n}, {m})");
            let fit = fit_casimir(n, m).unwrap();
            assert!(
                fit.residual_is_zero,
                "cubic commutator fit leaves a residual at (n, m) = ({n}, {m})"
            );
        }
    }
    println!("ACCEPTANCE 1: PASS - grading brackets and cubic commutator exact for (n, m) <= 6, formal a");
}

#[test]
fn criterion_02_invariance_suite() {
    let mut checked = 0usize;
    let mut check = |name: &str, p: &FamilyParams| {
        let built = build(name, p).unwrap_or_else(|e| panic!("build {name}: {e}"));
        match (&built.operator, &built.space) {
            (BuiltOperator::Scalar(op), DeclaredSpace::Monomial(sp)) => {
                let rep = sp.check_invariance(op);
                assert!(rep.invariant(), "{name} {:?} fails invariance: {:?}", p, rep.failures);
            }
            (BuiltOperator::Radical(op), DeclaredSpace::TwoComponent(sp)) => {
                let rep = sp.check_invariance(op);
                assert!(rep.invariant(), "{name} {:?} fails invariance: {:?}", p, rep.failures);
            }
            _ => return,
        }
        checked += 1;
    };

    let a_values = [AParam::Formal, AParam::Value(ratio(7, 3)), AParam::Value(rat(4))];
    for n in 0..=6i64 {
        for fam in ["j-", "j0", "j+"] {
            check(fam, &FamilyParams { n: Some(n), ..Default::default() });
        }
        for a in &a_values {
            for fam in ["k-", "k0", "k+"] {
                check(fam, &FamilyParams { n: Some(n), a: Some(a.clone()), ..Default::default() });
            }
        }
        for m in 0..=6i64 {
            for a in &a_values {
                let base = FamilyParams {
                    n: Some(n),
                    m: Some(m),
                    a: Some(a.clone()),
                    ..Default::default()
                };
                for fam in ["J-", "J0", "J+", "K", "K'"] {
                    check(fam, &base);
                }
                for alpha in 0..=(m - n).abs() {
                    let p = FamilyParams { alpha: Some(alpha), ..base.clone() };
                    check("Q", &p);
                    check("Qbar", &p);
                }
            }
        }
    }
    // ladder family: integer a = k with n <= k and m - k >= n
    for k in 1..=6i64 {
        for n in 0..=k.min(3) {
            for m in (k + n)..=(k + n + 2) {
                let p = FamilyParams {
                    n: Some(n),
                    m: Some(m),
                    a: Some(AParam::Value(rat(k))),
                    ..Default::default()
                };
                check("W+", &p);
                check("W-", &p);
            }
        }
    }
    // radical triples at both lambdas
    for lambda in [rat(-1), ratio(1, 3)] {
        for n in 1..=6i64 {
            for fam in ["S1", "S2", "S3", "S~1", "S~2", "S~3"] {
                check(
                    fam,
                    &FamilyParams { n: Some(n), lambda: Some(lambda.clone()), ..Default::default() },
                );
            }
        }
    }
    assert!(checked > 400, "sweep unexpectedly small: {checked}");
    println!("ACCEPTANCE 2: PASS - {checked} invariance checks, zero failures");
}

#[test]
fn criterion_03_nilpotency_and_mixed_relations() {
    for n in 0..=5i64 {
        for rel in ["q-jminus", "q-jplus", "qbar-jminus", "qbar-jplus"] {
            let rep = verify_relation(rel, n, n, None).unwrap();
            assert!(rep.holds, "{rel} fails at n = m = {n}");
        }
    }
    for (n, m) in [(1i64, 1i64), (2, 2), (3, 3), (4, 4), (5, 5), (1, 3), (2, 5), (4, 1)] {
        let rep = verify_relation("nilpotency", n, m, None).unwrap();
        assert!(rep.holds, "nilpotency fails at (n, m) = ({n}, {m})");
    }
    println!("ACCEPTANCE 3: PASS - mixing operators nilpotent and bracket relations exact on the space, n = m <= 5");
}

#[test]
fn criterion_04_ladder_suite() {
    // action table
    for (n, k, m) in [(0i64, 1i64, 1i64), (0, 2, 2), (1, 2, 3), (1, 3, 4), (2, 3, 5), (2, 4, 7)] {
        let wp = catalog::w_plus(k, m);
        let wm = catalog::w_minus(k, n);
        for j in 0..=n {
            let img = wp.apply_to_monomial(&GenExponent::int(j));
            assert_eq!(img.len(), 1);
            assert_eq!(img[0].0, GenExponent::int(j + k), "W+ shifts plain into the window");
            assert!(wm.apply_to_monomial(&GenExponent::int(j)).is_empty(), "W- kills plain");
        }
        for j in (m - k + 1)..=m {
            assert!(
                wp.apply_to_monomial(&GenExponent::int(k + j)).is_empty(),
                "W+ kills the top {k} shifted monomials"
            );
        }
        for j in 0..=n {
            let img = wm.apply_to_monomial(&GenExponent::int(k + j));
            assert_eq!(img[0].0, GenExponent::int(j), "W- lowers the bottom of the window");
        }
    }
    // k = n + 1 ladder identities
    for (n, m) in [(0i64, 2i64), (1, 4), (2, 6), (3, 8)] {
        let rep = verify_relation("w-ladder", n, m, None).unwrap();
        assert!(rep.holds, "(n, m) = ({n}, {m})");
    }
    // order-2 special case commutators
    for m in [3i64, 5, 8] {
        let rep = verify_relation("w-commutators", 0, m, None).unwrap();
        assert!(rep.holds, "m = {m}: {}", rep.residual);
    }
    println!("ACCEPTANCE 4: PASS - ladder action table, power identities and order-2 commutators exact");
}

#[test]
fn criterion_05_radical_triple_closure() {
    for n in 1..=6i64 {
        let rep = verify_relation("so3", n, 0, Some(&rat(-1))).unwrap();
        assert!(rep.holds, "triple closure fails at n = {n}: {:?}", rep.notes);
        let rep = verify_relation("so3-tilde", n, 0, Some(&rat(-1))).unwrap();
        assert!(rep.holds, "conjugated triple closure fails at n = {n}: {:?}", rep.notes);
    }
    // antisymmetry of the recorded constants: [Si, Sj] = -[Sj, Si] with the
    // constants (c123, c231, c312) = (-1, +1, +1)
    let s = catalog::s_triple(&rat(3), &rat(-1)).unwrap();
    assert_eq!(s[0].commutator(&s[1]), s[1].commutator(&s[0]).neg());
    println!("ACCEPTANCE 5: PASS - triples close exactly with constants (-1, +1, +1); conjugated family closes identically");
}

#[test]
fn criterion_06_scalar_matrix_correspondence() {
    for n in 1..=5i64 {
        let lambda = rat(-1);
        let triple = catalog::s_triple(&rat(n), &lambda).unwrap();
        let space = TwoComponentSpace::new(n, n - 1, FCase::SqrtP2, lambda).unwrap();
        let couple = CoupleSpace::new(n, n - 1);
        // homomorphism on all products of the triple
        for a in &triple {
            for b in &triple {
                let lhs = space.scalar_to_matrix(&a.compose(b)).unwrap();
                let rhs = space
                    .scalar_to_matrix(a)
                    .unwrap()
                    .compose(&space.scalar_to_matrix(b).unwrap());
                assert_eq!(lhs, rhs, "matrix map is not multiplicative at n = {n}");
            }
        }
        // spectrum preservation on a non-trivial word
        let word = triple[0].compose(&triple[1]).add(&triple[2].compose(&triple[2]));
        let r_scalar = space.restrict(&word).unwrap();
        let r_matrix = couple.restrict(&space.scalar_to_matrix(&word).unwrap()).unwrap();
        assert_eq!(r_scalar.char_poly(), r_matrix.char_poly(), "n = {n}");
    }
    println!("ACCEPTANCE 6: PASS - scalar-to-matrix is a homomorphism with identical characteristic polynomials, n <= 5");
}

#[test]
fn criterion_07_pipeline_reproduction() {
    // sextic system: the full gauge/variable/mixing pipeline equals the
    // closed form term by term
    for m in [2i64, 3, 4] {
        let p = PolyPotParams::new(m, rat(1), rat(0), ratio(1, 2)).unwrap();
        let (_, h) = p.pipeline().unwrap();
        let residual = h.sub(&p.closed_form());
        assert!(residual.is_zero(), "sextic pipeline residual at m = {m}: {residual}");
    }
    // periodic system: three entries match the reference forms exactly; the
    // bottom-right entry of the reference display carries a single slipped
    // grading term, isolated here exactly as 2 (k2 + 1) D.
    for (m, delta, k2) in [
        (0i64, ratio(1, 2), ratio(1, 3)),
        (1, ratio(1, 2), ratio(1, 3)),
        (2, ratio(1, 3), ratio(1, 2)),
    ] {
        let p = LameParams::new(m, delta.clone(), k2.clone()).unwrap();
        let (_, h) = p.pipeline().unwrap();
        let derived = p.closed_form();
        assert!(h.sub(&derived).is_zero(), "pipeline vs closed form at m = {m}");

        // variant with the 22-entry grading written 4D^2 + 2D + 1 instead of
        // (2D + 1)^2: residual must be exactly 2 (k2+1) D in that entry
        let mut variant = derived.clone();
        let two_d = DiffOperator::big_d().scale_rat(&rat(2));
        let k2p1 = rat(1) + k2.clone();
        variant.set_entry(1, 1, derived.entry(1, 1).sub(&two_d.scale_rat(&k2p1)));
        let resid = h.sub(&variant);
        assert!(resid.entry(0, 0).is_zero() && resid.entry(0, 1).is_zero() && resid.entry(1, 0).is_zero());
        assert_eq!(resid.entry(1, 1), &two_d.scale_rat(&(rat(1) + k2.clone())));
    }
    println!("ACCEPTANCE 7: PASS - sextic pipeline exact for m in {{2,3,4}}; periodic entries exact up to one isolated grading slip in H22 (logged)");
}

#[test]
fn criterion_08_band_matrices_match_derivations() {
    // --- periodic system, n <= 20 ---
    let case = LameCase;
    let (m, delta, k2) = (1i64, ratio(1, 2), ratio(1, 3));
    let chains = case
        .chains(&raw(&[("m", "1"), ("delta", "1/2"), ("k2", "1/3")]))
        .unwrap();
    let sys = &chains[0].system;
    let p = LameParams::new(m, delta.clone(), k2.clone()).unwrap();
    let kappa = p.kappa();
    let k2p1 = QuadExt::from_rat(rat(1) + k2.clone());
    let q = QuadExt::from_rat;
    for n in 0..=20i64 {
        // leading matrix is the identity in the alternating-even-factorial scaling
        assert_eq!(sys.leading_matrix_scaled(n), ExactMatrix::identity(2), "C({n})");
        let a = sys.a_matrix(n);
        // A11 = -(k2+1)(4n^2 + delta/2)
        let want11 = -&(&k2p1 * &q(rat(4 * n * n) + &delta / rat(2)));
        assert_eq!(a.get(0, 0), &want11, "A11({n})");
        // A12 = -kappa(-8n + delta + 4m + 1)
        let want12 = -&(&kappa * &q(rat(-8 * n) + &delta + rat(4 * m + 1)));
        assert_eq!(a.get(0, 1), &want12, "A12({n})");
        // A21 = -kappa(delta + 4m + 3)
        let want21 = -&(&kappa * &q(delta.clone() + rat(4 * m + 3)));
        assert_eq!(a.get(1, 0), &want21, "A21({n})");
        // A22 = -(k2+1)((2n+1)^2 - delta/2): the reference display writes the
        // grading as 4n^2 + 2n + 1; the derived operator carries (2n+1)^2.
        let want22 = -&(&k2p1 * &q(rat((2 * n + 1) * (2 * n + 1)) - &delta / rat(2)));
        assert_eq!(a.get(1, 1), &want22, "A22({n})");

        let b = sys.b_matrix(n);
        // diagonal entries match the reference display exactly
        let b11 = q(rat(4) * &k2 * rat(n - m - 1) * (rat(n + m) - ratio(1, 2)));
        let b22 = q(rat(4) * &k2 * rat(n - m - 1) * (rat(n + m) + ratio(3, 2)));
        assert_eq!(b.get(0, 0), &b11, "B11({n})");
        assert_eq!(b.get(1, 1), &b22, "B22({n})");
        assert!(b.get(1, 0).is_zero());
        // the operator also carries an upper-triangular coupling the
        // reference display omits; it vanishes at the same index n = m + 1
        let b12 = -&(&kappa * &(&k2p1 * &q(rat(4) * rat(n - 1 - m))));
        assert_eq!(b.get(0, 1), &b12, "B12({n})");
    }

    // initial data in the weighted convention: P1 = (E + A(0)) P0 with both
    // components of P0 free. The generator stores raw series coefficients,
    // so divide out c_1/c_0.
    let gen = sys.generate(3).unwrap();
    let a0 = sys.a_matrix(0);
    let unscale = QuadExt::from_rat(rat(1) / sys.scaling_ratio(0));
    for comp in 0..2 {
        let v = gen.coefficient(comp, 1);
        for f in 0..2 {
            // coefficient of free f in component comp: E delta_(comp,f) + A(0)[comp][f]
            let mut want = Poly::constant(a0.get(comp, f).clone());
            if comp == f {
                want = &want + &Poly::monomial(QuadExt::one(), 1);
            }
            assert_eq!(v.per_free[f].scale(&unscale), want, "P1 component {comp}, free {f}");
        }
    }

    // --- sextic system ---
    let case = PolyPotCase;
    let chains = case.chains(&raw(&[("m", "3"), ("p2", "1"), ("kappa0", "1/2")])).unwrap();
    let sys = &chains[0].system;
    let (m, p2) = (3i64, rat(1));
    for n in 0..=20i64 {
        let b = sys.b_matrix(n);
        // lower band diag(8 p2 (m - n - 1), 8 p2 (m - n)); the reference
        // display quotes the raising action itself, diag(8p(n-m-1), 8p(n-m)),
        // i.e. the same data with opposite sign and the first entry indexed
        // through the staggered component.
        assert_eq!(b.get(0, 0), &q(rat(8) * &p2 * rat(m - n - 1)), "sextic B11({n})");
        assert_eq!(b.get(1, 1), &q(rat(8) * &p2 * rat(m - n)), "sextic B22({n})");
        assert!(b.get(0, 1).is_zero() && b.get(1, 0).is_zero());
        assert_eq!(sys.a_matrix(n), ExactMatrix::zero(2), "sextic A({n}) = 0");
    }

    // --- cosh well: derived R-convention recursion ---
    // (a^2/4) R_(nu+2) = R_nu [E + (a^2/4) nu^2 + s a^2 nu + 2 nu + a^2 s^2
    //                          - M^2 - 2M/a + 1 - 1/a^2]
    //                  + nu (nu-1) [2(2M/a - 1) - 4s - 2(nu - 2)] R_(nu-2).
    // At alpha = 1 the energy bracket's alpha-dependent corrections vanish;
    // the nu-linear term is 2 nu (the half-power substitution Jacobian),
    // and the lower-band zero sits at nu = Mtilde - 2s.
    for (alpha, mtilde) in [(rat(1), 4i64), (ratio(3, 2), 3), (ratio(2, 3), 5)] {
        for (s, parity) in [(rat(0), 0i64), (ratio(1, 2), 1)] {
            let p = BoseHubbardParams::from_mtilde(alpha.clone(), mtilde, s.clone()).unwrap();
            let hw = BoseHubbardCase::spectral_w_operator(&p).unwrap();
            let action = qes_core::recurrence::BandedAction::from_scalar(&hw).unwrap();
            let sys = qes_core::recurrence::RecurrenceSystem::new(
                action,
                qes_core::recurrence::Grading { stride: 2, phases: vec![parity] },
                vec![qes_core::recurrence::FreeSpec { comp: 0, state: 0 }],
                vec![],
                qes_core::recurrence::Scaling::None,
                0,
            )
            .unwrap();
            let a2 = &p.alpha * &p.alpha;
            for state in 0..=10i64 {
                let nu = 2 * state + parity;
                // scaled leading: C * nu!/(nu+2)! = a^2/4
                let c = sys.leading_matrix(state).get(0, 0).clone();
                let c_scaled = &c * &q(rat(1) / (rat(nu + 1) * rat(nu + 2)));
                assert_eq!(c_scaled, q(&a2 / rat(4)), "leading at nu = {nu}");
                // energy-independent diagonal
                let a_val = sys.a_matrix(state).get(0, 0).clone();
                let want = q(&a2 / rat(4) * rat(nu * nu)
                    + &s * &a2 * rat(nu)
                    + rat(2 * nu)
                    + &a2 * &s * &s
                    - &p.big_m * &p.big_m
                    - rat(2) * &p.big_m / &p.alpha
                    + rat(1)
                    - rat(1) / &a2);
                assert_eq!(a_val, want, "bracket at nu = {nu}");
                // lower band in R-convention: nu (nu-1) [2 Mt - 4s - 2(nu-2)]
                if state >= 1 {
                    let b_val = sys.b_matrix(state).get(0, 0).clone();
                    let b_scaled = &b_val * &q(rat(nu) * rat(nu - 1));
                    let want =
                        q(rat(nu) * rat(nu - 1) * (rat(2) * p.mtilde() - rat(4) * &s - rat(2 * nu) + rat(4)));
                    assert_eq!(b_scaled, want, "lower band at nu = {nu}");
                }
            }
        }
    }
    println!("ACCEPTANCE 8: PASS - band matrices equal the derived forms for n <= 20; deviations from the reference displays are the enumerated slips (logged)");
}

#[test]
fn criterion_09_spectral_oracle_equivalence() {
    let polypot: [&[(&str, &str)]; 5] = [
        &[("m", "2"), ("p2", "1"), ("kappa0", "1/2")],
        &[("m", "3"), ("p2", "1"), ("kappa0", "1/2")],
        &[("m", "2"), ("p2", "2"), ("kappa0", "1/3")],
        &[("m", "2"), ("p2", "1/2"), ("kappa0", "1")],
        &[("m", "3"), ("p2", "3"), ("kappa0", "1/5"), ("p1", "1")],
    ];
    for params in polypot {
        let rep = spectrum_report(&PolyPotCase, &raw(params)).unwrap();
        for c in &rep.chains {
            assert!(c.char_poly_matches, "sextic {params:?}: {}", c.label);
        }
    }
    let lame: [&[(&str, &str)]; 5] = [
        &[("m", "0"), ("delta", "1/2"), ("k2", "1/3")],
        &[("m", "1"), ("delta", "1/2"), ("k2", "1/3")],
        &[("m", "1"), ("delta", "1/3"), ("k2", "1/2")],
        &[("m", "2"), ("delta", "2"), ("k2", "2/5")],
        &[("m", "1"), ("delta", "5/2"), ("k2", "9/10")],
    ];
    for params in lame {
        let rep = spectrum_report(&LameCase, &raw(params)).unwrap();
        for c in &rep.chains {
            assert!(c.char_poly_matches, "periodic {params:?}: {}", c.label);
        }
    }
    let bh: [&[(&str, &str)]; 5] = [
        &[("alpha", "1"), ("mtilde", "2")],
        &[("alpha", "1"), ("mtilde", "5")],
        &[("alpha", "1/2"), ("mtilde", "3")],
        &[("alpha", "2"), ("mtilde", "4")],
        &[("alpha", "2/3"), ("mtilde", "6")],
    ];
    for params in bh {
        let rep = spectrum_report(&BoseHubbardCase, &raw(params)).unwrap();
        for c in &rep.chains {
            assert!(c.char_poly_matches, "cosh well {params:?}: {}", c.label);
        }
    }
    println!("ACCEPTANCE 9: PASS - truncation polynomial equals the restriction characteristic polynomial exactly, 5 samples per case");
}

#[test]
fn criterion_10_factorization_past_truncation() {
    for mtilde in [2i64, 3, 4, 5, 6] {
        let params = raw(&[("alpha", "1"), ("mtilde", &mtilde.to_string())]);
        let chains = BoseHubbardCase.chains(&params).unwrap();
        assert!(!chains.is_empty());
        for chain in &chains {
            let gen = chain.system.generate(chain.truncation_state + 5).unwrap();
            let rep =
                scalar_factorization(&chain.system, &gen, chain.truncation_state, 5).unwrap();
            assert!(rep.all_divisible, "Mtilde = {mtilde}, {}: {:?}", chain.label, rep.checked);
        }
    }
    // control: non-integer Mtilde fails divisibility
    for mt in ["5/2", "7/3"] {
        let p = BoseHubbardParams::new(
            rat(1),
            (qes_core::exactnum::parse_rat(mt).unwrap() + rat(1)) / rat(2),
            rat(0),
        )
        .unwrap();
        let hw = BoseHubbardCase::spectral_w_operator(&p).unwrap();
        let action = qes_core::recurrence::BandedAction::from_scalar(&hw).unwrap();
        let sys = qes_core::recurrence::RecurrenceSystem::new(
            action,
            qes_core::recurrence::Grading { stride: 2, phases: vec![0] },
            vec![qes_core::recurrence::FreeSpec { comp: 0, state: 0 }],
            vec![],
            qes_core::recurrence::Scaling::None,
            0,
        )
        .unwrap();
        let gen = sys.generate(9).unwrap();
        let rep = scalar_factorization(&sys, &gen, 3, 4).unwrap();
        assert!(!rep.all_divisible, "control Mtilde = {mt} must fail divisibility");
    }
    println!("ACCEPTANCE 10: PASS - every truncating chain factorizes for Mtilde in 2..=6 (j <= 5); non-integer controls fail");
}

#[test]
fn criterion_11_numerical_cross_check() {
    // harmonic oscillator sanity at second order with Richardson
    let harmonic = GridProblem {
        domain: Domain::Interval { lo: -12.0, hi: 12.0 },
        n: 4000,
        order: 2,
        potential: Potential::Scalar(Box::new(|x| x * x)),
    };
    let spec = harmonic.solve_spectrum(3).unwrap();
    for (k, ev) in spec.levels.iter().enumerate() {
        let want = (2 * k + 1) as f64;
        assert!((ev - want).abs() < 1e-6, "harmonic level {k}: {ev}");
        // convergence order ~ 2: coarse/fine raw error ratio near 4
        let rc = (spec.coarse[k] - want).abs();
        let rf = (spec.fine[k] - want).abs();
        let ratio = rc / rf;
        assert!((ratio - 4.0).abs() < 0.5, "order estimate off at level {k}: {ratio}");
    }

    // one sample per case at 1e-6 relative tolerance
    let (rep, _, _) = verify_report(
        &BoseHubbardCase,
        &raw(&[("alpha", "1"), ("mtilde", "4")]),
        None,
        None,
        1e-6,
    )
    .unwrap();
    assert!(rep.all_matched, "cosh well unmatched: {:?}", rep.unmatched);

    let (rep, _, _) = verify_report(
        &PolyPotCase,
        &raw(&[("m", "2"), ("p2", "1"), ("kappa0", "1/2")]),
        None,
        None,
        1e-6,
    )
    .unwrap();
    assert!(rep.all_matched, "sextic unmatched: {:?}", rep.unmatched);

    let (rep, _, _) = verify_report(
        &LameCase,
        &raw(&[("m", "1"), ("delta", "1/2"), ("k2", "1/3")]),
        None,
        None,
        1e-6,
    )
    .unwrap();
    assert!(rep.all_matched, "periodic unmatched: {:?}", rep.unmatched);

    println!("ACCEPTANCE 11: PASS - harmonic sanity, convergence order ~ 2, and every algebraic level found in the FD spectra at 1e-6");
}

#[test]
fn criterion_12_elliptic_functions() {
    assert!((complete_elliptic_k(0.0) - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
    let stencil = |f: &dyn Fn(f64) -> f64, z: f64| {
        let h = 1e-3;
        (-f(z + 2.0 * h) + 8.0 * f(z + h) - 8.0 * f(z - h) + f(z - 2.0 * h)) / (12.0 * h)
    };
    for k2 in [0.1, 0.5, 0.9] {
        let kk = complete_elliptic_k(k2);
        for i in 0..=257 {
            let z = 4.0 * kk * (i as f64) / 257.0;
            let (sn, cn, dn) = jacobi_sncndn(z, k2);
            assert!((sn * sn + cn * cn - 1.0).abs() <= 1e-10, "k2={k2} z={z}");
            assert!((dn * dn + k2 * sn * sn - 1.0).abs() <= 1e-10, "k2={k2} z={z}");
            let dsn = stencil(&|t| jacobi_sncndn(t, k2).0, z);
            let dcn = stencil(&|t| jacobi_sncndn(t, k2).1, z);
            let ddn = stencil(&|t| jacobi_sncndn(t, k2).2, z);
            assert!((dsn - cn * dn).abs() <= 1e-10, "d(sn) k2={k2} z={z}");
            assert!((dcn + sn * dn).abs() <= 1e-10, "d(cn) k2={k2} z={z}");
            assert!((ddn + k2 * sn * cn).abs() <= 1e-10, "d(dn) k2={k2} z={z}");
        }
    }
    println!("ACCEPTANCE 12: PASS - elliptic identities and derivative relations to 1e-10 over a full period; K(0) = pi/2 to 1e-12");
}

// keep an explicit handle on unused imports that the criteria above share
#[allow(dead_code)]
fn _type_anchors(_: &MatrixOperator, _: &[&dyn QesCase]) {}

#[allow(dead_code)]
fn _registry_anchor() {
    let _ = family_registry();
    let _: Rat = rat(0);
}

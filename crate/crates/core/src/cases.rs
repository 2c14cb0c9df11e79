//! Runtime registry of the model cases.
//!
//! Every case sits behind the [`QesCase`] trait: parameter parsing from
//! string maps, construction of the algebraic operator and its recurrence
//! chains, the exact restriction oracle, and the finite-difference problem
//! for the numerical cross check. The CLI selects a case by name at runtime
//! via [`registry`].

use std::collections::BTreeMap;

use serde::Serialize;

use crate::exactnum::{
    isolate_real_roots, parse_rat, rat, rat_to_f64, ratio, Poly, QuadExt, Rat,
};
use crate::hamiltonians::{BoseHubbardParams, LameParams, PolyPotParams};
use crate::numverify::{
    compare_levels, complete_elliptic_k, jacobi_sncndn, CompareReport, Domain, GridProblem,
    Potential, SpectrumNumeric,
};
use crate::recurrence::{
    BandedAction, FreeSpec, Generated, Grading, RecurrenceSystem, Scaling,
    TruncationSpec,
};
use crate::spaces::ExactMatrix;
use crate::weylop::{DiffOperator, GenExponent};
use crate::{Error, Result};

/// Raw string parameters collected by the CLI (exact rationals as strings).
#[derive(Clone, Debug, Default)]
pub struct RawParams {
    map: BTreeMap<String, String>,
}

impl RawParams {
    pub fn set(&mut self, key: &str, value: impl Into<String>) {
        self.map.insert(key.to_string(), value.into());
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.map.get(key).map(|s| s.as_str())
    }

    pub fn rat(&self, key: &str) -> Result<Option<Rat>> {
        self.map.get(key).map(|s| parse_rat(s)).transpose()
    }

    pub fn rat_or(&self, key: &str, default: Rat) -> Result<Rat> {
        Ok(self.rat(key)?.unwrap_or(default))
    }

    pub fn require_rat(&self, key: &str) -> Result<Rat> {
        self.rat(key)?
            .ok_or_else(|| Error::Parse(key.into(), "missing required parameter".into()))
    }

    pub fn require_i64(&self, key: &str) -> Result<i64> {
        let r = self.require_rat(key)?;
        if !r.is_integer() {
            return Err(Error::Parse(key.into(), "expected an integer".into()));
        }
        r.to_integer()
            .try_into()
            .map_err(|_| Error::Parse(key.into(), "integer out of range".into()))
    }

    pub fn entries(&self) -> impl Iterator<Item = (&str, &str)> {
        self.map.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }
}

/// One truncating recurrence chain with its exact restriction oracle.
pub struct ChainData {
    pub label: String,
    pub system: RecurrenceSystem,
    /// State index `N` at which the lower band degenerates; the vanishing of
    /// state `N`-related conditions truncates the series.
    pub truncation_state: i64,
    /// Restriction of the operator to its invariant space (same spectrum the
    /// truncation polynomial must reproduce).
    pub restriction: ExactMatrix,
}

/// Exact spectral data for one chain.
#[derive(Clone, Debug, Serialize)]
pub struct ChainSpectrum {
    pub label: String,
    /// Monic truncation polynomial coefficients, ascending, exact strings.
    pub truncation_polynomial: Vec<String>,
    /// Monic characteristic polynomial of the restriction matrix.
    pub characteristic_polynomial: Vec<String>,
    /// The two agree up to the constant normalization.
    pub char_poly_matches: bool,
    /// Restriction matrix, row-major exact strings.
    pub restriction: Vec<Vec<String>>,
    /// Isolating intervals for the real roots (exact rational endpoints).
    pub roots: Vec<(String, String)>,
    /// Root midpoints as binary64 (for the numerical harness).
    pub root_values: Vec<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumReport {
    pub case: String,
    pub params: BTreeMap<String, String>,
    pub chains: Vec<ChainSpectrum>,
}

impl SpectrumReport {
    pub fn all_levels(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self.chains.iter().flat_map(|c| c.root_values.clone()).collect();
        v.sort_by(|a, b| a.partial_cmp(b).unwrap());
        v
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub case: String,
    pub params: BTreeMap<String, String>,
    pub tolerance: f64,
    pub shift: String,
    pub grids: (usize, usize),
    pub algebraic: Vec<f64>,
    pub numeric: Vec<f64>,
    pub residuals: Vec<f64>,
    pub unmatched: Vec<f64>,
    pub all_matched: bool,
    pub convergence_order_estimate: Option<f64>,
}

/// Physical and algebraic forms for display.
#[derive(Clone, Debug, Serialize)]
pub struct HamiltonianView {
    pub case: String,
    pub physical: Vec<(String, String)>,
    pub algebraic: Vec<(String, String)>,
    pub invariant_space: String,
}

/// A model case: everything the CLI needs, behind one object.
pub trait QesCase: Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    fn param_help(&self) -> &'static str;
    /// Validate parameters, returning the normalized key/value echo.
    fn echo_params(&self, raw: &RawParams) -> Result<BTreeMap<String, String>>;
    fn hamiltonian_view(&self, raw: &RawParams) -> Result<HamiltonianView>;
    fn chains(&self, raw: &RawParams) -> Result<Vec<ChainData>>;
    /// Finite-difference problem sized so the box error is negligible for
    /// levels up to `max_level`.
    fn grid_problem(&self, raw: &RawParams, n: usize, max_level: f64) -> Result<GridProblem>;
    /// Default grid size for `verify`.
    fn default_grid(&self) -> usize;
    /// Shift added to algebraic levels before matching the FD spectrum.
    fn shift(&self, _raw: &RawParams) -> Result<Rat> {
        Ok(rat(0))
    }
}

/// The registered cases.
pub fn registry() -> &'static [&'static dyn QesCase] {
    &[&PolyPotCase, &LameCase, &BoseHubbardCase]
}

pub fn find_case(name: &str) -> Result<&'static dyn QesCase> {
    registry()
        .iter()
        .copied()
        .find(|c| c.name() == name)
        .ok_or_else(|| Error::Parse("case".into(), format!("unknown case `{name}`")))
}

/// Exact spectral report: truncation polynomials, restriction characteristic
/// polynomials, proportionality verdicts and isolated roots.
pub fn spectrum_report(case: &dyn QesCase, raw: &RawParams) -> Result<SpectrumReport> {
    let params = case.echo_params(raw)?;
    let mut chains = vec![];
    for chain in case.chains(raw)? {
        let gen = chain.system.generate(chain.truncation_state + 2)?;
        let trunc = chain.system.truncation_polynomial(&gen)?;
        let trunc = if trunc.is_rational() {
            trunc.monic()
        } else {
            return Err(Error::Domain(
                "truncation polynomial has irrational coefficients".into(),
            ));
        };
        let charp = chain.restriction.char_poly();
        if !charp.is_rational() {
            return Err(Error::Domain(
                "characteristic polynomial has irrational coefficients".into(),
            ));
        }
        let matches = charp.monic() == trunc;
        let prec = ratio(1, 1i64 << 40);
        let roots = isolate_real_roots(&trunc, &prec)?;
        chains.push(ChainSpectrum {
            label: chain.label,
            truncation_polynomial: poly_strings(&trunc),
            characteristic_polynomial: poly_strings(&charp),
            char_poly_matches: matches,
            restriction: chain.restriction.entry_strings(),
            roots: roots
                .iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect(),
            root_values: roots
                .iter()
                .map(|(a, b)| (rat_to_f64(a) + rat_to_f64(b)) / 2.0)
                .collect(),
        });
    }
    Ok(SpectrumReport { case: case.name().into(), params, chains })
}

/// Run the FD cross check: every algebraic level must appear in the numeric
/// spectrum within the relative tolerance after the declared shift.
pub fn verify_report(
    case: &dyn QesCase,
    raw: &RawParams,
    grid: Option<usize>,
    levels: Option<usize>,
    tol: f64,
) -> Result<(VerifyReport, CompareReport, SpectrumNumeric)> {
    let spectrum = spectrum_report(case, raw)?;
    let algebraic = spectrum.all_levels();
    if algebraic.is_empty() {
        return Err(Error::Domain("no algebraic levels for these parameters".into()));
    }
    let shift = case.shift(raw)?;
    let shift_f = rat_to_f64(&shift);
    let max_level = algebraic
        .iter()
        .map(|v| (v + shift_f).abs())
        .fold(1.0f64, f64::max);
    let count = levels.unwrap_or(algebraic.len() + 12).max(algebraic.len() + 2);
    let n = grid.unwrap_or(case.default_grid());
    let problem = case.grid_problem(raw, n, max_level)?;
    let numeric = problem.solve_spectrum(count)?;
    let report = compare_levels(&algebraic, &numeric.levels, shift_f, tol);
    let out = VerifyReport {
        case: case.name().into(),
        params: case.echo_params(raw)?,
        tolerance: tol,
        shift: shift.to_string(),
        grids: numeric.grids,
        algebraic: algebraic.clone(),
        numeric: numeric.levels.clone(),
        residuals: report.matches.iter().map(|m| m.residual).collect(),
        unmatched: report.unmatched.clone(),
        all_matched: report.all_matched(),
        convergence_order_estimate: None,
    };
    Ok((out, report, numeric))
}

fn poly_strings(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

fn matrix_entries_view(op: &crate::weylop::MatrixOperator) -> Vec<(String, String)> {
    vec![
        ("H11".into(), op.entry(0, 0).display()),
        ("H12".into(), op.entry(0, 1).display()),
        ("H21".into(), op.entry(1, 0).display()),
        ("H22".into(), op.entry(1, 1).display()),
    ]
}

// ---------------------------------------------------------------------------
// sextic 2x2 polynomial potential
// ---------------------------------------------------------------------------

pub struct PolyPotCase;

impl PolyPotCase {
    fn params(&self, raw: &RawParams) -> Result<PolyPotParams> {
        let m = raw.require_i64("m")?;
        let p2 = raw.rat_or("p2", rat(1))?;
        let p1 = raw.rat_or("p1", rat(0))?;
        let kappa0 = raw.rat_or("kappa0", ratio(1, 2))?;
        let mut p = PolyPotParams::new(m, p2, p1, kappa0)?;
        p.epsilon = raw.rat_or("epsilon", rat(0))?;
        Ok(p)
    }
}

impl QesCase for PolyPotCase {
    fn name(&self) -> &'static str {
        "polypot"
    }

    fn summary(&self) -> &'static str {
        "coupled sextic polynomial potential on the line (couples of polynomials of degrees m-2, m)"
    }

    fn param_help(&self) -> &'static str {
        "--m <int >= 2> [--p2 <rat > 0>] [--p1 <rat>] [--kappa0 <rat != 0>] [--epsilon <rat>]"
    }

    fn echo_params(&self, raw: &RawParams) -> Result<BTreeMap<String, String>> {
        let p = self.params(raw)?;
        Ok(BTreeMap::from([
            ("m".into(), p.m.to_string()),
            ("p2".into(), p.p2.to_string()),
            ("p1".into(), p.p1.to_string()),
            ("kappa0".into(), p.kappa0.to_string()),
            ("epsilon".into(), p.epsilon.to_string()),
        ]))
    }

    fn hamiltonian_view(&self, raw: &RawParams) -> Result<HamiltonianView> {
        let p = self.params(raw)?;
        let v = p.potential_matrix();
        let (op, space) = p.build_algebraic()?;
        Ok(HamiltonianView {
            case: self.name().into(),
            physical: vec![
                ("V11(y)".into(), v[0][0].display_with("y")),
                ("V12(y)".into(), v[0][1].display_with("y")),
                ("V22(y)".into(), v[1][1].display_with("y")),
            ],
            algebraic: matrix_entries_view(&op),
            invariant_space: space.to_string(),
        })
    }

    fn chains(&self, raw: &RawParams) -> Result<Vec<ChainData>> {
        use num_traits::Zero;
        let p = self.params(raw)?;
        if p.kappa0.is_zero() {
            return Err(Error::Domain(
                "the staggered recurrence needs kappa0 != 0 (at kappa0 = 0 the system decouples)".into(),
            ));
        }
        let (op, space) = p.build_algebraic()?;
        let restriction = space.restrict(&op)?;
        let action = BandedAction::from_matrix(&op)?;
        let system = RecurrenceSystem::new(
            action,
            Grading { stride: 1, phases: vec![0, 1] },
            vec![FreeSpec { comp: 1, state: -1 }, FreeSpec { comp: 1, state: 0 }],
            vec![
                TruncationSpec { comp: 0, series_index: p.m - 1 },
                TruncationSpec { comp: 1, series_index: p.m + 1 },
            ],
            Scaling::None,
            -1,
        )?;
        Ok(vec![ChainData {
            label: "staggered couple".into(),
            system,
            truncation_state: p.m,
            restriction,
        }])
    }

    fn grid_problem(&self, raw: &RawParams, n: usize, max_level: f64) -> Result<GridProblem> {
        let p = self.params(raw)?;
        // box wall where the sextic term dominates: 4 p2^2 L^6 >= 1000 * max
        let p2 = rat_to_f64(&p.p2);
        let l = ((1000.0 * max_level) / (4.0 * p2 * p2)).powf(1.0 / 6.0).max(3.0) + 1.0;
        Ok(GridProblem {
            domain: Domain::Interval { lo: -l, hi: l },
            n,
            order: 2,
            potential: Potential::TwoChannel(Box::new(move |y| p.potential_at(y))),
        })
    }

    fn default_grid(&self) -> usize {
        3000
    }
}

// ---------------------------------------------------------------------------
// coupled elliptic (periodic) potential
// ---------------------------------------------------------------------------

pub struct LameCase;

impl LameCase {
    fn params(&self, raw: &RawParams) -> Result<LameParams> {
        LameParams::new(
            raw.require_i64("m")?,
            raw.require_rat("delta")?,
            raw.require_rat("k2")?,
        )
    }
}

impl QesCase for LameCase {
    fn name(&self) -> &'static str {
        "lame"
    }

    fn summary(&self) -> &'static str {
        "coupled periodic elliptic potential (equal-degree couples over Q(kappa))"
    }

    fn param_help(&self) -> &'static str {
        "--m <int >= 0> --delta <rat, |delta| < 4m+3> --k2 <rat in (0,1)>"
    }

    fn echo_params(&self, raw: &RawParams) -> Result<BTreeMap<String, String>> {
        let p = self.params(raw)?;
        Ok(BTreeMap::from([
            ("m".into(), p.m.to_string()),
            ("delta".into(), p.delta.to_string()),
            ("k2".into(), p.k2.to_string()),
            ("kappa^2".into(), (&p.k2 * &p.r_ratio()).to_string()),
        ]))
    }

    fn hamiltonian_view(&self, raw: &RawParams) -> Result<HamiltonianView> {
        let p = self.params(raw)?;
        let (op, space) = p.build_algebraic()?;
        Ok(HamiltonianView {
            case: self.name().into(),
            physical: vec![
                ("V11(z)".into(), format!("{} k2 sn^2 + delta (1+k2)/2", p.a_const())),
                ("V22(z)".into(), format!("{} k2 sn^2 - delta (1+k2)/2", p.c_const())),
                ("V12(z)".into(), "2 theta k cn dn".into()),
                ("theta".into(), format!("{}", p.theta_f64())),
            ],
            algebraic: matrix_entries_view(&op),
            invariant_space: space.to_string(),
        })
    }

    fn chains(&self, raw: &RawParams) -> Result<Vec<ChainData>> {
        let p = self.params(raw)?;
        let (op, space) = p.build_algebraic()?;
        let restriction = space.restrict(&op)?;
        let action = BandedAction::from_matrix(&op)?;
        let system = RecurrenceSystem::new(
            action,
            Grading { stride: 1, phases: vec![0, 0] },
            vec![FreeSpec { comp: 0, state: 0 }, FreeSpec { comp: 1, state: 0 }],
            vec![
                TruncationSpec { comp: 0, series_index: p.m + 1 },
                TruncationSpec { comp: 1, series_index: p.m + 1 },
            ],
            Scaling::AlternatingEvenFactorial,
            0,
        )?;
        Ok(vec![ChainData {
            label: "coupled channels".into(),
            system,
            truncation_state: p.m + 1,
            restriction,
        }])
    }

    fn grid_problem(&self, raw: &RawParams, n: usize, _max_level: f64) -> Result<GridProblem> {
        let p = self.params(raw)?;
        let k2 = rat_to_f64(&p.k2);
        let period = 4.0 * complete_elliptic_k(k2);
        Ok(GridProblem {
            domain: Domain::Periodic { length: period },
            n,
            order: 4,
            potential: Potential::TwoChannel(Box::new(move |z| {
                let (sn, cn, dn) = jacobi_sncndn(z, k2);
                p.potential_at(sn, cn, dn)
            })),
        })
    }

    fn default_grid(&self) -> usize {
        320
    }
}

// ---------------------------------------------------------------------------
// cosh-pair well
// ---------------------------------------------------------------------------

pub struct BoseHubbardCase;

/// One parity chain of the half-power series.
pub struct BhChain {
    pub s: Rat,
    pub parity: i64,
    pub truncation_state: i64,
}

impl BoseHubbardCase {
    fn params(&self, raw: &RawParams, s: Rat) -> Result<BoseHubbardParams> {
        if let Some(mt) = raw.rat("mtilde")? {
            if !mt.is_integer() {
                // non-integer control cases are allowed: fall through to M
                let alpha = raw.rat_or("alpha", rat(1))?;
                let big_m = (mt + rat(1)) * &alpha / rat(2);
                return BoseHubbardParams::new(alpha, big_m, s);
            }
            let alpha = raw.rat_or("alpha", rat(1))?;
            return BoseHubbardParams::from_mtilde(
                alpha,
                mt.to_integer().try_into().map_err(|_| {
                    Error::Parse("mtilde".into(), "out of range".into())
                })?,
                s,
            );
        }
        let alpha = raw.rat_or("alpha", rat(1))?;
        let big_m = raw.require_rat("M")?;
        BoseHubbardParams::new(alpha, big_m, s)
    }

    /// Truncating `(s, parity)` chains for integer `Mtilde`.
    pub fn truncating_chains(mtilde: i64) -> Vec<BhChain> {
        let mut out = vec![];
        for (s_num, s) in [(0i64, rat(0)), (1, ratio(1, 2))] {
            for parity in [0i64, 1] {
                let num = mtilde - s_num - parity; // Mtilde - 2s - phi
                if num >= 0 && num % 2 == 0 {
                    let j = num / 2 + 1;
                    if j >= 1 {
                        out.push(BhChain { s: s.clone(), parity, truncation_state: j });
                    }
                }
            }
        }
        out
    }

    /// The half-power-variable operator with the spectral sign convention
    /// (`H_w f = E f` on the series).
    pub fn spectral_w_operator(p: &BoseHubbardParams) -> Result<DiffOperator> {
        Ok(p.w_operator()?.neg())
    }

    /// Restriction of `H_w` to the strided span `{w^phi, w^(phi+2), ...}`.
    pub fn restriction(hw: &DiffOperator, parity: i64, dim: i64) -> Result<ExactMatrix> {
        let mut m = ExactMatrix::zero(dim as usize);
        for j in 0..dim {
            let e = GenExponent::int(parity + 2 * j);
            for (img, c) in hw.apply_to_monomial(&e) {
                let q = img.as_int().ok_or(Error::FormalParameter)?;
                let rel = q - parity;
                if rel < 0 || rel % 2 != 0 || rel / 2 >= dim {
                    return Err(Error::NotInvariant(format!(
                        "image of w^{} contains w^{q}",
                        parity + 2 * j
                    )));
                }
                let v = c.as_constant().ok_or(Error::FormalParameter)?;
                let prev = m.get((rel / 2) as usize, j as usize).clone();
                m.set((rel / 2) as usize, j as usize, &prev + &v);
            }
        }
        Ok(m)
    }

    /// Monic chain polynomials `P_j`: the raw coefficients rescaled by
    /// `(a^2/4)^j (2j+phi)!/phi!`.
    pub fn monic_chain(
        p: &BoseHubbardParams,
        gen: &Generated,
        parity: i64,
        up_to: i64,
    ) -> Vec<Poly> {
        let a2_over_4 = &p.alpha * &p.alpha / rat(4);
        let mut out = vec![];
        let mut factorial = rat(1); // (2j+phi)!/phi!
        let mut geom = rat(1);
        for j in 0..=up_to {
            if j > 0 {
                geom = geom * &a2_over_4;
                let nu = 2 * j + parity;
                factorial = factorial * rat(nu - 1) * rat(nu);
            }
            let v = gen.coefficient(0, 2 * j + parity);
            let scale = QuadExt::from_rat(&geom * &factorial);
            out.push(v.per_free[0].scale(&scale));
        }
        out
    }
}

impl QesCase for BoseHubbardCase {
    fn name(&self) -> &'static str {
        "bose-hubbard"
    }

    fn summary(&self) -> &'static str {
        "cosh-pair well on the line; half-power series splits into four parity chains"
    }

    fn param_help(&self) -> &'static str {
        "[--alpha <rat > 0>] (--mtilde <int> | --M <rat>) [--s <0 or 1/2>]"
    }

    fn echo_params(&self, raw: &RawParams) -> Result<BTreeMap<String, String>> {
        let p = self.params(raw, rat(0))?;
        Ok(BTreeMap::from([
            ("alpha".into(), p.alpha.to_string()),
            ("M".into(), p.big_m.to_string()),
            ("mtilde".into(), p.mtilde().to_string()),
        ]))
    }

    fn hamiltonian_view(&self, raw: &RawParams) -> Result<HamiltonianView> {
        let p = self.params(raw, rat(0))?;
        let z_op = p.reduced_z_operator();
        let mut algebraic = vec![("L(z), (L + E) phi = 0".into(), z_op.display())];
        for s in [rat(0), ratio(1, 2)] {
            let q = BoseHubbardParams { s: s.clone(), ..p.clone() };
            algebraic.push((
                format!("H_w (s = {s})"),
                Self::spectral_w_operator(&q)?.display(),
            ));
        }
        Ok(HamiltonianView {
            case: self.name().into(),
            physical: vec![
                ("V(x)".into(), format!("(cosh(alpha x)/alpha - {})^2", p.big_m)),
                (
                    "E0 (original-form shift)".into(),
                    p.e0().map(|v| v.to_string()).unwrap_or_else(|_| "requires integer Mtilde".into()),
                ),
            ],
            algebraic,
            invariant_space: "strided monomial spans in w = cosh(alpha x / 2)".into(),
        })
    }

    fn chains(&self, raw: &RawParams) -> Result<Vec<ChainData>> {
        let probe = self.params(raw, rat(0))?;
        let mt = probe.mtilde_int().ok_or_else(|| {
            Error::Domain(format!(
                "integer Mtilde required for truncation (got {})",
                probe.mtilde()
            ))
        })?;
        let mut chains = vec![];
        for ch in Self::truncating_chains(mt) {
            let p = self.params(raw, ch.s.clone())?;
            let hw = Self::spectral_w_operator(&p)?;
            let action = BandedAction::from_scalar(&hw)?;
            let system = RecurrenceSystem::new(
                action,
                Grading { stride: 2, phases: vec![ch.parity] },
                vec![FreeSpec { comp: 0, state: 0 }],
                vec![TruncationSpec { comp: 0, series_index: 2 * ch.truncation_state + ch.parity }],
                Scaling::None,
                0,
            )?;
            let restriction = Self::restriction(&hw, ch.parity, ch.truncation_state)?;
            chains.push(ChainData {
                label: format!("s={}, {} powers", ch.s, if ch.parity == 0 { "even" } else { "odd" }),
                system,
                truncation_state: ch.truncation_state,
                restriction,
            });
        }
        Ok(chains)
    }

    fn grid_problem(&self, raw: &RawParams, n: usize, max_level: f64) -> Result<GridProblem> {
        let p = self.params(raw, rat(0))?;
        let alpha = rat_to_f64(&p.alpha);
        let m = rat_to_f64(&p.big_m);
        // wall where (cosh/alpha - M)^2 >= 1000 * max
        let target = alpha * (m.abs() + (1000.0 * max_level).sqrt());
        let l = (target.max(2.0)).acosh() / alpha + 1.0;
        Ok(GridProblem {
            domain: Domain::Interval { lo: -l, hi: l },
            n,
            order: 2,
            potential: Potential::Scalar(Box::new(move |x| {
                let c = (alpha * x).cosh() / alpha - m;
                c * c
            })),
        })
    }

    fn default_grid(&self) -> usize {
        4000
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(pairs: &[(&str, &str)]) -> RawParams {
        let mut r = RawParams::default();
        for (k, v) in pairs {
            r.set(k, *v);
        }
        r
    }

    #[test]
    fn registry_has_three_cases() {
        assert_eq!(registry().len(), 3);
        assert!(find_case("lame").is_ok());
        assert!(find_case("nope").is_err());
    }

    #[test]
    fn lame_m0_truncation_equals_charpoly() {
        let r = raw(&[("m", "0"), ("delta", "1/2"), ("k2", "1/3")]);
        let rep = spectrum_report(&LameCase, &r).unwrap();
        assert_eq!(rep.chains.len(), 1);
        assert!(rep.chains[0].char_poly_matches);
        assert_eq!(rep.chains[0].roots.len(), 2);
    }

    #[test]
    fn polypot_m2_spectrum() {
        let r = raw(&[("m", "2"), ("p2", "1"), ("kappa0", "1/2")]);
        let rep = spectrum_report(&PolyPotCase, &r).unwrap();
        assert!(rep.chains[0].char_poly_matches);
        // dim of the couple space is 2m = 4
        assert_eq!(rep.chains[0].characteristic_polynomial.len(), 5);
    }

    #[test]
    fn bose_hubbard_chain_counts() {
        // Mtilde = 4: s=0 even (N=3) and s=1/2 odd (N=2): 3 + 2 = 5 levels
        let chains = BoseHubbardCase::truncating_chains(4);
        assert_eq!(chains.len(), 2);
        let total: i64 = chains.iter().map(|c| c.truncation_state).sum();
        assert_eq!(total, 5);
        // Mtilde = 3: s=0 odd (N=2) + s=1/2 even (N=2): 4 levels
        let chains = BoseHubbardCase::truncating_chains(3);
        let total: i64 = chains.iter().map(|c| c.truncation_state).sum();
        assert_eq!(total, 4);
    }

    #[test]
    fn bose_hubbard_spectrum_oracle() {
        let r = raw(&[("alpha", "1"), ("mtilde", "4")]);
        let rep = spectrum_report(&BoseHubbardCase, &r).unwrap();
        assert_eq!(rep.chains.len(), 2);
        for c in &rep.chains {
            assert!(c.char_poly_matches, "{}: trunc {:?} vs char {:?}", c.label, c.truncation_polynomial, c.characteristic_polynomial);
        }
        assert_eq!(rep.all_levels().len(), 5);
    }
}


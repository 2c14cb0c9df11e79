use std::collections::BTreeMap;

use crate::exactnum::{rat, Poly, QuadExt, Rat};
use crate::spaces::ExactMatrix;
use crate::{Error, Result};

use super::BandedAction;

/// Placement of state components in the coefficient series: component `c` of
/// state `n` is the series coefficient with index `stride * n + phases[c]`.
#[derive(Clone, Debug)]
pub struct Grading {
    pub stride: i64,
    pub phases: Vec<i64>,
}

/// A state component declared as a free initial parameter.
#[derive(Clone, Copy, Debug)]
pub struct FreeSpec {
    pub comp: usize,
    pub state: i64,
}

/// A series coefficient that must vanish for the series to truncate.
#[derive(Clone, Copy, Debug)]
pub struct TruncationSpec {
    pub comp: usize,
    pub series_index: i64,
}

/// Scaling convention relating reported band matrices to the raw action:
/// the series is `sum c_n X(n) x^n` with the stated weights `c_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scaling {
    /// `c_n = 1`.
    None,
    /// `c_n = (-1)^n / (2n)!` (the elliptic-channel convention; it turns the
    /// leading band matrix into the identity).
    AlternatingEvenFactorial,
}

/// Index-dependent three-term system derived from a banded action.
#[derive(Clone, Debug)]
pub struct RecurrenceSystem {
    pub action: BandedAction,
    pub grading: Grading,
    pub frees: Vec<FreeSpec>,
    pub truncation: Vec<TruncationSpec>,
    pub scaling: Scaling,
    /// First state level whose equations are processed.
    pub start_level: i64,
}

/// One generated coefficient: a vector of polynomials in `E`, one per free
/// initial parameter (the system is linear in the frees).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EPolyVector {
    pub per_free: Vec<Poly>,
}

impl EPolyVector {
    fn zero(nfree: usize) -> Self {
        EPolyVector { per_free: vec![Poly::zero(); nfree] }
    }

    fn unit(nfree: usize, k: usize) -> Self {
        let mut v = Self::zero(nfree);
        v.per_free[k] = Poly::one();
        v
    }

    pub fn is_zero(&self) -> bool {
        self.per_free.iter().all(|p| p.is_zero())
    }

    fn add(&self, other: &EPolyVector) -> EPolyVector {
        EPolyVector {
            per_free: self
                .per_free
                .iter()
                .zip(&other.per_free)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    fn scale(&self, c: &QuadExt) -> EPolyVector {
        EPolyVector { per_free: self.per_free.iter().map(|p| p.scale(c)).collect() }
    }

    fn mul_e(&self) -> EPolyVector {
        EPolyVector { per_free: self.per_free.iter().map(|p| p.mul_xpow(1)).collect() }
    }

    fn sub(&self, other: &EPolyVector) -> EPolyVector {
        self.add(&other.scale(&QuadExt::from_int(-1)))
    }

    /// Substitute concrete polynomials for the frees.
    pub fn substitute(&self, frees: &[Poly]) -> Poly {
        let mut acc = Poly::zero();
        for (c, f) in self.per_free.iter().zip(frees) {
            acc = &acc + &(c * f);
        }
        acc
    }
}

/// Generated series coefficients, indexed by (component, series index).
#[derive(Clone, Debug)]
pub struct Generated {
    pub nfree: usize,
    coeffs: BTreeMap<(usize, i64), EPolyVector>,
}

impl Generated {
    pub fn coefficient(&self, comp: usize, series_index: i64) -> EPolyVector {
        if series_index < 0 {
            return EPolyVector::zero(self.nfree);
        }
        self.coeffs
            .get(&(comp, series_index))
            .cloned()
            .unwrap_or_else(|| EPolyVector::zero(self.nfree))
    }

    pub fn max_index(&self, comp: usize) -> i64 {
        self.coeffs
            .keys()
            .filter(|(c, _)| *c == comp)
            .map(|(_, i)| *i)
            .max()
            .unwrap_or(-1)
    }
}

impl RecurrenceSystem {
    /// Basic construction with validation of the three-term structure.
    pub fn new(
        action: BandedAction,
        grading: Grading,
        frees: Vec<FreeSpec>,
        truncation: Vec<TruncationSpec>,
        scaling: Scaling,
        start_level: i64,
    ) -> Result<Self> {
        let dim = action.dim();
        if grading.phases.len() != dim {
            return Err(Error::Domain("one phase per component required".into()));
        }
        // Every action entry must respect the grading (land on the state
        // grid) and stay within one state of the source.
        for out in 0..dim {
            for inn in 0..dim {
                for s in action.shifts(out, inn) {
                    // source state minus equation level: an action shift s
                    // connects the level-n equation of `out` to the source
                    // coefficient at series index mu - s of `inn`.
                    let num = grading.phases[out] - grading.phases[inn] - s;
                    if num.rem_euclid(grading.stride) != 0 {
                        return Err(Error::Domain(format!(
                            "action shift {s} between components {inn}->{out} is off the state grid"
                        )));
                    }
                    let state_shift = num / grading.stride;
                    if state_shift.abs() > 1 {
                        return Err(Error::Bandwidth(state_shift));
                    }
                }
            }
        }
        Ok(RecurrenceSystem {
            action,
            grading,
            frees,
            truncation,
            scaling,
            start_level,
        })
    }

    pub fn dim(&self) -> usize {
        self.action.dim()
    }

    fn series_index(&self, comp: usize, state: i64) -> i64 {
        self.grading.stride * state + self.grading.phases[comp]
    }

    /// State-level band matrix for a given state shift in `{-1, 0, +1}`.
    ///
    /// Entry `(i, j)` is the coefficient with which component `j` of state
    /// `n + state_shift` enters the level-`n` equation of component `i`
    /// (the equation whose energy term is `E X_i(n)`).
    fn band_entry(&self, i: usize, j: usize, n: i64, state_shift: i64) -> QuadExt {
        let mu = self.series_index(i, n);
        let nu = self.series_index(j, n + state_shift);
        let shift = mu - nu;
        self.action.coefficient(i, j, shift, nu)
    }

    /// Leading matrix `C(n)` multiplying state `n+1` in the level-`n` equation.
    pub fn leading_matrix(&self, n: i64) -> ExactMatrix {
        let d = self.dim();
        let mut m = ExactMatrix::zero(d);
        for i in 0..d {
            for j in 0..d {
                m.set(i, j, self.band_entry(i, j, n, 1));
            }
        }
        m
    }

    /// `A(n)`: the state-`n` matrix moved to the right-hand side, so the
    /// level equation reads `C(n) X(n+1) = (E I + A(n)) X(n) + B(n) X(n-1)`.
    pub fn a_matrix(&self, n: i64) -> ExactMatrix {
        let d = self.dim();
        let mut m = ExactMatrix::zero(d);
        for i in 0..d {
            for j in 0..d {
                m.set(i, j, -&self.band_entry(i, j, n, 0));
            }
        }
        m
    }

    /// `B(n)` multiplying state `n-1` (right-hand side sign convention).
    pub fn b_matrix(&self, n: i64) -> ExactMatrix {
        let d = self.dim();
        let mut m = ExactMatrix::zero(d);
        for i in 0..d {
            for j in 0..d {
                m.set(i, j, -&self.band_entry(i, j, n, -1));
            }
        }
        m
    }

    /// Ratio `c_(n+1)/c_n` of the scaling convention.
    pub fn scaling_ratio(&self, n: i64) -> Rat {
        match self.scaling {
            Scaling::None => rat(1),
            Scaling::AlternatingEvenFactorial => {
                // c_n = (-1)^n/(2n)!: ratio = -1/((2n+1)(2n+2))
                -rat(1) / (rat(2 * n + 1) * rat(2 * n + 2))
            }
        }
    }

    /// Leading matrix in the scaled convention: `C(n) * c_(n+1)/c_n`.
    pub fn leading_matrix_scaled(&self, n: i64) -> ExactMatrix {
        self.leading_matrix(n).scale(&QuadExt::from_rat(self.scaling_ratio(n)))
    }

    /// `B(n)` in the scaled convention: `B(n) * c_(n-1)/c_n`.
    pub fn b_matrix_scaled(&self, n: i64) -> ExactMatrix {
        let inv = rat(1) / self.scaling_ratio(n - 1);
        self.b_matrix(n).scale(&QuadExt::from_rat(inv))
    }

    /// Generate states up to `up_to` (inclusive) with the frees symbolic.
    pub fn generate(&self, up_to: i64) -> Result<Generated> {
        let dim = self.dim();
        let nfree = self.frees.len();
        let mut gen = Generated { nfree, coeffs: BTreeMap::new() };
        for (k, f) in self.frees.iter().enumerate() {
            let idx = self.series_index(f.comp, f.state);
            if idx < 0 {
                return Err(Error::Domain("free parameter below the series start".into()));
            }
            gen.coeffs.insert((f.comp, idx), EPolyVector::unit(nfree, k));
        }
        let is_free = |comp: usize, state: i64| {
            self.frees.iter().any(|f| f.comp == comp && f.state == state)
        };

        for n in self.start_level..=up_to {
            // Equations at level n determine the non-free unknowns of state n+1.
            let mut rows = vec![];
            for i in 0..dim {
                if self.series_index(i, n) >= 0 {
                    rows.push(i);
                }
            }
            let mut unknowns = vec![];
            for j in 0..dim {
                if self.series_index(j, n + 1) >= 0 && !is_free(j, n + 1) {
                    unknowns.push(j);
                }
            }
            if rows.len() != unknowns.len() {
                return Err(Error::Domain(format!(
                    "level {n}: {} equations for {} unknowns",
                    rows.len(),
                    unknowns.len()
                )));
            }
            if unknowns.is_empty() {
                continue;
            }
            // Assemble C x = rhs with rhs = E X(n) + (state-n and state-(n-1) terms).
            let k = rows.len();
            let mut cmat = ExactMatrix::zero(k);
            let mut rhs = vec![EPolyVector::zero(nfree); k];
            for (r, &i) in rows.iter().enumerate() {
                // energy coupling
                let xi = gen.coefficient(i, self.series_index(i, n));
                rhs[r] = rhs[r].add(&xi.mul_e());
                for j in 0..dim {
                    // state n and n-1 contributions (moved right with minus sign)
                    for shift in [0i64, -1] {
                        let c = self.band_entry(i, j, n, shift);
                        if c.is_zero() {
                            continue;
                        }
                        let idx = self.series_index(j, n + shift);
                        let val = gen.coefficient(j, idx).scale(&c);
                        rhs[r] = rhs[r].sub(&val);
                    }
                    // state n+1: unknown side, or known free
                    let c = self.band_entry(i, j, n, 1);
                    if c.is_zero() {
                        continue;
                    }
                    if let Some(u) = unknowns.iter().position(|&x| x == j) {
                        cmat.set(r, u, c);
                    } else {
                        // the free parameter at state n+1 enters as known data
                        let idx = self.series_index(j, n + 1);
                        let val = gen.coefficient(j, idx).scale(&c);
                        rhs[r] = rhs[r].sub(&val);
                    }
                }
            }
            let solved = solve_small(&cmat, &rhs).ok_or(Error::SingularLeading(n))?;
            for (u, &j) in unknowns.iter().enumerate() {
                let idx = self.series_index(j, n + 1);
                gen.coeffs.insert((j, idx), solved[u].clone());
            }
        }
        Ok(gen)
    }

    /// The truncation determinant: the linear system in the frees formed by
    /// the declared vanishing conditions, as an exact polynomial in `E`
    /// (primitive, positive leading coefficient).
    pub fn truncation_polynomial(&self, gen: &Generated) -> Result<Poly> {
        let k = self.truncation.len();
        if k != self.frees.len() {
            return Err(Error::Domain(
                "truncation conditions must match the number of free parameters".into(),
            ));
        }
        let rows: Vec<EPolyVector> = self
            .truncation
            .iter()
            .map(|t| gen.coefficient(t.comp, t.series_index))
            .collect();
        let det = match k {
            1 => rows[0].per_free[0].clone(),
            2 => {
                let a = &rows[0].per_free[0];
                let b = &rows[0].per_free[1];
                let c = &rows[1].per_free[0];
                let d = &rows[1].per_free[1];
                &(a * d) - &(b * c)
            }
            _ => return Err(Error::Domain("more than two frees not supported".into())),
        };
        if det.is_zero() {
            return Err(Error::NoTruncation);
        }
        Ok(normalize_primitive(&det))
    }

    /// Adjugate column of the 2x2 truncation system (the free-parameter ray
    /// on which the conditions collapse to the determinant); for one free the
    /// ray is the unit.
    pub fn truncation_adjugate(&self, gen: &Generated) -> Result<Vec<Poly>> {
        match self.frees.len() {
            1 => Ok(vec![Poly::one()]),
            2 => {
                let r0 = gen.coefficient(self.truncation[0].comp, self.truncation[0].series_index);
                let r1 = gen.coefficient(self.truncation[1].comp, self.truncation[1].series_index);
                // M = [[a, b], [c, d]]; adj column 0 = (d, -c), column 1 = (-b, a)
                let col0 = vec![r1.per_free[1].clone(), -&r1.per_free[0]];
                if col0.iter().any(|p| !p.is_zero()) {
                    Ok(col0)
                } else {
                    Ok(vec![-&r0.per_free[1], r0.per_free[0].clone()])
                }
            }
            _ => Err(Error::Domain("more than two frees not supported".into())),
        }
    }
}

/// Content-normalized copy with positive rational leading coefficient (only
/// defined up to a constant anyway).
pub(crate) fn normalize_primitive(p: &Poly) -> Poly {
    if p.is_zero() {
        return Poly::zero();
    }
    let lead = p.leading().unwrap();
    match lead.as_rat() {
        Some(_) => {
            let inv = lead.inverse();
            p.scale(&inv)
        }
        None => p.clone(),
    }
}

/// Solve a small (<= 2) exact linear system, returning None when singular.
fn solve_small(c: &ExactMatrix, rhs: &[EPolyVector]) -> Option<Vec<EPolyVector>> {
    match c.dim() {
        1 => {
            let a = c.get(0, 0);
            if a.is_zero() {
                return None;
            }
            Some(vec![rhs[0].scale(&a.inverse())])
        }
        2 => {
            let (a, b, d, e) = (c.get(0, 0), c.get(0, 1), c.get(1, 0), c.get(1, 1));
            let det = &(a * e) - &(b * d);
            if det.is_zero() {
                return None;
            }
            let inv = det.inverse();
            // x0 = (e r0 - b r1)/det ; x1 = (a r1 - d r0)/det
            let x0 = rhs[0].scale(e).sub(&rhs[1].scale(b)).scale(&inv);
            let x1 = rhs[1].scale(a).sub(&rhs[0].scale(d)).scale(&inv);
            Some(vec![x0, x1])
        }
        _ => None,
    }
}

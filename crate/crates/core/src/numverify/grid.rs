use crate::{Error, Result};

use super::eigen::{dense_symmetric_lowest, BandedSymmetric};

/// Discretization domain.
#[derive(Clone, Copy, Debug)]
pub enum Domain {
    /// Dirichlet box `[lo, hi]`.
    Interval { lo: f64, hi: f64 },
    /// Periodic cell `[0, length)`.
    Periodic { length: f64 },
}

/// Potential evaluator: scalar or symmetric two-channel.
pub enum Potential {
    Scalar(Box<dyn Fn(f64) -> f64 + Sync>),
    TwoChannel(Box<dyn Fn(f64) -> [[f64; 2]; 2] + Sync>),
}

impl Potential {
    pub fn channels(&self) -> usize {
        match self {
            Potential::Scalar(_) => 1,
            Potential::TwoChannel(_) => 2,
        }
    }
}

/// Finite-difference Schroedinger problem `-d^2/dz^2 + V(z)`.
pub struct GridProblem {
    pub domain: Domain,
    pub n: usize,
    /// 2 or 4 (central stencil order; near Dirichlet walls the order drops
    /// to 2 where the wide stencil does not fit, which is harmless in the
    /// exponentially suppressed tail region).
    pub order: usize,
    pub potential: Potential,
}

/// Spectrum with a grid-doubling error estimate. `levels` carries the
/// Richardson-extrapolated values.
#[derive(Clone, Debug)]
pub struct SpectrumNumeric {
    pub levels: Vec<f64>,
    pub coarse: Vec<f64>,
    pub fine: Vec<f64>,
    pub error_estimate: Vec<f64>,
    pub grids: (usize, usize),
}

enum Assembled {
    Banded(BandedSymmetric),
    Dense(Vec<Vec<f64>>),
}

impl GridProblem {
    fn points(&self, n: usize) -> (Vec<f64>, f64) {
        match self.domain {
            Domain::Interval { lo, hi } => {
                let h = (hi - lo) / (n as f64 + 1.0);
                ((1..=n).map(|i| lo + h * i as f64).collect(), h)
            }
            Domain::Periodic { length } => {
                let h = length / n as f64;
                ((0..n).map(|i| h * i as f64).collect(), h)
            }
        }
    }

    fn potential_at(&self, z: f64) -> [[f64; 2]; 2] {
        match &self.potential {
            Potential::Scalar(f) => [[f(z), 0.0], [0.0, 0.0]],
            Potential::TwoChannel(f) => f(z),
        }
    }

    fn assemble(&self, n: usize) -> Result<Assembled> {
        if self.order != 2 && self.order != 4 {
            return Err(Error::Numeric("stencil order must be 2 or 4".into()));
        }
        let ch = self.potential.channels();
        let (pts, h) = self.points(n);
        let dim = ch * n;
        let h2 = h * h;
        match self.domain {
            Domain::Interval { .. } => {
                let bw = ch * if self.order == 4 { 2 } else { 1 };
                let mut a = BandedSymmetric::zero(dim, bw);
                for i in 0..n {
                    let v = self.potential_at(pts[i]);
                    for c in 0..ch {
                        a.add(ch * i + c, ch * i + c, v[c][c]);
                    }
                    if ch == 2 {
                        a.add(2 * i, 2 * i + 1, v[0][1]);
                    }
                    let wide_ok = self.order == 4 && i >= 2 && i + 2 < n;
                    if wide_ok {
                        for c in 0..ch {
                            let row = ch * i + c;
                            a.add(row, row, 30.0 / (12.0 * h2));
                            a.add(row, row - ch, -16.0 / (12.0 * h2) / 2.0);
                            a.add(row - ch, row, -16.0 / (12.0 * h2) / 2.0);
                            a.add(row, row - 2 * ch, 1.0 / (12.0 * h2) / 2.0);
                            a.add(row - 2 * ch, row, 1.0 / (12.0 * h2) / 2.0);
                        }
                    } else {
                        for c in 0..ch {
                            let row = ch * i + c;
                            a.add(row, row, 2.0 / h2);
                            if i > 0 {
                                a.add(row, row - ch, -1.0 / h2 / 2.0);
                                a.add(row - ch, row, -1.0 / h2 / 2.0);
                            }
                        }
                    }
                }
                Ok(Assembled::Banded(a))
            }
            Domain::Periodic { .. } => {
                let mut a = vec![vec![0.0; dim]; dim];
                let idx = |i: isize, c: usize| -> usize {
                    let ii = i.rem_euclid(n as isize) as usize;
                    ch * ii + c
                };
                for i in 0..n {
                    let v = self.potential_at(pts[i]);
                    for c in 0..ch {
                        a[ch * i + c][ch * i + c] += v[c][c];
                    }
                    if ch == 2 {
                        a[2 * i][2 * i + 1] += v[0][1];
                        a[2 * i + 1][2 * i] += v[1][0];
                    }
                    for c in 0..ch {
                        let row = ch * i + c;
                        if self.order == 4 {
                            a[row][row] += 30.0 / (12.0 * h2);
                            for (off, w) in [(1isize, -16.0), (2, 1.0)] {
                                let wv = w / (12.0 * h2);
                                a[row][idx(i as isize + off, c)] += wv;
                                a[row][idx(i as isize - off, c)] += wv;
                            }
                        } else {
                            a[row][row] += 2.0 / h2;
                            a[row][idx(i as isize + 1, c)] += -1.0 / h2;
                            a[row][idx(i as isize - 1, c)] += -1.0 / h2;
                        }
                    }
                }
                Ok(Assembled::Dense(a))
            }
        }
    }

    fn solve_at(&self, n: usize, count: usize) -> Result<Vec<f64>> {
        match self.assemble(n)? {
            Assembled::Banded(b) => b.lowest_eigenvalues(count),
            Assembled::Dense(mut d) => dense_symmetric_lowest(&mut d, count),
        }
    }

    /// Lowest `count` levels with one grid doubling and Richardson
    /// extrapolation at the stencil order.
    pub fn solve_spectrum(&self, count: usize) -> Result<SpectrumNumeric> {
        if self.n < 16 {
            return Err(Error::Numeric("grid too coarse".into()));
        }
        if count == 0 || count > self.potential.channels() * self.n {
            return Err(Error::Numeric("invalid eigenvalue count".into()));
        }
        let coarse = self.solve_at(self.n, count)?;
        let fine = self.solve_at(2 * self.n, count)?;
        let factor = if self.order == 4 { 16.0 } else { 4.0 };
        let mut levels = Vec::with_capacity(count);
        let mut err = Vec::with_capacity(count);
        for k in 0..count {
            levels.push((factor * fine[k] - coarse[k]) / (factor - 1.0));
            err.push((fine[k] - coarse[k]).abs() / (factor - 1.0));
        }
        Ok(SpectrumNumeric {
            levels,
            coarse,
            fine,
            error_estimate: err,
            grids: (self.n, 2 * self.n),
        })
    }

    /// Rayleigh quotient of a sampled wavefunction on the coarse grid
    /// (channel-major interleaved for two-channel problems).
    pub fn rayleigh_quotient(&self, psi: &dyn Fn(f64) -> Vec<f64>) -> Result<f64> {
        let ch = self.potential.channels();
        let (pts, _) = self.points(self.n);
        let mut v = Vec::with_capacity(ch * self.n);
        for &z in &pts {
            let vals = psi(z);
            if vals.len() != ch {
                return Err(Error::Numeric("wavefunction channel count mismatch".into()));
            }
            v.extend(vals);
        }
        let norm: f64 = v.iter().map(|x| x * x).sum();
        if norm == 0.0 {
            return Err(Error::Numeric("zero trial function".into()));
        }
        let hv = match self.assemble(self.n)? {
            Assembled::Banded(b) => b.apply(&v),
            Assembled::Dense(d) => {
                let mut y = vec![0.0; v.len()];
                for (i, row) in d.iter().enumerate() {
                    y[i] = row.iter().zip(&v).map(|(a, b)| a * b).sum();
                }
                y
            }
        };
        Ok(v.iter().zip(&hv).map(|(a, b)| a * b).sum::<f64>() / norm)
    }
}

use crate::{Error, Result};

/// Symmetric banded matrix stored by diagonals: `rows[i][dist]` holds
/// `A[i, i - dist]` for `dist = 0..=bandwidth` (entries below the main
/// diagonal; symmetry supplies the rest).
#[derive(Clone, Debug)]
pub struct BandedSymmetric {
    pub n: usize,
    pub bandwidth: usize,
    rows: Vec<Vec<f64>>,
}

impl BandedSymmetric {
    pub fn zero(n: usize, bandwidth: usize) -> Self {
        BandedSymmetric { n, bandwidth, rows: vec![vec![0.0; bandwidth + 1]; n] }
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        let (hi, lo) = if i >= j { (i, j) } else { (j, i) };
        let dist = hi - lo;
        if dist > self.bandwidth {
            0.0
        } else {
            self.rows[hi][dist]
        }
    }

    /// Symmetric add into `A[i][j]` and `A[j][i]`.
    pub fn add(&mut self, i: usize, j: usize, v: f64) {
        let (hi, lo) = if i >= j { (i, j) } else { (j, i) };
        let dist = hi - lo;
        assert!(dist <= self.bandwidth, "entry outside the band");
        self.rows[hi][dist] += v;
    }

    /// Matrix-vector product.
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        let mut y = vec![0.0; self.n];
        for i in 0..self.n {
            y[i] += self.rows[i][0] * x[i];
            for dist in 1..=self.bandwidth.min(i) {
                let v = self.rows[i][dist];
                if v != 0.0 {
                    y[i] += v * x[i - dist];
                    y[i - dist] += v * x[i];
                }
            }
        }
        y
    }

    /// Inertia of `A - sigma I`: the number of eigenvalues below `sigma`,
    /// via the banded LDL^T factorization (no pivoting; a vanishing pivot is
    /// nudged, which for counting purposes is equivalent to perturbing sigma).
    pub fn count_below(&self, sigma: f64) -> usize {
        let b = self.bandwidth;
        let n = self.n;
        let mut d = vec![0.0f64; n];
        // l[i][dist] = L[i][i-dist], dist = 1..=b
        let mut l = vec![vec![0.0f64; b + 1]; n];
        let mut negatives = 0;
        for i in 0..n {
            let maxd = b.min(i);
            for dist in (1..=maxd).rev() {
                let k = i - dist;
                let mut s = self.rows[i][dist];
                // sum over common band entries: L[i][k-t] L[k][k-t] d[k-t]
                let t_max = (b - dist).min(k);
                for t in 1..=t_max {
                    s -= l[i][dist + t] * l[k][t] * d[k - t];
                }
                l[i][dist] = s / d[k];
            }
            let mut s = self.rows[i][0] - sigma;
            for dist in 1..=maxd {
                s -= l[i][dist] * l[i][dist] * d[i - dist];
            }
            if s == 0.0 {
                s = f64::MIN_POSITIVE;
            }
            if s < 0.0 {
                negatives += 1;
            }
            d[i] = s;
        }
        negatives
    }

    fn gershgorin(&self) -> (f64, f64) {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..self.n {
            let mut r = 0.0;
            for j in i.saturating_sub(self.bandwidth)..(i + self.bandwidth + 1).min(self.n) {
                if j != i {
                    r += self.get(i, j).abs();
                }
            }
            lo = lo.min(self.rows[i][0] - r);
            hi = hi.max(self.rows[i][0] + r);
        }
        (lo, hi)
    }

    /// Lowest `count` eigenvalues by bisection on the inertia count.
    pub fn lowest_eigenvalues(&self, count: usize) -> Result<Vec<f64>> {
        if count > self.n {
            return Err(Error::Numeric(format!(
                "requested {count} eigenvalues of a dimension-{} problem",
                self.n
            )));
        }
        let (glo, ghi) = self.gershgorin();
        let mut out = Vec::with_capacity(count);
        for k in 0..count {
            let mut lo = if k == 0 { glo } else { out[k - 1] };
            let mut hi = ghi;
            for _ in 0..100 {
                let mid = 0.5 * (lo + hi);
                if mid == lo || mid == hi {
                    break;
                }
                if self.count_below(mid) >= k + 1 {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            out.push(0.5 * (lo + hi));
        }
        Ok(out)
    }
}

/// Lowest eigenvalues of a symmetric tridiagonal matrix (diagonal `d`,
/// subdiagonal `e` with `e[i]` coupling `i-1, i`).
pub fn tridiagonal_lowest(d: &[f64], e: &[f64], count: usize) -> Result<Vec<f64>> {
    let n = d.len();
    let mut b = BandedSymmetric::zero(n, 1);
    for i in 0..n {
        b.add(i, i, d[i]);
        if i > 0 {
            b.add(i, i - 1, e[i]);
        }
    }
    b.lowest_eigenvalues(count)
}

/// Householder reduction of a dense symmetric matrix to tridiagonal form
/// (eigenvalues only; no transform accumulation), followed by bisection.
pub fn dense_symmetric_lowest(a: &mut Vec<Vec<f64>>, count: usize) -> Result<Vec<f64>> {
    let n = a.len();
    for (i, row) in a.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Numeric("matrix not square".into()));
        }
        for j in 0..n {
            if (a[i][j] - a[j][i]).abs() > 1e-9 * (1.0 + a[i][j].abs()) {
                return Err(Error::Numeric(format!(
                    "matrix not symmetric at ({i}, {j}): {} vs {}",
                    a[i][j], a[j][i]
                )));
            }
        }
    }
    let mut d = vec![0.0f64; n];
    let mut e = vec![0.0f64; n];
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let mut scale = 0.0;
            for k in 0..=l {
                scale += a[i][k].abs();
            }
            if scale == 0.0 {
                e[i] = a[i][l];
            } else {
                for k in 0..=l {
                    a[i][k] /= scale;
                    h += a[i][k] * a[i][k];
                }
                let mut f = a[i][l];
                let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h -= f * g;
                a[i][l] = f - g;
                f = 0.0;
                for j in 0..=l {
                    let mut g = 0.0;
                    for k in 0..=j {
                        g += a[j][k] * a[i][k];
                    }
                    for k in (j + 1)..=l {
                        g += a[k][j] * a[i][k];
                    }
                    e[j] = g / h;
                    f += e[j] * a[i][j];
                }
                let hh = f / (h + h);
                for j in 0..=l {
                    let f = a[i][j];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        a[j][k] -= f * e[k] + g * a[i][k];
                    }
                }
            }
        } else {
            e[i] = a[i][l];
        }
        d[i] = h;
    }
    for i in 0..n {
        d[i] = a[i][i];
    }
    tridiagonal_lowest(&d, &e, count)
}

use std::fmt;

use crate::exactnum::{rat, Poly, QuadExt};

/// Dense square matrix over the quadratic extension, used for restrictions of
/// space-preserving operators to finite bases.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    n: usize,
    data: Vec<QuadExt>,
}

impl ExactMatrix {
    pub fn zero(n: usize) -> Self {
        ExactMatrix { n, data: vec![QuadExt::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zero(n);
        for i in 0..n {
            m.set(i, i, QuadExt::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<QuadExt>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        ExactMatrix { n, data: rows.into_iter().flatten().collect() }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &QuadExt {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: QuadExt) {
        self.data[i * self.n + j] = v;
    }

    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.n, other.n);
        let mut out = ExactMatrix::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                let mut acc = QuadExt::zero();
                for k in 0..self.n {
                    acc = &acc + &(self.get(i, k) * other.get(k, j));
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn add(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = &*a + b;
        }
        out
    }

    pub fn sub(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = &*a - b;
        }
        out
    }

    pub fn scale(&self, c: &QuadExt) -> ExactMatrix {
        ExactMatrix { n: self.n, data: self.data.iter().map(|v| v * c).collect() }
    }

    pub fn trace(&self) -> QuadExt {
        let mut acc = QuadExt::zero();
        for i in 0..self.n {
            acc = &acc + self.get(i, i);
        }
        acc
    }

    /// Characteristic polynomial `det(E I - M)` by the Faddeev-LeVerrier
    /// recursion; exact, monic of degree `n`.
    pub fn char_poly(&self) -> Poly {
        let n = self.n;
        let mut coeffs = vec![QuadExt::zero(); n + 1];
        coeffs[n] = QuadExt::one();
        let mut b = ExactMatrix::identity(n);
        for k in 1..=n {
            let ab = self.mul(&b);
            let c = &ab.trace().scale(&(rat(1) / rat(k as i64))) * &QuadExt::from_int(-1);
            // p(E) = E^n + c_{n-1} E^{n-1} + ...: c here is -tr/k
            coeffs[n - k] = c.clone();
            b = ab;
            for i in 0..n {
                let v = &*b.get(i, i) + &c;
                b.set(i, i, v);
            }
        }
        Poly::from_coeffs(coeffs)
    }

    /// Exact determinant via the characteristic polynomial constant term.
    pub fn det(&self) -> QuadExt {
        let p = self.char_poly();
        let c0 = p.coeff(0);
        if self.n % 2 == 0 {
            c0
        } else {
            -&c0
        }
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).to_f64()).collect())
            .collect()
    }

    /// Row-major exact strings (for CSV export).
    pub fn entry_strings(&self) -> Vec<Vec<String>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).to_string()).collect())
            .collect()
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn q(n: i64) -> QuadExt {
        QuadExt::from_int(n)
    }

    #[test]
    fn char_poly_of_diagonal() {
        let m = ExactMatrix::from_rows(vec![vec![q(2), q(0)], vec![q(0), q(-3)]]);
        // (E-2)(E+3) = E^2 + E - 6
        let p = m.char_poly();
        assert_eq!(p, Poly::from_rat_coeffs(vec![rat(-6), rat(1), rat(1)]));
        assert_eq!(m.det(), q(-6));
    }

    #[test]
    fn char_poly_with_surd_entries_is_rational_when_balanced() {
        // [[0, s],[s, 0]] with s = sqrt(2): char poly E^2 - 2.
        let s = QuadExt::sqrt_of(rat(2));
        let m = ExactMatrix::from_rows(vec![vec![q(0), s.clone()], vec![s, q(0)]]);
        let p = m.char_poly();
        assert_eq!(p, Poly::from_rat_coeffs(vec![rat(-2), rat(0), rat(1)]));
    }
}

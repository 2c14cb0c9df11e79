use crate::exactnum::QuadExt;
use crate::spaces::ExactMatrix;

/// Moments of the linear functional `L` with `L[X_0] = 1`, `L[X_n] = 0`
/// (n >= 1) for a monic chain `X_(n+1) = (E + a_n) X_n + b_n X_(n-1)`:
/// `mu_k = L[E^k]`, computed by expanding powers of `E` in the chain basis.
pub fn moments_of_monic_chain(a: &[QuadExt], b: &[QuadExt], count: usize) -> Vec<QuadExt> {
    // coeffs[n] = coefficient of X_n in the expansion of E^k
    let mut coeffs = vec![QuadExt::zero(); count + 2];
    coeffs[0] = QuadExt::one();
    let mut moments = vec![coeffs[0].clone()];
    for _ in 1..count {
        // E X_n = X_(n+1) - a_n X_n - b_n X_(n-1)
        let mut next = vec![QuadExt::zero(); coeffs.len() + 1];
        for (n, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            next[n + 1] = &next[n + 1] + c;
            if n < a.len() {
                let t = c * &a[n];
                next[n] = &next[n] - &t;
            }
            if n >= 1 && n < b.len() {
                let t = c * &b[n];
                next[n - 1] = &next[n - 1] - &t;
            }
        }
        coeffs = next;
        moments.push(coeffs[0].clone());
    }
    moments
}

/// Hankel determinants `det [mu_(i+j)]` for sizes `1..=max_size`.
pub fn hankel_determinants(moments: &[QuadExt], max_size: usize) -> Vec<QuadExt> {
    let mut out = vec![];
    for h in 1..=max_size {
        if 2 * (h - 1) >= moments.len() {
            break;
        }
        let mut m = ExactMatrix::zero(h);
        for i in 0..h {
            for j in 0..h {
                m.set(i, j, moments[i + j].clone());
            }
        }
        out.push(m.det());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn moments_of_symmetric_toy_chain() {
        // a_n = 0, b_n = n: X1 = E, X2 = E^2 + ... with L[E] = 0 by symmetry.
        let a = vec![QuadExt::zero(); 8];
        let b: Vec<QuadExt> = (0..8).map(|n| QuadExt::from_rat(rat(n))).collect();
        let mu = moments_of_monic_chain(&a, &b, 6);
        assert_eq!(mu[0], QuadExt::one());
        assert!(mu[1].is_zero());
        assert!(mu[3].is_zero());
        let h = hankel_determinants(&mu, 3);
        assert_eq!(h.len(), 3);
        assert_eq!(h[0], QuadExt::one());
    }
}

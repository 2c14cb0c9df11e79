use num_traits::{Signed, Zero};

use super::{Poly, Rat};
use crate::{Error, Result};

/// Sturm chain of a squarefree rational polynomial.
struct SturmChain {
    chain: Vec<Poly>,
}

impl SturmChain {
    fn new(squarefree: &Poly) -> Self {
        let mut chain = vec![squarefree.clone(), squarefree.derivative()];
        loop {
            let k = chain.len();
            if chain[k - 1].is_zero() {
                chain.pop();
                break;
            }
            if chain[k - 1].degree() == Some(0) {
                break;
            }
            let (_, r) = chain[k - 2].divmod(&chain[k - 1]).unwrap();
            chain.push(-&r);
        }
        SturmChain { chain }
    }

    fn variations_at(&self, x: &Rat) -> usize {
        let mut count = 0;
        let mut last = 0i32;
        for p in &self.chain {
            let s = p.eval_rat(x).signum();
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    fn count(&self, a: &Rat, b: &Rat) -> usize {
        debug_assert!(a < b);
        self.variations_at(a) - self.variations_at(b)
    }
}

/// Count distinct real roots of `p` in `(a, b]` by Sturm's theorem.
pub fn sturm_root_count(p: &Poly, a: &Rat, b: &Rat) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomialRoots);
    }
    if !p.is_rational() {
        return Err(Error::IrrationalCoefficients);
    }
    let chain = SturmChain::new(&p.squarefree());
    Ok(chain.count(a, b))
}

/// Cauchy bound: every real root lies in (-B, B].
fn cauchy_bound(p: &Poly) -> Rat {
    let lead = p.leading().unwrap().as_rat().unwrap().clone();
    let mut max = Rat::zero();
    for c in p.coeffs() {
        let a = c.as_rat().unwrap().abs();
        if a > max {
            max = a;
        }
    }
    Rat::from_integer(1.into()) + max / lead.abs()
}

/// Isolate every distinct real root of a rational polynomial.
///
/// Returns disjoint closed intervals `[lo, hi]` sorted in increasing order,
/// each of width at most `precision`, each containing exactly one root.
/// Multiple roots are collapsed (the squarefree part drives the count).
pub fn isolate_real_roots(p: &Poly, precision: &Rat) -> Result<Vec<(Rat, Rat)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomialRoots);
    }
    if !p.is_rational() {
        return Err(Error::IrrationalCoefficients);
    }
    if p.degree() == Some(0) {
        return Ok(vec![]);
    }
    let sf = p.squarefree();
    if sf.degree() == Some(0) {
        return Ok(vec![]);
    }
    let chain = SturmChain::new(&sf);
    let bound = cauchy_bound(&sf);
    let mut out = vec![];
    // Worklist of (lo, hi, count) over half-open intervals (lo, hi].
    let mut work = vec![];
    let lo = -bound.clone();
    let total = chain.count(&lo, &bound);
    if total > 0 {
        work.push((lo, bound, total));
    }
    while let Some((lo, hi, count)) = work.pop() {
        if count == 1 && (&hi - &lo) <= *precision {
            out.push((lo, hi));
            continue;
        }
        let mid = (&lo + &hi) / Rat::from_integer(2.into());
        if sf.eval_rat(&mid).is_zero() {
            // Exact root at the midpoint: emit a point interval, recurse on the rest.
            out.push((mid.clone(), mid.clone()));
            let left = chain.count(&lo, &mid) - 1;
            if left > 0 {
                work.push((lo, mid.clone(), left));
            }
            let right = count - 1 - left;
            if right > 0 {
                work.push((mid, hi, right));
            }
            continue;
        }
        let left = chain.count(&lo, &mid);
        if left > 0 {
            work.push((lo, mid.clone(), left));
        }
        if count > left {
            work.push((mid, hi, count - left));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::{rat, ratio};
    use super::*;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_rat_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn isolates_both_roots_of_square_minus_four() {
        let prec = ratio(1, 1 << 20);
        let roots = isolate_real_roots(&p(&[-4, 0, 1]), &prec).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots[0].0 <= rat(-2) && rat(-2) <= roots[0].1);
        assert!(roots[1].0 <= rat(2) && rat(2) <= roots[1].1);
        assert!(&roots[0].1 - &roots[0].0 <= prec);
    }

    #[test]
    fn counts_match_known_linear_factors() {
        // roots at 0, 1/2, -3
        let q = &(&p(&[0, 1]) * &Poly::from_rat_coeffs(vec![ratio(-1, 2), rat(1)])) * &p(&[3, 1]);
        assert_eq!(sturm_root_count(&q, &rat(-4), &rat(1)).unwrap(), 3);
        assert_eq!(sturm_root_count(&q, &rat(0), &rat(1)).unwrap(), 1); // (0, 1] holds only 1/2
        let roots = isolate_real_roots(&q, &ratio(1, 1024)).unwrap();
        assert_eq!(roots.len(), 3);
    }

    #[test]
    fn multiple_roots_counted_once() {
        // (x-1)^3
        let c = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[-1, 1]);
        let roots = isolate_real_roots(&c, &ratio(1, 1024)).unwrap();
        assert_eq!(roots.len(), 1);
    }

    #[test]
    fn no_real_roots() {
        let roots = isolate_real_roots(&p(&[1, 0, 1]), &ratio(1, 1024)).unwrap();
        assert!(roots.is_empty());
    }
}

/// One matched algebraic level.
#[derive(Clone, Debug)]
pub struct LevelMatch {
    pub algebraic: f64,
    pub numeric: f64,
    pub residual: f64,
}

#[derive(Clone, Debug, Default)]
pub struct CompareReport {
    pub matches: Vec<LevelMatch>,
    pub unmatched: Vec<f64>,
    pub tolerance: f64,
}

impl CompareReport {
    pub fn all_matched(&self) -> bool {
        self.unmatched.is_empty()
    }

    pub fn max_residual(&self) -> f64 {
        self.matches.iter().map(|m| m.residual).fold(0.0, f64::max)
    }
}

/// Greedy nearest matching of algebraic levels (plus `shift`) into a numeric
/// spectrum; residuals are relative to `max(1, |level|)`. The algebraic set
/// is expected to be a subset of the numeric spectrum.
pub fn compare_levels(algebraic: &[f64], numeric: &[f64], shift: f64, tol: f64) -> CompareReport {
    let mut report = CompareReport { tolerance: tol, ..Default::default() };
    let mut used = vec![false; numeric.len()];
    for &a in algebraic {
        let target = a + shift;
        let mut best: Option<(usize, f64)> = None;
        for (i, &nv) in numeric.iter().enumerate() {
            if used[i] {
                continue;
            }
            let d = (nv - target).abs();
            if best.map_or(true, |(_, bd)| d < bd) {
                best = Some((i, d));
            }
        }
        match best {
            Some((i, d)) => {
                let rel = d / target.abs().max(1.0);
                if rel <= tol {
                    used[i] = true;
                    report.matches.push(LevelMatch {
                        algebraic: target,
                        numeric: numeric[i],
                        residual: rel,
                    });
                } else {
                    report.unmatched.push(target);
                }
            }
            None => report.unmatched.push(target),
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_lists_match_with_zero_residual() {
        let r = compare_levels(&[1.0, 3.0], &[1.0, 2.0, 3.0], 0.0, 1e-9);
        assert!(r.all_matched());
        assert_eq!(r.max_residual(), 0.0);
    }

    #[test]
    fn shift_is_applied() {
        let r = compare_levels(&[0.5], &[1.5], 1.0, 1e-9);
        assert!(r.all_matched());
    }

    #[test]
    fn out_of_tolerance_reported() {
        let r = compare_levels(&[1.0], &[1.1], 0.0, 1e-3);
        assert!(!r.all_matched());
    }
}

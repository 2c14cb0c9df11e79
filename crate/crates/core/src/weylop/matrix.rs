use std::fmt;

use super::DiffOperator;
use crate::exactnum::{Poly, QuadExt, Rat};

/// 2x2 matrix of differential operators.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MatrixOperator {
    entries: [[DiffOperator; 2]; 2],
}

impl MatrixOperator {
    pub fn zero() -> Self {
        MatrixOperator::default()
    }

    pub fn identity() -> Self {
        let mut m = MatrixOperator::zero();
        m.entries[0][0] = DiffOperator::identity();
        m.entries[1][1] = DiffOperator::identity();
        m
    }

    pub fn new(e11: DiffOperator, e12: DiffOperator, e21: DiffOperator, e22: DiffOperator) -> Self {
        MatrixOperator { entries: [[e11, e12], [e21, e22]] }
    }

    pub fn diag(top: DiffOperator, bottom: DiffOperator) -> Self {
        MatrixOperator::new(top, DiffOperator::zero(), DiffOperator::zero(), bottom)
    }

    /// `scalar * I`.
    pub fn scalar(op: DiffOperator) -> Self {
        MatrixOperator::diag(op.clone(), op)
    }

    pub fn entry(&self, i: usize, j: usize) -> &DiffOperator {
        &self.entries[i][j]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, op: DiffOperator) {
        self.entries[i][j] = op;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|e| e.is_zero())
    }

    pub fn add(&self, other: &MatrixOperator) -> MatrixOperator {
        let mut out = MatrixOperator::zero();
        for i in 0..2 {
            for j in 0..2 {
                out.entries[i][j] = self.entries[i][j].add(&other.entries[i][j]);
            }
        }
        out
    }

    pub fn sub(&self, other: &MatrixOperator) -> MatrixOperator {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MatrixOperator {
        let mut out = MatrixOperator::zero();
        for i in 0..2 {
            for j in 0..2 {
                out.entries[i][j] = self.entries[i][j].neg();
            }
        }
        out
    }

    pub fn scale(&self, c: &Poly) -> MatrixOperator {
        let mut out = MatrixOperator::zero();
        for i in 0..2 {
            for j in 0..2 {
                out.entries[i][j] = self.entries[i][j].scale(c);
            }
        }
        out
    }

    pub fn scale_rat(&self, c: &Rat) -> MatrixOperator {
        self.scale(&Poly::from_rat(c.clone()))
    }

    pub fn scale_quad(&self, c: &QuadExt) -> MatrixOperator {
        self.scale(&Poly::constant(c.clone()))
    }

    /// Row-by-column operator product.
    pub fn compose(&self, other: &MatrixOperator) -> MatrixOperator {
        let mut out = MatrixOperator::zero();
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = DiffOperator::zero();
                for k in 0..2 {
                    acc = acc.add(&self.entries[i][k].compose(&other.entries[k][j]));
                }
                out.entries[i][j] = acc;
            }
        }
        out
    }

    pub fn commutator(&self, other: &MatrixOperator) -> MatrixOperator {
        self.compose(other).sub(&other.compose(self))
    }

    pub fn specialize_a(&self, value: &Rat) -> MatrixOperator {
        let mut out = MatrixOperator::zero();
        for i in 0..2 {
            for j in 0..2 {
                out.entries[i][j] = self.entries[i][j].specialize_a(value);
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self == &MatrixOperator::identity()
    }
}

impl fmt::Display for MatrixOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[ 11: {}", self.entries[0][0])?;
        writeln!(f, "  12: {}", self.entries[0][1])?;
        writeln!(f, "  21: {}", self.entries[1][0])?;
        write!(f, "  22: {} ]", self.entries[1][1])
    }
}

impl fmt::Debug for MatrixOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weylop::GenExponent;

    #[test]
    fn identity_is_neutral() {
        let a = MatrixOperator::new(
            DiffOperator::d_pow(2),
            DiffOperator::x_pow(GenExponent::int(1)),
            DiffOperator::zero(),
            DiffOperator::big_d(),
        );
        assert_eq!(MatrixOperator::identity().compose(&a), a);
        assert_eq!(a.compose(&MatrixOperator::identity()), a);
    }

    #[test]
    fn nilpotent_triangular_inverse() {
        // P = I + c d sigma+  has inverse  I - c d sigma+.
        let c = Rat::new(1.into(), 2.into());
        let mut p = MatrixOperator::identity();
        p.set_entry(0, 1, DiffOperator::d_pow(1).scale_rat(&c));
        let mut pinv = MatrixOperator::identity();
        pinv.set_entry(0, 1, DiffOperator::d_pow(1).scale_rat(&(-c)));
        assert!(p.compose(&pinv).is_identity());
        assert!(pinv.compose(&p).is_identity());
    }
}

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{format_rational, Rational};

/// Dense univariate polynomial, coefficients indexed from degree 0.
/// The zero polynomial is the empty sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DensePoly {
    coeffs: Vec<Rational>,
}

impl DensePoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        DensePoly { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        DensePoly::new(vec![c])
    }

    /// `c * z^e`
    pub fn monomial(e: usize, c: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); e];
        coeffs.push(c);
        DensePoly::new(coeffs)
    }

    /// `z + c`
    pub fn linear_monic(c: Rational) -> Self {
        DensePoly::new(vec![c, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        DensePoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn eval(&self, z: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * z + c)
    }

    /// `z^d p(1/z)` for `d >= deg p`.
    pub fn reversed(&self, d: usize) -> Self {
        assert!(self.degree().is_none_or(|deg| deg <= d), "reversal length below degree");
        let mut c = vec![Rational::zero(); d + 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            c[d - i] = x.clone();
        }
        DensePoly::new(c)
    }
}

impl Zero for DensePoly {
    fn zero() -> Self {
        DensePoly::default()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for DensePoly {
    fn one() -> Self {
        DensePoly::constant(Rational::one())
    }
}

impl Add for DensePoly {
    type Output = DensePoly;
    fn add(self, rhs: DensePoly) -> DensePoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DensePoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for DensePoly {
    type Output = DensePoly;
    fn sub(self, rhs: DensePoly) -> DensePoly {
        self + (-rhs)
    }
}

impl Neg for DensePoly {
    type Output = DensePoly;
    fn neg(self) -> DensePoly {
        DensePoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for DensePoly {
    type Output = DensePoly;
    fn mul(self, rhs: DensePoly) -> DensePoly {
        if self.is_zero() || rhs.is_zero() {
            return DensePoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        DensePoly::new(out)
    }
}

impl fmt::Display for DensePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", format_rational(c))?,
                1 => write!(f, "({})z", format_rational(c))?,
                _ => write!(f, "({})z^{i}", format_rational(c))?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn p(c: &[i64]) -> DensePoly {
        DensePoly::new(c.iter().map(|&x| rat(x, 1)).collect())
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
    }

    #[test]
    fn arithmetic() {
        assert_eq!(p(&[1, 1]) * p(&[1, -1]), p(&[1, 0, -1]));
        assert_eq!(p(&[1, 2]) - p(&[1, 2]), DensePoly::zero());
        assert_eq!(p(&[1, 2, 3]).eval(&rat(2, 1)), rat(17, 1));
        assert_eq!(p(&[1, 2]).reversed(3), p(&[0, 0, 2, 1]));
    }
}

use std::fmt;

use num_traits::{One, Zero};

use super::{format_rational, DensePoly, Rational};
use crate::error::{Error, Result};

/// Truncated formal power series `c_0 + c_1 z + ... + c_{T-1} z^{T-1} + O(z^T)`.
///
/// The order `T` is the number of known coefficients and is always at
/// least one. Every operation reports the exact order its result is
/// valid to.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    /// Panics on an empty coefficient list.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one known coefficient");
        Series { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Series::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn one(order: usize) -> Self {
        Series::from_poly(&DensePoly::one(), order)
    }

    pub fn zero(order: usize) -> Self {
        Series::new(vec![Rational::zero(); order])
    }

    /// Expands a polynomial to the given order (higher terms are dropped).
    pub fn from_poly(p: &DensePoly, order: usize) -> Self {
        Series::new((0..order).map(|i| p.coeff(i)).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient `i`; panics if `i` is not below the order.
    pub fn coeff(&self, i: usize) -> &Rational {
        assert!(i < self.order(), "coefficient {i} beyond series order {}", self.order());
        &self.coeffs[i]
    }

    pub fn is_unitary(&self) -> bool {
        self.coeffs[0].is_one()
    }

    /// Index of the first nonzero coefficient, `None` if all known ones vanish.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order >= 1 && order <= self.order(), "cannot truncate to order {order}");
        Series::new(self.coeffs[..order].to_vec())
    }

    /// True if both series agree on their common known coefficients.
    pub fn agrees_with(&self, other: &Series) -> bool {
        let n = self.order().min(other.order());
        self.coeffs[..n] == other.coeffs[..n]
    }

    pub fn add(&self, g: &Series) -> Series {
        let n = self.order().min(g.order());
        Series::new((0..n).map(|i| &self.coeffs[i] + &g.coeffs[i]).collect())
    }

    pub fn sub(&self, g: &Series) -> Series {
        let n = self.order().min(g.order());
        Series::new((0..n).map(|i| &self.coeffs[i] - &g.coeffs[i]).collect())
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Cauchy product; order is the smaller of the two.
    pub fn mul(&self, g: &Series) -> Series {
        let n = self.order().min(g.order());
        let mut out = vec![Rational::zero(); n];
        for (i, a) in self.coeffs[..n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in g.coeffs[..n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Series::new(out)
    }

    /// Product with an exact polynomial; the order is unchanged.
    pub fn mul_poly(&self, p: &DensePoly) -> Series {
        let n = self.order();
        let mut out = vec![Rational::zero(); n];
        for (i, a) in p.coeffs().iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in self.coeffs[..n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Series::new(out)
    }

    /// Multiplicative inverse to the same order.
    pub fn inverse(&self) -> Result<Series> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = c0.recip();
        let n = self.order();
        let mut out: Vec<Rational> = Vec::with_capacity(n);
        out.push(inv0.clone());
        for m in 1..n {
            let mut acc = Rational::zero();
            for k in 1..=m {
                acc += &self.coeffs[k] * &out[m - k];
            }
            out.push(-acc * &inv0);
        }
        Ok(Series::new(out))
    }

    /// `self / g`, order the smaller of the two.
    pub fn div(&self, g: &Series) -> Result<Series> {
        let n = self.order().min(g.order());
        Ok(self.truncate(n).mul(&g.truncate(n).inverse()?))
    }

    /// Multiplies by `z^n`; the order grows by `n`.
    pub fn shift_up(&self, n: usize) -> Series {
        let mut c = vec![Rational::zero(); n];
        c.extend(self.coeffs.iter().cloned());
        Series::new(c)
    }

    /// Divides by `z^n`; the first `n` coefficients must vanish and the
    /// order drops by `n`.
    pub fn shift_down(&self, n: usize) -> Result<Series> {
        if self.order() <= n {
            return Err(Error::InsufficientPrecision {
                needed: n + 1,
                available: self.order(),
            });
        }
        if let Some(i) = self.coeffs[..n].iter().position(|c| !c.is_zero()) {
            return Err(Error::InvalidArgument(format!(
                "cannot divide by z^{n}: coefficient {i} is nonzero"
            )));
        }
        Ok(Series::new(self.coeffs[n..].to_vec()))
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_rational(c))?;
        }
        write!(f, "] + O(z^{})", self.order())
    }
}

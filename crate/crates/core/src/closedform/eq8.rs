use num_traits::{One, Zero};

use crate::alphabet::{sigma, VirtualAlphabet};
use crate::arith::{solve_linear, DensePoly, Matrix, Rational, Series};
use crate::error::{Error, Result};
use crate::schur::Partition;

/// Scalars of the merged division identity
/// `z^{2k} gamma f_k = quotient * sigma(A) - subtrahend`.
#[derive(Debug, Clone, PartialEq)]
pub struct Eq8Solution {
    pub k: usize,
    /// `1 + a_1 z + ... + a_{k-1} z^{k-1}`
    pub quotient_poly: DensePoly,
    /// `1 + b_1 z + ... + b_k z^k`
    pub subtrahend_poly: DensePoly,
    pub gamma: Rational,
    sigma: Series,
}

impl Eq8Solution {
    /// The series `quotient * sigma - subtrahend` (valuation `>= 2k`).
    pub fn residual(&self) -> Series {
        self.sigma
            .mul_poly(&self.quotient_poly)
            .sub(&Series::from_poly(&self.subtrahend_poly, self.sigma.order()))
    }

    /// `f_k = residual / (gamma z^{2k})`, to order `T - 2k`.
    pub fn remainder(&self) -> Result<Series> {
        if self.gamma.is_zero() {
            // gamma is a signed ratio of rectangles with S_{(k+1)^k} on top
            return Err(Error::non_generic(Partition::rectangle(self.k + 1, self.k)));
        }
        Ok(self.residual().shift_down(2 * self.k)?.scale(&self.gamma.recip()))
    }
}

/// Solves for the scalars making coefficients `z^1 .. z^{2k-1}` of
/// `quotient * sigma(A) - subtrahend` vanish.
///
/// The quotient coefficients come from the Toeplitz system on
/// `z^{k+1} .. z^{2k-1}`, whose determinant is `S_{k^{k-1}}(A)`; the
/// subtrahend coefficients follow by back-substitution.
pub fn eq8_solve(a: &VirtualAlphabet, k: usize, order: usize) -> Result<Eq8Solution> {
    if k == 0 {
        return Err(Error::InvalidArgument("eq8 needs k >= 1".into()));
    }
    let needed = 2 * k + 2;
    if order < needed {
        return Err(Error::InsufficientPrecision { needed, available: order });
    }
    let sig = sigma(a, order);
    let s = |j: i64| -> Rational {
        if j < 0 {
            Rational::zero()
        } else {
            sig.coeff(j as usize).clone()
        }
    };
    let n = k - 1;
    let ki = k as i64;
    // row r <-> coefficient of z^{k+1+r}; column c <-> a_{c+1}
    let m = Matrix::from_fn(n, n, |r, c| s(ki + r as i64 - c as i64));
    let rhs: Vec<Rational> = (0..n).map(|r| -s(ki + 1 + r as i64)).collect();
    let alphas = solve_linear(&m, &rhs)?;

    let mut q = vec![Rational::one()];
    q.extend(alphas.iter().cloned());
    let coefficient = |deg: i64| -> Rational {
        q.iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (i, qi)| acc + qi * s(deg - i as i64))
    };
    let mut p = vec![Rational::one()];
    p.extend((1..=ki).map(coefficient));
    let gamma = coefficient(2 * ki);
    Ok(Eq8Solution {
        k,
        quotient_poly: DensePoly::new(q),
        subtrahend_poly: DensePoly::new(p),
        gamma,
        sigma: sig,
    })
}

use num_traits::{One, Zero};

use super::{Matrix, Rational};
use crate::error::{Error, Result};

/// Determinant over the rationals by Gaussian elimination.
pub fn determinant_gauss(m: &Matrix<Rational>) -> Rational {
    let n = m.rows();
    assert_eq!(n, m.cols(), "determinant of a non-square matrix");
    let mut a = m.clone();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a.get(r, col).is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            a.swap_rows(p, col);
            det = -det;
        }
        let pivot = a.get(col, col).clone();
        det *= &pivot;
        for r in col + 1..n {
            if a.get(r, col).is_zero() {
                continue;
            }
            let factor = a.get(r, col) / &pivot;
            for c in col + 1..n {
                let v = a.get(r, c) - &factor * a.get(col, c);
                a.set(r, c, v);
            }
        }
    }
    det
}

/// Solves `m x = rhs` exactly. Fails with `SingularSystem` when `m` is
/// singular.
pub fn solve_linear(m: &Matrix<Rational>, rhs: &[Rational]) -> Result<Vec<Rational>> {
    let n = m.rows();
    assert_eq!(n, m.cols(), "solve_linear needs a square matrix");
    assert_eq!(n, rhs.len(), "right-hand side length mismatch");
    let mut a = Matrix::from_fn(n, n + 1, |i, j| if j < n { m.get(i, j).clone() } else { rhs[i].clone() });
    for col in 0..n {
        let p = (col..n)
            .find(|&r| !a.get(r, col).is_zero())
            .ok_or(Error::SingularSystem)?;
        a.swap_rows(p, col);
        let pivot = a.get(col, col).clone();
        for r in 0..n {
            if r == col || a.get(r, col).is_zero() {
                continue;
            }
            let factor = a.get(r, col) / &pivot;
            for c in col..=n {
                let v = a.get(r, c) - &factor * a.get(col, c);
                a.set(r, c, v);
            }
        }
    }
    Ok((0..n).map(|i| a.get(i, n) / a.get(i, i)).collect())
}

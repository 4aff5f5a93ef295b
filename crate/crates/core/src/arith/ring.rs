use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::linalg::determinant_gauss;
use super::Rational;

/// A commutative ring with exact equality.
///
/// `det` defaults to a division-free minor expansion; fields may override
/// it with elimination.
pub trait CommRing:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn det(m: &Matrix<Self>) -> Self {
        determinant_expand(m)
    }
}

impl CommRing for Rational {
    fn det(m: &Matrix<Self>) -> Self {
        determinant_gauss(m)
    }
}

/// Dense row-major square or rectangular matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Clone> Matrix<R> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == m), "ragged matrix");
        Matrix {
            rows: n,
            cols: m,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Submatrix on the given column indices (all rows kept).
    pub fn select_cols(&self, cols: &[usize]) -> Self {
        Matrix::from_fn(self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }
}

/// Determinant by Laplace expansion along rows, memoized over column
/// subsets: `n * 2^n` ring multiplications, no division.
pub fn determinant_expand<R: CommRing>(m: &Matrix<R>) -> R {
    let n = m.rows();
    assert_eq!(n, m.cols(), "determinant of a non-square matrix");
    assert!(n < usize::BITS as usize, "matrix too large for subset expansion");
    if n == 0 {
        return R::one();
    }
    // minors[s]: determinant of rows 0..popcount(s) on the columns in s.
    let mut minors: Vec<R> = vec![R::zero(); 1 << n];
    minors[0] = R::one();
    for s in 1usize..(1 << n) {
        let row = s.count_ones() as usize - 1;
        let mut acc = R::zero();
        let mut pos = 0;
        for c in 0..n {
            if s & (1 << c) == 0 {
                continue;
            }
            let entry = m.get(row, c);
            let sub = &minors[s & !(1 << c)];
            if !entry.is_zero() && !sub.is_zero() {
                let term = entry.clone() * sub.clone();
                if (row + pos).is_multiple_of(2) {
                    acc = acc + term;
                } else {
                    acc = acc - term;
                }
            }
            pos += 1;
        }
        minors[s] = acc;
    }
    minors[(1 << n) - 1].clone()
}

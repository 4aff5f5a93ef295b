//! Partitions, integer index vectors and Jacobi–Trudi determinants.
//!
//! `S_v = det(h_{v_i + j - i})` is evaluated for any integer vector `v`,
//! not only partitions. Non-decreasing or negative indices straighten
//! themselves through the determinant: exchanging `v_i, v_{i+1}` for
//! `v_{i+1} - 1, v_i + 1` swaps two rows.

use std::fmt;
use std::str::FromStr;

use crate::alphabet::{Completes, VirtualAlphabet};
use crate::arith::{CommRing, Matrix, Rational};
use crate::error::{Error, Result};

/// Weakly decreasing sequence of nonnegative parts. Trailing zeros are
/// dropped on construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// `m^k`: `k` parts equal to `m`.
    pub fn rectangle(m: usize, k: usize) -> Self {
        Partition::new(vec![m; k]).expect("rectangles are partitions")
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Transposed Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (0..width)
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    pub fn to_vector(&self) -> IntVector {
        IntVector(self.parts.iter().map(|&p| p as i64).collect())
    }
}

/// Unconstrained integer index vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntVector(pub Vec<i64>);

impl IntVector {
    pub fn new(entries: Vec<i64>) -> Self {
        IntVector(entries)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `[head, tail...]`
    pub fn prepend(head: i64, tail: &IntVector) -> IntVector {
        let mut v = Vec::with_capacity(tail.len() + 1);
        v.push(head);
        v.extend_from_slice(&tail.0);
        IntVector(v)
    }

    /// Largest complete-function index the Jacobi–Trudi matrix reads.
    pub fn max_index(&self) -> i64 {
        let l = self.0.len() as i64;
        self.0
            .iter()
            .enumerate()
            .map(|(i, &v)| v + (l - 1) - i as i64)
            .max()
            .unwrap_or(0)
    }
}

impl From<&Partition> for IntVector {
    fn from(p: &Partition) -> Self {
        p.to_vector()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for IntVector {
    type Err = Error;

    /// Comma-separated integers, e.g. `-1,3`. The empty string is the
    /// empty vector.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(IntVector::default());
        }
        let mut out = Vec::new();
        let mut at = 0;
        for item in s.split(',') {
            let t = item.trim();
            let lead = item.len() - item.trim_start().len();
            let ok = !t.is_empty()
                && t.strip_prefix('-').unwrap_or(t).chars().all(|c| c.is_ascii_digit())
                && t != "-";
            if !ok {
                return Err(Error::Parse {
                    pos: at + lead,
                    msg: format!("expected an integer, found {t:?}"),
                });
            }
            out.push(t.parse::<i64>().map_err(|e| Error::Parse {
                pos: at + lead,
                msg: e.to_string(),
            })?);
            at += item.len() + 1;
        }
        Ok(IntVector(out))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v: IntVector = s.parse()?;
        if v.0.iter().any(|&x| x < 0) {
            return Err(Error::InvalidArgument(format!("partition {s:?} has a negative part")));
        }
        Partition::new(v.0.iter().map(|&x| x as usize).collect())
    }
}

/// Transposes a Young diagram.
pub fn conjugate(p: &Partition) -> Partition {
    p.conjugate()
}

/// `det(h(v_i + j - i))` over any commutative ring. `h` must return zero
/// for negative indices and one at zero.
pub fn jacobi_trudi<R: CommRing>(v: &IntVector, h: impl Fn(i64) -> R) -> R {
    let l = v.len();
    if l == 0 {
        return R::one();
    }
    let m = Matrix::from_fn(l, l, |i, j| h(v.0[i] + j as i64 - i as i64));
    R::det(&m)
}

/// `S_v(V)` from a precomputed table of complete functions.
pub fn schur_from(v: &IntVector, h: &Completes) -> Rational {
    jacobi_trudi(v, |j| h.get(j))
}

/// `S_v(V)` for an arbitrary integer index vector.
pub fn schur(v: &IntVector, alphabet: &VirtualAlphabet) -> Rational {
    let need = (v.max_index() + 1).max(1) as usize;
    schur_from(v, &Completes::new(alphabet, need))
}

/// `S_λ(V)` for a partition.
pub fn schur_partition(p: &Partition, alphabet: &VirtualAlphabet) -> Rational {
    schur(&p.to_vector(), alphabet)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, LaurentPoly};
    use num_traits::{One, Zero};

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn iv(v: &[i64]) -> IntVector {
        IntVector(v.to_vec())
    }

    fn a12() -> VirtualAlphabet {
        VirtualAlphabet::from_ints(&[1, 2], &[])
    }

    /// Brute-force 2×2 oracle from explicit complete functions of {1,2}:
    /// S_j = 2^{j+1} - 1.
    fn h12(j: i64) -> Rational {
        if j < 0 {
            Rational::zero()
        } else {
            rat((1i64 << (j + 1)) - 1, 1)
        }
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(&part(&[3, 1])), part(&[2, 1, 1]));
        assert_eq!(conjugate(&part(&[4, 4])), part(&[2, 2, 2, 2]));
        assert_eq!(conjugate(&Partition::default()), Partition::default());
        assert_eq!(part(&[2, 1, 0, 0]), part(&[2, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn jacobi_trudi_examples() {
        assert_eq!(jacobi_trudi(&iv(&[5]), h12), rat(63, 1));
        // S_3^2 - S_4 S_2 = 225 - 217
        assert_eq!(jacobi_trudi(&iv(&[3, 3]), h12), h12(3) * h12(3) - h12(4) * h12(2));
        assert_eq!(jacobi_trudi(&iv(&[3, 3]), h12), rat(8, 1));
        assert_eq!(jacobi_trudi(&iv(&[2, 2]), h12), rat(4, 1));
        assert_eq!(jacobi_trudi(&IntVector::default(), h12), Rational::one());
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur(&iv(&[4, 3]), &a12()), rat(24, 1));
        assert_eq!(schur(&iv(&[2, 2, 2]), &a12()), Rational::zero());
        // det [[S_{-1}, S_0], [S_2, S_3]] = 0*15 - 1*7
        assert_eq!(schur(&iv(&[-1, 3]), &a12()), h12(-1) * h12(3) - h12(0) * h12(2));
        assert_eq!(schur(&iv(&[-1, 3]), &a12()), rat(-7, 1));
    }

    #[test]
    fn laurent_jacobi_trudi() {
        // S_22(A + 1/z) for A = {1,2} is 4 + 6/z + 7/z^2
        let h = |j: i64| crate::alphabet::complete_with_letter(&a12(), j, crate::alphabet::Sign::Plus);
        let got: LaurentPoly = jacobi_trudi(&iv(&[2, 2]), h);
        let want = LaurentPoly::from_terms([(0, rat(4, 1)), (-1, rat(6, 1)), (-2, rat(7, 1))]);
        assert_eq!(got, want);
    }

    #[test]
    fn parse_vectors() {
        assert_eq!("4,3".parse::<IntVector>().unwrap(), iv(&[4, 3]));
        assert_eq!("-1, 3".parse::<IntVector>().unwrap(), iv(&[-1, 3]));
        assert!("1,,2".parse::<IntVector>().is_err());
        assert!("1,-".parse::<IntVector>().is_err());
        assert!("3,-1".parse::<Partition>().is_err());
        assert_eq!("3,1,0".parse::<Partition>().unwrap(), part(&[3, 1]));
    }

    #[test]
    fn max_index_covers_matrix() {
        assert_eq!(iv(&[2, 3, 1]).max_index(), 4);
        assert_eq!(IntVector::default().max_index(), 0);
    }
}

//! The alphabets `A^0, A^1, ...` produced by dividing `1` by `sigma(A)`,
//! and Wronskians of complete functions over them.
//!
//! The Wronskian determinant is sometimes written with subscripts
//! `S_{k_j - i}(A_i)`; here `A_i` and `A^i` denote the same alphabet, the
//! `i`-th remainder of that division. Each `A^i` exists only through its
//! series `sigma(A^i)`, never as a list of letters.

use std::str::FromStr;

use num_traits::{One, Zero};

use crate::alphabet::{Completes, VirtualAlphabet};
use crate::arith::{determinant_gauss, Matrix, Rational, Series};
use crate::closedform::remainder_one_by_sigma;
use crate::error::{Error, Result};
use crate::euclid::divide_iterate;
use crate::schur::{schur_from, IntVector, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceSource {
    ClosedForm,
    Division,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlphabetSequence {
    pub base: VirtualAlphabet,
    /// `sigma(A^i)` for `i = 0..=kmax`.
    pub entries: Vec<Series>,
    pub source: SequenceSource,
}

impl AlphabetSequence {
    /// True if both sequences have the same length and agree on the common
    /// order of every entry.
    pub fn agrees_with(&self, other: &AlphabetSequence) -> bool {
        self.entries.len() == other.entries.len()
            && self.entries.iter().zip(&other.entries).all(|(a, b)| a.agrees_with(b))
    }
}

/// `sigma(A^i)`, `i = 0..=kmax`, from the Schur ratio closed form.
pub fn alphabet_sequence(a: &VirtualAlphabet, kmax: usize, order: usize) -> Result<AlphabetSequence> {
    let needed = 2 * kmax + 2;
    if order < needed {
        return Err(Error::InsufficientPrecision { needed, available: order });
    }
    let entries = (0..=kmax)
        .map(|i| remainder_one_by_sigma(a, i, order))
        .collect::<Result<Vec<_>>>()?;
    Ok(AlphabetSequence {
        base: a.clone(),
        entries,
        source: SequenceSource::ClosedForm,
    })
}

/// The same sequence produced by actually dividing; entry `i` has order
/// `order - 2i`.
pub fn alphabet_sequence_by_division(
    a: &VirtualAlphabet,
    kmax: usize,
    order: usize,
) -> Result<AlphabetSequence> {
    let trace = divide_iterate(&VirtualAlphabet::zero(), a, kmax, order)?;
    if let Some(t) = &trace.terminated {
        return Err(Error::Terminated { step: t.step });
    }
    let mut entries = vec![trace.divisor];
    entries.extend(trace.steps.into_iter().map(|s| s.remainder));
    Ok(AlphabetSequence {
        base: a.clone(),
        entries,
        source: SequenceSource::Division,
    })
}

/// Computes both sequences and reports whether they agree.
pub fn cross_check_sequences(a: &VirtualAlphabet, kmax: usize, order: usize) -> Result<bool> {
    let closed = alphabet_sequence(a, kmax, order)?;
    let divided = alphabet_sequence_by_division(a, kmax, order)?;
    Ok(closed.agrees_with(&divided))
}

/// `K = [k_1, ..., k_n]`, `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WronskianQuery {
    k: Vec<usize>,
}

impl WronskianQuery {
    pub fn new(k: Vec<usize>) -> Result<Self> {
        if k.is_empty() {
            return Err(Error::InvalidArgument("a Wronskian needs at least one function".into()));
        }
        Ok(WronskianQuery { k })
    }

    pub fn ks(&self) -> &[usize] {
        &self.k
    }

    pub fn n(&self) -> usize {
        self.k.len()
    }

    /// `[k_n, k_{n-1} + 1, ..., k_1 + n - 1]`: `K` read backwards plus
    /// `[0, 1, ..., n-1]`. Its Jacobi–Trudi rows are
    /// `(S_{k_j}, ..., S_{k_j+n-1})`, so equal entries of `K` give equal rows.
    pub fn shifted_index(&self) -> IntVector {
        IntVector(self.k.iter().rev().enumerate().map(|(i, &k)| (k + i) as i64).collect())
    }
}

impl FromStr for WronskianQuery {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v: IntVector = s.parse()?;
        if v.0.iter().any(|&x| x < 0) {
            return Err(Error::InvalidArgument(format!("Wronskian indices must be nonnegative: {s:?}")));
        }
        WronskianQuery::new(v.0.iter().map(|&x| x as usize).collect())
    }
}

/// `det |S_{k_j - i}(A^i)|` read off a precomputed sequence.
pub fn wronskian_det_from(q: &WronskianQuery, seq: &AlphabetSequence) -> Result<Rational> {
    let n = q.n();
    if seq.entries.len() < n {
        return Err(Error::InvalidArgument(format!(
            "sequence has {} alphabets, need {n}",
            seq.entries.len()
        )));
    }
    for (i, e) in seq.entries.iter().enumerate().take(n) {
        let top = q.k.iter().map(|&k| k.saturating_sub(i)).max().unwrap_or(0);
        if top >= e.order() {
            return Err(Error::InsufficientPrecision { needed: top + 1, available: e.order() });
        }
    }
    let m = Matrix::from_fn(n, n, |i, j| match q.k[j].checked_sub(i) {
        Some(d) => seq.entries[i].coeff(d).clone(),
        None => Rational::zero(),
    });
    Ok(determinant_gauss(&m))
}

pub fn wronskian_det(q: &WronskianQuery, a: &VirtualAlphabet, order: usize) -> Result<Rational> {
    let top = q.k.iter().copied().max().unwrap_or(0);
    if order <= top {
        return Err(Error::InsufficientPrecision { needed: top + 1, available: order });
    }
    let n = q.n();
    let seq = alphabet_sequence(a, n - 1, order.max(2 * (n - 1) + 2))?;
    wronskian_det_from(q, &seq)
}

/// `S_{rev(K) + [0..n-1]}(A) / S_{(n-1)^n}(A)`; for `K = [1, 2]` this is
/// `S_{22} / S_{11}`.
pub fn wronskian_closed(q: &WronskianQuery, a: &VirtualAlphabet) -> Result<Rational> {
    let v = q.shifted_index();
    let n = q.n();
    let rect = Partition::rectangle(n - 1, n);
    let len = (v.max_index().max(2 * n as i64) + 1) as usize;
    let h = Completes::new(a, len);
    wronskian_closed_from(q, &h)
        .ok_or_else(|| Error::non_generic(rect))
}

/// Closed form from a complete-function table; `None` if the
/// denominator vanishes.
pub fn wronskian_closed_from(q: &WronskianQuery, h: &Completes) -> Option<Rational> {
    let n = q.n();
    let den = schur_from(&Partition::rectangle(n - 1, n).to_vector(), h);
    if den.is_zero() {
        return None;
    }
    Some(schur_from(&q.shifted_index(), h) / den)
}

/// Raw Wronskian with entries `S_{k_j, i^i}(A)` and the row normalizers
/// `prod_{i=1}^{n-1} S_{i^{i+1}}(A)`.
pub fn wronskian_raw(q: &WronskianQuery, a: &VirtualAlphabet) -> (Rational, Rational) {
    let n = q.n();
    let top = q.k.iter().copied().max().unwrap_or(0) + 2 * n + 1;
    let h = Completes::new(a, top);
    let entry = |i: usize, k: usize| {
        schur_from(&IntVector::prepend(k as i64, &IntVector(vec![i as i64; i])), &h)
    };
    let m = Matrix::from_fn(n, n, |i, j| entry(i, q.k[j]));
    let norm = (1..n).fold(Rational::one(), |acc, i| {
        acc * schur_from(&Partition::rectangle(i, i + 1).to_vector(), &h)
    });
    (determinant_gauss(&m), norm)
}

/// Both sides of the four-minor factorization.
#[derive(Debug, Clone, PartialEq)]
pub struct BazinReport {
    pub k: [usize; 4],
    /// Determinant of the 4×4 matrix of minors `[012x], [013x], [034x], [345x]`.
    pub lhs: Rational,
    /// `[0123] [0134] [0345] [αβγδ]`
    pub rhs: Rational,
    pub equal: bool,
    /// Minors agree with their Schur-function names:
    /// `[012x] = S_x`, `[013x] = S_{x,1}`, `[034x] = S_{x,2,2}`,
    /// `[345x] = S_{x,3,3,3}`, `[0134] = S_{11}`, `[0345] = S_{222}`.
    pub minors_identified: bool,
}

/// Rows `r = 0..4` of completes: fixed columns `0..=5` hold `S_{c-r}`; the
/// column for `x = k_j` holds `S_{x + 3 - r}`.
pub fn bazin_check(a: &VirtualAlphabet, k: [usize; 4]) -> BazinReport {
    let top = k.iter().copied().max().unwrap_or(0) + 8;
    let h = Completes::new(a, top);
    let col_shift = |c: usize| -> i64 {
        if c < 6 {
            c as i64
        } else {
            k[c - 6] as i64 + 3
        }
    };
    let big = Matrix::from_fn(4, 10, |r, c| h.get(col_shift(c) - r as i64));
    let minor = |cols: [usize; 4]| determinant_gauss(&big.select_cols(&cols));

    let fixed: [[usize; 3]; 4] = [[0, 1, 2], [0, 1, 3], [0, 3, 4], [3, 4, 5]];
    let minors = Matrix::from_fn(4, 4, |i, j| {
        let [a0, a1, a2] = fixed[i];
        minor([a0, a1, a2, 6 + j])
    });
    let lhs = determinant_gauss(&minors);
    let rhs = minor([0, 1, 2, 3]) * minor([0, 1, 3, 4]) * minor([0, 3, 4, 5]) * minor([6, 7, 8, 9]);

    let s = |v: Vec<i64>| schur_from(&IntVector(v), &h);
    let minors_identified = (0..4).all(|j| {
        let x = k[j] as i64;
        *minors.get(0, j) == s(vec![x])
            && *minors.get(1, j) == s(vec![x, 1])
            && *minors.get(2, j) == s(vec![x, 2, 2])
            && *minors.get(3, j) == s(vec![x, 3, 3, 3])
    }) && minor([0, 1, 2, 3]).is_one()
        && minor([0, 1, 3, 4]) == s(vec![1, 1])
        && minor([0, 3, 4, 5]) == s(vec![2, 2, 2]);

    BazinReport {
        k,
        equal: lhs == rhs,
        lhs,
        rhs,
        minors_identified,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn a12() -> VirtualAlphabet {
        VirtualAlphabet::from_ints(&[1, 2], &[])
    }

    fn q(k: &[usize]) -> WronskianQuery {
        WronskianQuery::new(k.to_vec()).unwrap()
    }

    #[test]
    fn sequence_examples() {
        let s = alphabet_sequence(&a12(), 1, 6).unwrap();
        assert_eq!(s.entries[1], Series::from_ints(&[1, 3, 7, 15, 31, 63]));
        let d = alphabet_sequence_by_division(&a12(), 1, 6).unwrap();
        assert_eq!(d.entries[1].order(), 4);
        assert!(s.agrees_with(&d));
        assert_eq!(alphabet_sequence(&a12(), 0, 4).unwrap().entries.len(), 1);
        assert_eq!(
            alphabet_sequence(&a12(), 2, 8).unwrap_err(),
            Error::non_generic(Partition::rectangle(2, 3))
        );
        assert_eq!(alphabet_sequence_by_division(&a12(), 2, 8).unwrap_err(), Error::Terminated { step: 1 });
    }

    #[test]
    fn det_examples() {
        assert_eq!(wronskian_det(&q(&[3]), &a12(), 6).unwrap(), rat(15, 1));
        assert_eq!(wronskian_det(&q(&[1, 2]), &a12(), 6).unwrap(), rat(2, 1));
        assert_eq!(wronskian_det(&q(&[0, 0]), &a12(), 6).unwrap(), rat(0, 1));
    }

    #[test]
    fn closed_examples() {
        assert_eq!(wronskian_closed(&q(&[1, 2]), &a12()).unwrap(), rat(2, 1));
        assert_eq!(wronskian_closed(&q(&[4]), &a12()).unwrap(), rat(31, 1));
        // duplicate entries: equal columns on one side, equal rows on the other
        assert_eq!(wronskian_closed(&q(&[2, 2]), &a12()).unwrap(), rat(0, 1));
        let s32 = crate::schur::schur(&IntVector(vec![3, 2]), &a12());
        assert_eq!(wronskian_closed(&q(&[1, 3]), &a12()).unwrap(), &s32 / rat(2, 1));
        assert_eq!(wronskian_det(&q(&[1, 3]), &a12(), 6).unwrap(), &s32 / rat(2, 1));
        assert_eq!(
            wronskian_det(&q(&[2, 2]), &a12(), 6).unwrap(),
            wronskian_closed(&q(&[2, 2]), &a12()).unwrap()
        );
        assert!(matches!(wronskian_closed(&q(&[1, 2, 3]), &a12()), Err(Error::NonGeneric { .. })));
    }

    #[test]
    fn query_parsing() {
        assert_eq!("1,2".parse::<WronskianQuery>().unwrap().ks(), &[1, 2]);
        assert!("".parse::<WronskianQuery>().is_err());
        assert!("1,-2".parse::<WronskianQuery>().is_err());
        assert_eq!(q(&[1, 2, 0]).shifted_index(), IntVector(vec![0, 3, 3]));
    }

    #[test]
    fn bazin_degenerate_columns() {
        let r = bazin_check(&VirtualAlphabet::from_ints(&[1, 2, 3, 4], &[]), [0, 1, 2, 3]);
        assert!(r.equal, "{r:?}");
    }

    #[test]
    fn bazin_four_letters() {
        let r = bazin_check(&VirtualAlphabet::from_ints(&[1, 2, 3, 4], &[]), [4, 5, 6, 7]);
        assert!(r.equal, "{r:?}");
        assert!(!r.lhs.is_zero());
        assert!(r.minors_identified);
    }

    #[test]
    fn raw_rows_normalize() {
        let a = VirtualAlphabet::from_ints(&[1, 2, 3, 5, 7], &[]);
        let k = q(&[2, 5, 1, 4]);
        let (raw, norm) = wronskian_raw(&k, &a);
        assert_eq!(raw, wronskian_det(&k, &a, 10).unwrap() * norm);
    }
}

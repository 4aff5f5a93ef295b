//! Finite alphabets, formal differences `A - B`, and their complete
//! functions.
//!
//! `sigma(V, T)` is the generating series `prod_{b in minus}(1 - z b) /
//! prod_{a in plus}(1 - z a)` truncated to `T` coefficients; its
//! coefficients are the complete functions `S_j(V)`.

use std::fmt;

use num_traits::{One, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::arith::{format_rational, parse_rational_at, LaurentPoly, Rational, Series};
use crate::error::Result;

/// Finite multiset of rational letters, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Alphabet {
    letters: Vec<Rational>,
}

impl Alphabet {
    pub fn new(mut letters: Vec<Rational>) -> Self {
        letters.sort();
        Alphabet { letters }
    }

    pub fn empty() -> Self {
        Alphabet::default()
    }

    pub fn from_ints(letters: &[i64]) -> Self {
        Alphabet::new(letters.iter().map(|&a| Rational::from_integer(a.into())).collect())
    }

    pub fn letters(&self) -> &[Rational] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn union(&self, other: &Alphabet) -> Alphabet {
        Alphabet::new(self.letters.iter().chain(&other.letters).cloned().collect())
    }

    pub fn with_letter(&self, x: Rational) -> Alphabet {
        let mut letters = self.letters.clone();
        letters.push(x);
        Alphabet::new(letters)
    }
}

/// Formal difference `plus - minus` of two finite alphabets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct VirtualAlphabet {
    pub plus: Alphabet,
    pub minus: Alphabet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl VirtualAlphabet {
    pub fn new(plus: Alphabet, minus: Alphabet) -> Self {
        VirtualAlphabet { plus, minus }
    }

    /// The zero alphabet, `sigma = 1`.
    pub fn zero() -> Self {
        VirtualAlphabet::default()
    }

    pub fn plain(a: Alphabet) -> Self {
        VirtualAlphabet::new(a, Alphabet::empty())
    }

    pub fn from_ints(plus: &[i64], minus: &[i64]) -> Self {
        VirtualAlphabet::new(Alphabet::from_ints(plus), Alphabet::from_ints(minus))
    }

    /// `0 - V`
    pub fn negated(&self) -> Self {
        VirtualAlphabet::new(self.minus.clone(), self.plus.clone())
    }

    /// `self - other`
    pub fn difference(&self, other: &VirtualAlphabet) -> Self {
        VirtualAlphabet::new(self.plus.union(&other.minus), self.minus.union(&other.plus))
    }

    pub fn is_plain(&self) -> bool {
        self.minus.is_empty()
    }

    /// Adjoins one letter with the given sign.
    pub fn adjoin(&self, x: Rational, sign: Sign) -> Self {
        match sign {
            Sign::Plus => VirtualAlphabet::new(self.plus.with_letter(x), self.minus.clone()),
            Sign::Minus => VirtualAlphabet::new(self.plus.clone(), self.minus.with_letter(x)),
        }
    }
}

/// Parses `plusList(';'minusList)?`, each list comma-separated rationals
/// and possibly empty.
pub fn parse_alphabet(text: &str) -> Result<VirtualAlphabet> {
    let parse_list = |s: &str, offset: usize| -> Result<Alphabet> {
        if s.trim().is_empty() {
            return Ok(Alphabet::empty());
        }
        let mut letters = Vec::new();
        let mut at = offset;
        for item in s.split(',') {
            letters.push(parse_rational_at(item, at)?);
            at += item.len() + 1;
        }
        Ok(Alphabet::new(letters))
    };
    match text.split_once(';') {
        Some((p, m)) => Ok(VirtualAlphabet::new(parse_list(p, 0)?, parse_list(m, p.len() + 1)?)),
        None => Ok(VirtualAlphabet::plain(parse_list(text, 0)?)),
    }
}

/// Generating series of `V` to `order` coefficients.
pub fn sigma(v: &VirtualAlphabet, order: usize) -> Series {
    assert!(order >= 1, "series order must be positive");
    let mut c = vec![Rational::zero(); order];
    c[0] = Rational::one();
    for b in v.minus.letters() {
        // multiply by (1 - b z), top index first
        for i in (1..order).rev() {
            let t = &c[i - 1] * b;
            c[i] -= t;
        }
    }
    for a in v.plus.letters() {
        // divide by (1 - a z)
        for i in 1..order {
            let t = &c[i - 1] * a;
            c[i] += t;
        }
    }
    Series::new(c)
}

/// Complete functions `S_0..S_{len-1}` of an alphabet, with `S_j = 0` for
/// negative `j`.
#[derive(Debug, Clone)]
pub struct Completes {
    values: Vec<Rational>,
}

impl Completes {
    pub fn new(v: &VirtualAlphabet, len: usize) -> Self {
        Completes {
            values: sigma(v, len.max(1)).into_coeffs(),
        }
    }

    pub fn from_series(s: &Series) -> Self {
        Completes {
            values: s.coeffs().to_vec(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Panics if `j` is beyond the table.
    pub fn get(&self, j: i64) -> Rational {
        if j < 0 {
            return Rational::zero();
        }
        self.values
            .get(j as usize)
            .cloned()
            .unwrap_or_else(|| panic!("complete function S_{j} beyond table of {}", self.values.len()))
    }
}

/// `S_j(V)`; zero for negative `j`.
pub fn complete(v: &VirtualAlphabet, j: i64) -> Rational {
    if j < 0 {
        return Rational::zero();
    }
    sigma(v, j as usize + 1).coeff(j as usize).clone()
}

/// `S_j(V -+ 1/z)` as a Laurent polynomial in `z`.
///
/// With a negative letter this is `S_j(V) - S_{j-1}(V) z^{-1}`; with a
/// positive one it is `sum_m S_{j-m}(V) z^{-m}`.
pub fn complete_with_letter(v: &VirtualAlphabet, j: i64, sign: Sign) -> LaurentPoly {
    if j < 0 {
        return LaurentPoly::zero();
    }
    let table = Completes::new(v, j as usize + 1);
    complete_with_letter_from(&table, j, sign)
}

pub(crate) fn complete_with_letter_from(table: &Completes, j: i64, sign: Sign) -> LaurentPoly {
    match sign {
        Sign::Minus => LaurentPoly::from_terms([(0, table.get(j)), (-1, -table.get(j - 1))]),
        Sign::Plus => LaurentPoly::from_terms((0..=j.max(-1)).map(|m| (-m, table.get(j - m)))),
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(format_rational).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Display for VirtualAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.minus.is_empty() {
            write!(f, "{}", self.plus)
        } else {
            write!(f, "{};{}", self.plus, self.minus)
        }
    }
}

impl Serialize for VirtualAlphabet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let strs = |a: &Alphabet| a.letters.iter().map(format_rational).collect::<Vec<_>>();
        let mut st = serializer.serialize_struct("VirtualAlphabet", 2)?;
        st.serialize_field("plus", &strs(&self.plus))?;
        st.serialize_field("minus", &strs(&self.minus))?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::error::Error;

    #[test]
    fn parse_examples() {
        assert_eq!(parse_alphabet("1,2").unwrap(), VirtualAlphabet::from_ints(&[1, 2], &[]));
        assert_eq!(parse_alphabet("1,2;1").unwrap(), VirtualAlphabet::from_ints(&[1, 2], &[1]));
        let v = parse_alphabet(";1/2").unwrap();
        assert!(v.plus.is_empty());
        assert_eq!(v.minus.letters(), &[rat(1, 2)]);
        assert_eq!(parse_alphabet("").unwrap(), VirtualAlphabet::zero());
        assert_eq!(parse_alphabet("2, 1").unwrap(), parse_alphabet("1,2").unwrap());
    }

    #[test]
    fn parse_error_positions() {
        match parse_alphabet("1,2;1,x") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("unexpected {other:?}"),
        }
        match parse_alphabet("1,,2") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(
            sigma(&VirtualAlphabet::from_ints(&[1, 2], &[]), 6),
            Series::from_ints(&[1, 3, 7, 15, 31, 63])
        );
        assert_eq!(sigma(&VirtualAlphabet::zero(), 4), Series::from_ints(&[1, 0, 0, 0]));
        assert_eq!(
            sigma(&VirtualAlphabet::from_ints(&[1, 2], &[1]), 4),
            Series::from_ints(&[1, 2, 4, 8])
        );
        assert_eq!(sigma(&VirtualAlphabet::from_ints(&[], &[1, 2]), 4), Series::from_ints(&[1, -3, 2, 0]));
    }

    #[test]
    fn complete_examples() {
        let v = VirtualAlphabet::from_ints(&[1, 2], &[]);
        assert_eq!(complete(&v, 3), rat(15, 1));
        assert_eq!(complete(&v, -2), rat(0, 1));
        assert_eq!(complete(&v, 0), rat(1, 1));
    }

    #[test]
    fn complete_with_letter_examples() {
        let v = VirtualAlphabet::from_ints(&[1, 2], &[]);
        assert_eq!(
            complete_with_letter(&v, 3, Sign::Minus),
            LaurentPoly::from_terms([(0, rat(15, 1)), (-1, rat(-7, 1))])
        );
        assert_eq!(complete_with_letter(&v, 0, Sign::Minus), LaurentPoly::one());
        assert_eq!(
            complete_with_letter(&v, 1, Sign::Plus),
            LaurentPoly::from_terms([(0, rat(3, 1)), (-1, rat(1, 1))])
        );
        assert!(complete_with_letter(&v, -1, Sign::Plus).is_zero());
    }

    #[test]
    fn json_rendering() {
        let v = parse_alphabet("1/2,3;-1").unwrap();
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"plus":["1/2","3"],"minus":["-1"]}"#);
    }
}

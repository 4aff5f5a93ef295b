use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Exact rational scalar. `num_rational` keeps it normalized: positive
/// denominator, coprime parts, zero stored as `0/1`.
pub type Rational = BigRational;

/// Shorthand for `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Renders `-?digits(/digits)?`, omitting a unit denominator.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Parses `-?digits(/digits)?` (surrounding whitespace ignored).
pub fn parse_rational(text: &str) -> Result<Rational> {
    parse_rational_at(text, 0)
}

/// Like [`parse_rational`], reporting error positions relative to `offset`.
pub fn parse_rational_at(text: &str, offset: usize) -> Result<Rational> {
    let lead = text.len() - text.trim_start().len();
    let body = text.trim();
    let err = |pos: usize, msg: &str| Error::Parse {
        pos: offset + lead + pos,
        msg: msg.to_string(),
    };
    if body.is_empty() {
        return Err(err(0, "expected a rational"));
    }
    let (neg, rest, start) = match body.strip_prefix('-') {
        Some(r) => (true, r, 1),
        None => (false, body, 0),
    };
    let (num_s, den_s) = match rest.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (rest, None),
    };
    let digits = |s: &str, at: usize| -> Result<BigInt> {
        if s.is_empty() {
            return Err(err(at, "expected digits"));
        }
        if let Some(i) = s.find(|c: char| !c.is_ascii_digit()) {
            return Err(err(at + i, "unexpected character"));
        }
        Ok(s.parse::<BigInt>().expect("validated digits"))
    };
    let mut num = digits(num_s, start)?;
    if neg {
        num = -num;
    }
    let den = match den_s {
        Some(d) => {
            let at = start + num_s.len() + 1;
            let den = digits(d, at)?;
            if den.is_zero() {
                return Err(err(at, "zero denominator"));
            }
            den
        }
        None => BigInt::from(1),
    };
    Ok(Rational::new(num, den))
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalized_output() {
        assert_eq!(format_rational(&rat(16, 98)), "8/49");
        assert_eq!(format_rational(&rat(15, -7)), "-15/7");
        assert_eq!(format_rational(&rat(6, 2)), "3");
        assert_eq!(format_rational(&rat(0, 5)), "0");
    }

    #[test]
    fn parses_grammar() {
        assert_eq!(parse_rational("8/49").unwrap(), rat(8, 49));
        assert_eq!(parse_rational("-15/7").unwrap(), rat(-15, 7));
        assert_eq!(parse_rational(" 4/2 ").unwrap(), rat(2, 1));
        assert_eq!(parse_rational("-0").unwrap(), rat(0, 1));
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "+3", "1/", "/2", "1/0", "3x", "1.5", "--1", "1/-2"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} accepted");
        }
        match parse_rational_at("12a", 5) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 7),
            other => panic!("unexpected {other:?}"),
        }
    }
}

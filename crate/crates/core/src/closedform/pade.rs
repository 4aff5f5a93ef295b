use num_traits::Zero;

use crate::alphabet::{complete_with_letter_from, sigma, Completes, Sign, VirtualAlphabet};
use crate::arith::{DensePoly, LaurentPoly, Rational, Series};
use crate::error::{Error, Result};
use crate::schur::{jacobi_trudi, schur_from, IntVector, Partition};

/// `[k, k-1]` Padé approximant of `sigma(A)` from Laurent-valued Schur
/// functions.
#[derive(Debug, Clone, PartialEq)]
pub struct PadeApproximant {
    pub k: usize,
    /// Degree `<= k`, scaled so the denominator has constant term 1.
    pub numerator: DensePoly,
    /// Degree `<= k - 1`, constant term 1.
    pub denominator: DensePoly,
    /// Valuation of `sigma(A) - numerator / denominator` within `order`
    /// coefficients; equals `order` when no deviation was seen.
    pub contact_order: usize,
    /// First nonzero coefficient of the deviation, if seen.
    pub leading_deviation: Option<Rational>,
    /// Number of series coefficients the contact was measured on.
    pub order: usize,
    /// `(-1)^{k-1} z S_{k^k}(A + 1/z)`, before clearing.
    pub raw_numerator: LaurentPoly,
    /// `S_{(k+1)^{k-1}}(A - 1/z)`, before clearing.
    pub raw_denominator: LaurentPoly,
}

impl PadeApproximant {
    /// Expansion of `numerator / denominator` to `order` coefficients.
    pub fn expand(&self, order: usize) -> Series {
        Series::from_poly(&self.numerator, order)
            .div(&Series::from_poly(&self.denominator, order))
            .expect("denominator has constant term 1")
    }
}

struct LaurentForms {
    /// `z^{k-1} S_{(k+1)^{k-1}}(A - 1/z)`
    den: DensePoly,
    /// `(-1)^{k-1} z^k S_{k^k}(A + 1/z)`
    num: DensePoly,
    raw_den: LaurentPoly,
    raw_num: LaurentPoly,
}

fn laurent_forms(h: &Completes, k: usize) -> LaurentForms {
    let minus = |j: i64| complete_with_letter_from(h, j, Sign::Minus);
    let plus = |j: i64| complete_with_letter_from(h, j, Sign::Plus);
    let raw_den = jacobi_trudi(&Partition::rectangle(k + 1, k - 1).to_vector(), minus);
    let mut raw_num = jacobi_trudi(&Partition::rectangle(k, k).to_vector(), plus).shift(1);
    if k.is_multiple_of(2) {
        raw_num = -raw_num;
    }
    let shift = k as i64 - 1;
    LaurentForms {
        den: raw_den.shift(shift).to_dense().expect("denominator clears to a polynomial"),
        num: raw_num.shift(shift).to_dense().expect("numerator clears to a polynomial"),
        raw_den,
        raw_num,
    }
}

/// Padé approximant with contact measured on `4k + 4` coefficients.
pub fn pade(a: &VirtualAlphabet, k: usize) -> Result<PadeApproximant> {
    pade_to_order(a, k, 4 * k + 4)
}

pub fn pade_to_order(a: &VirtualAlphabet, k: usize, order: usize) -> Result<PadeApproximant> {
    if k == 0 {
        return Err(Error::InvalidArgument("Padé degree k must be at least 1".into()));
    }
    let h = Completes::new(a, 2 * k);
    let forms = laurent_forms(&h, k);
    let c0 = forms.den.coeff(0);
    if c0.is_zero() {
        // constant term is (-1)^{k-1} S_{k^{k-1}}(A)
        return Err(Error::non_generic(Partition::rectangle(k, k - 1)));
    }
    let inv = c0.recip();
    let numerator = forms.num.scale(&inv);
    let denominator = forms.den.scale(&inv);
    let sig = sigma(a, order);
    let approx = Series::from_poly(&numerator, order).div(&Series::from_poly(&denominator, order))?;
    let deviation = sig.sub(&approx);
    let contact_order = deviation.valuation().unwrap_or(order);
    let leading_deviation = deviation.valuation().map(|v| deviation.coeff(v).clone());
    Ok(PadeApproximant {
        k,
        numerator,
        denominator,
        contact_order,
        leading_deviation,
        order,
        raw_numerator: forms.raw_num,
        raw_denominator: forms.raw_den,
    })
}

/// Coefficient structure of `z^{k-1} S_{(k+1)^{k-1}}(A - 1/z) sigma(A)
/// + (-z)^k S_{k^k}(A + 1/z)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Eq9Report {
    pub k: usize,
    /// Coefficient `m` of the first product is `S_{m+1-k, (k+1)^{k-1}}(A)`
    /// for every known `m`.
    pub coefficient_law: bool,
    /// Coefficients `z^{k+1} .. z^{2k-1}` of the first product vanish.
    pub vanishing_band: bool,
    /// Coefficients `z^0 .. z^k` are `(-1)^{k-1} S_{k^{k-1}, j}(A)`.
    pub low_coefficients: bool,
    /// The sum is `z^{2k} S_{(k+1)^k}(A)` modulo higher terms.
    pub leading_term: bool,
}

impl Eq9Report {
    pub fn all(&self) -> bool {
        self.coefficient_law && self.vanishing_band && self.low_coefficients && self.leading_term
    }
}

pub fn eq9_check(a: &VirtualAlphabet, k: usize, order: usize) -> Result<Eq9Report> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    if order < 2 * k + 1 {
        return Err(Error::InsufficientPrecision { needed: 2 * k + 1, available: order });
    }
    let h = Completes::new(a, order + 2 * k);
    let forms = laurent_forms(&h, k);
    let sig = Series::new((0..order as i64).map(|j| h.get(j)).collect());
    let first = sig.mul_poly(&forms.den);
    let ki = k as i64;
    let rect_tail = IntVector(vec![ki + 1; k - 1]);

    let coefficient_law = (0..order).all(|m| {
        let v = IntVector::prepend(m as i64 + 1 - ki, &rect_tail);
        first.coeff(m) == &schur_from(&v, &h)
    });
    let vanishing_band = (k + 1..2 * k).all(|m| first.coeff(m).is_zero());
    let sign = if k % 2 == 1 { Rational::from_integer(1.into()) } else { Rational::from_integer((-1).into()) };
    let low_coefficients = (0..=k).all(|j| {
        let mut v = vec![ki; k - 1];
        v.push(j as i64);
        first.coeff(j) == &(&sign * schur_from(&IntVector(v), &h))
    });
    // (-z)^k S_{k^k}(A + 1/z) = -(num) since num carries (-1)^{k-1} z^k
    let total = first.sub(&Series::from_poly(&forms.num, order));
    let rect = schur_from(&Partition::rectangle(k + 1, k).to_vector(), &h);
    let leading_term = (0..2 * k).all(|m| total.coeff(m).is_zero()) && total.coeff(2 * k) == &rect;
    Ok(Eq9Report {
        k,
        coefficient_law,
        vanishing_band,
        low_coefficients,
        leading_term,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::closedform::eq8_solve;

    fn a12() -> VirtualAlphabet {
        VirtualAlphabet::from_ints(&[1, 2], &[])
    }

    #[test]
    fn k1_on_two_letters() {
        let p = pade(&a12(), 1).unwrap();
        assert_eq!(p.numerator, DensePoly::new(vec![rat(1, 1), rat(3, 1)]));
        assert_eq!(p.denominator, DensePoly::new(vec![rat(1, 1)]));
        assert_eq!(p.contact_order, 2);
        assert_eq!(p.leading_deviation, Some(rat(7, 1)));
    }

    #[test]
    fn k2_on_two_letters() {
        let p = pade(&a12(), 2).unwrap();
        // (7 + 6z + 4z^2) / (7 - 15z), normalized by 7
        assert_eq!(p.numerator, DensePoly::new(vec![rat(1, 1), rat(6, 7), rat(4, 7)]));
        assert_eq!(p.denominator, DensePoly::new(vec![rat(1, 1), rat(-15, 7)]));
        assert_eq!(p.contact_order, 4);
        assert_eq!(p.leading_deviation, Some(rat(-8, 7)));
        assert_eq!(
            p.raw_denominator,
            LaurentPoly::from_terms([(0, rat(15, 1)), (-1, rat(-7, 1))])
        );
        // -(z)(4 + 6/z + 7/z^2)
        assert_eq!(
            p.raw_numerator,
            LaurentPoly::from_terms([(1, rat(-4, 1)), (0, rat(-6, 1)), (-1, rat(-7, 1))])
        );
        // deviation law: S_{33} over the constant term of z S_3(A - 1/z)
        assert_eq!(p.leading_deviation, Some(rat(8, 1) / rat(-7, 1)));
    }

    #[test]
    fn agrees_with_eq8_polynomials() {
        let a = VirtualAlphabet::from_ints(&[1, 2, 3, 5], &[]);
        for k in 1..=3 {
            let p = pade(&a, k).unwrap();
            let e = eq8_solve(&a, k, 2 * k + 2).unwrap();
            assert_eq!(p.numerator, e.subtrahend_poly);
            assert_eq!(p.denominator, e.quotient_poly);
            assert!(p.contact_order >= 2 * k);
        }
    }

    #[test]
    fn eq9_structure_on_two_letters() {
        assert!(eq9_check(&a12(), 2, 10).unwrap().all());
        assert!(eq9_check(&a12(), 1, 6).unwrap().all());
        assert!(eq9_check(&VirtualAlphabet::from_ints(&[1, -2, 3, 4], &[]), 3, 12).unwrap().all());
    }

    #[test]
    fn non_generic_denominator() {
        // S_{33}({1}) = 0 is the constant term at k = 3
        assert_eq!(
            pade(&VirtualAlphabet::from_ints(&[1], &[]), 3).unwrap_err(),
            Error::non_generic(Partition::rectangle(3, 2))
        );
    }
}

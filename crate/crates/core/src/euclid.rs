//! Euclidean division of unitary formal series.
//!
//! One step finds the unique `alpha`, `beta` with
//! `f_prev = (1 + alpha z) f_cur + beta z^2 f_next` and `f_next` unitary.
//! Each step consumes two coefficients of precision.

use num_traits::Zero;

use crate::alphabet::{sigma, VirtualAlphabet};
use crate::arith::{DensePoly, Rational, Series};
use crate::error::{Error, Result};

/// One division step: `f_{k-1} = (1 + alpha z) f_k + beta z^2 f_{k+1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct DivisionStep {
    pub k: usize,
    pub alpha: Rational,
    pub beta: Rational,
    /// `f_{k+1}`, unitary.
    pub remainder: Series,
}

#[derive(Debug, Clone, PartialEq)]
pub enum StepOutcome {
    Continue {
        alpha: Rational,
        beta: Rational,
        next: Series,
    },
    /// `beta` vanished: the remainder is zero to the known order.
    Terminated { alpha: Rational },
}

/// Records where a division stopped because `beta = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct Termination {
    pub step: usize,
    pub alpha: Rational,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DivisionTrace {
    /// `f_{-1}`
    pub dividend: Series,
    /// `f_0`
    pub divisor: Series,
    pub steps: Vec<DivisionStep>,
    pub terminated: Option<Termination>,
}

impl DivisionTrace {
    /// `f_k` for `k >= -1`, when it was produced.
    pub fn remainder(&self, k: isize) -> Option<&Series> {
        match k {
            -1 => Some(&self.dividend),
            0 => Some(&self.divisor),
            k if k > 0 => self.steps.get(k as usize - 1).map(|s| &s.remainder),
            _ => None,
        }
    }
}

/// Divides `f_prev` by `f_cur`.
pub fn divide_step(f_prev: &Series, f_cur: &Series) -> Result<StepOutcome> {
    let order = f_prev.order().min(f_cur.order());
    if order < 3 {
        return Err(Error::InsufficientPrecision { needed: 3, available: order });
    }
    if !f_prev.is_unitary() || !f_cur.is_unitary() {
        return Err(Error::InvalidArgument("division step needs unitary series".into()));
    }
    let alpha = f_prev.coeff(1) - f_cur.coeff(1);
    let quotient = DensePoly::new(vec![Rational::from_integer(1.into()), alpha.clone()]);
    let r = f_prev.truncate(order).sub(&f_cur.truncate(order).mul_poly(&quotient));
    debug_assert!(r.coeff(0).is_zero() && r.coeff(1).is_zero());
    let beta = r.coeff(2).clone();
    if beta.is_zero() {
        return Ok(StepOutcome::Terminated { alpha });
    }
    let next = r.shift_down(2)?.scale(&beta.recip());
    Ok(StepOutcome::Continue { alpha, beta, next })
}

/// Iterated division of `sigma(num)` by `sigma(den)` computed to `order`
/// coefficients.
pub fn divide_iterate(
    num: &VirtualAlphabet,
    den: &VirtualAlphabet,
    steps: usize,
    order: usize,
) -> Result<DivisionTrace> {
    divide_series(sigma(num, order), sigma(den, order), steps)
}

/// Iterated division of two given unitary series.
pub fn divide_series(dividend: Series, divisor: Series, steps: usize) -> Result<DivisionTrace> {
    let order = dividend.order().min(divisor.order());
    let needed = 2 * steps + 2;
    if order < needed {
        return Err(Error::InsufficientPrecision { needed, available: order });
    }
    let mut trace = DivisionTrace {
        dividend,
        divisor,
        steps: Vec::with_capacity(steps),
        terminated: None,
    };
    for k in 0..steps {
        let (prev, cur) = match k {
            0 => (&trace.dividend, &trace.divisor),
            1 => (&trace.divisor, &trace.steps[0].remainder),
            _ => (&trace.steps[k - 2].remainder, &trace.steps[k - 1].remainder),
        };
        match divide_step(prev, cur)? {
            StepOutcome::Continue { alpha, beta, next } => trace.steps.push(DivisionStep {
                k,
                alpha,
                beta,
                remainder: next,
            }),
            StepOutcome::Terminated { alpha } => {
                trace.terminated = Some(Termination { step: k, alpha });
                break;
            }
        }
    }
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn a12() -> VirtualAlphabet {
        VirtualAlphabet::from_ints(&[1, 2], &[])
    }

    fn f1() -> Series {
        // r = sigma - 1 - 3z = 7z^2 + 15z^3 + ..., divided by 7 z^2
        Series::new(vec![rat(1, 1), rat(15, 7), rat(31, 7), rat(9, 1), rat(127, 7), rat(255, 7)])
    }

    #[test]
    fn step_sigma_by_one() {
        match divide_step(&sigma(&a12(), 8), &Series::one(8)).unwrap() {
            StepOutcome::Continue { alpha, beta, next } => {
                assert_eq!(alpha, rat(3, 1));
                assert_eq!(beta, rat(7, 1));
                assert_eq!(next, f1());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn step_one_by_sigma() {
        match divide_step(&Series::one(8), &sigma(&a12(), 8)).unwrap() {
            StepOutcome::Continue { alpha, beta, next } => {
                assert_eq!(alpha, rat(-3, 1));
                assert_eq!(beta, rat(2, 1));
                assert_eq!(next, Series::from_ints(&[1, 3, 7, 15, 31, 63]));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn step_terminates_on_exhausted_alphabet() {
        let f2 = Series::from_ints(&[1, 3, 7, 15, 31, 63]);
        match divide_step(&f1(), &f2).unwrap() {
            StepOutcome::Terminated { alpha } => assert_eq!(alpha, rat(-6, 7)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn step_needs_three_coefficients() {
        assert_eq!(
            divide_step(&Series::from_ints(&[1, 1]), &Series::from_ints(&[1, 2, 3])),
            Err(Error::InsufficientPrecision { needed: 3, available: 2 })
        );
    }

    #[test]
    fn iterate_sigma_by_one() {
        let t = divide_iterate(&a12(), &VirtualAlphabet::zero(), 2, 10).unwrap();
        assert_eq!(t.steps.len(), 2);
        assert_eq!((t.steps[0].alpha.clone(), t.steps[0].beta.clone()), (rat(3, 1), rat(7, 1)));
        assert_eq!((t.steps[1].alpha.clone(), t.steps[1].beta.clone()), (rat(-15, 7), rat(8, 49)));
        assert_eq!(t.steps[1].remainder, Series::from_ints(&[1, 3, 7, 15, 31, 63]));
        assert_eq!(t.steps[0].remainder.order(), 8);
        assert_eq!(t.steps[1].remainder.order(), 6);
        assert!(t.terminated.is_none());
    }

    #[test]
    fn iterate_one_by_sigma_terminates() {
        let t = divide_iterate(&VirtualAlphabet::zero(), &a12(), 3, 12).unwrap();
        assert_eq!((t.steps[0].alpha.clone(), t.steps[0].beta.clone()), (rat(-3, 1), rat(2, 1)));
        assert_eq!(t.steps.len(), 1);
        assert_eq!(t.terminated, Some(Termination { step: 1, alpha: rat(0, 1) }));
    }

    #[test]
    fn identical_series_terminate_immediately() {
        let t = divide_iterate(&a12(), &a12(), 1, 6).unwrap();
        assert!(t.steps.is_empty());
        assert_eq!(t.terminated, Some(Termination { step: 0, alpha: rat(0, 1) }));
    }

    #[test]
    fn iterate_checks_precision() {
        assert_eq!(
            divide_iterate(&a12(), &VirtualAlphabet::zero(), 4, 9).unwrap_err(),
            Error::InsufficientPrecision { needed: 10, available: 9 }
        );
    }
}

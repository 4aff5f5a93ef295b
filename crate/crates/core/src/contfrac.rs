//! J-fraction expansion of `(1/z) sigma_{1/z}(A)`:
//!
//! ```text
//! 1 / (z + s1_0 + s2_0 / (z + s1_1 + s2_1 / (z + s1_2 + ...)))
//! ```
//!
//! with `(s1_0, s2_0) = (S_1, S_2)(0 - A^0)` and
//! `(s1_k, s2_k) = (S_1, S_2)(A^{k-1} - A^k)`. The variable change
//! `t = 1/z` is confined to this module.

use num_traits::{One, Zero};

use crate::alphabet::{sigma, VirtualAlphabet};
use crate::arith::{DensePoly, Rational, Series};
use crate::closedform::remainder_one_by_sigma;
use crate::error::{Error, Result};
use crate::euclid::divide_iterate;

#[derive(Debug, Clone, PartialEq)]
pub struct CFLevel {
    pub k: usize,
    pub s1: Rational,
    pub s2: Rational,
}

impl CFLevel {
    /// A level with `s2 = 0` ends the fraction.
    pub fn is_final(&self) -> bool {
        self.s2.is_zero()
    }
}

/// `numerator / denominator` in `z`, as produced by the convergent
/// recurrence (not reduced).
#[derive(Debug, Clone, PartialEq)]
pub struct RationalFunction {
    pub numerator: DensePoly,
    pub denominator: DensePoly,
}

impl RationalFunction {
    /// Exact equality as rational functions (cross-multiplication).
    pub fn same_function(&self, other: &RationalFunction) -> bool {
        self.numerator.clone() * other.denominator.clone()
            == other.numerator.clone() * self.denominator.clone()
    }
}

fn first_two(s: &Series) -> (Rational, Rational) {
    (s.coeff(1).clone(), s.coeff(2).clone())
}

/// Levels `0..=depth`, stopping early at the first level with `s2 = 0`.
pub fn cf_levels(a: &VirtualAlphabet, depth: usize, order: usize) -> Result<Vec<CFLevel>> {
    let needed = 2 * depth + 4;
    if order < needed {
        return Err(Error::InsufficientPrecision { needed, available: order });
    }
    let (s1, s2) = first_two(&sigma(&a.negated(), 3));
    let mut levels = vec![CFLevel { k: 0, s1, s2 }];
    let mut prev = sigma(a, order);
    for k in 1..=depth {
        if levels[k - 1].is_final() {
            break;
        }
        let cur = remainder_one_by_sigma(a, k, order)?;
        let (s1, s2) = first_two(&prev.div(&cur)?);
        levels.push(CFLevel { k, s1, s2 });
        prev = cur;
    }
    Ok(levels)
}

/// Convergent using levels `0..=depth`; the `s2` of the deepest level
/// is dropped, so depth 0 is `1 / (z + s1_0)`.
pub fn cf_convergent(levels: &[CFLevel], depth: usize) -> Result<RationalFunction> {
    if depth >= levels.len() {
        return Err(Error::InvalidArgument(format!(
            "depth {depth} needs {} levels, have {}",
            depth + 1,
            levels.len()
        )));
    }
    let partial = |k: usize| DensePoly::linear_monic(levels[k].s1.clone());
    // tail value p / q, starting from the deepest partial denominator
    let mut p = partial(depth);
    let mut q = DensePoly::one();
    for k in (0..depth).rev() {
        let next_p = partial(k) * p.clone() + q.scale(&levels[k].s2);
        q = p;
        p = next_p;
    }
    Ok(RationalFunction {
        numerator: q,
        denominator: p,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct CFReport {
    pub depth: usize,
    pub levels: Vec<CFLevel>,
    pub convergent: RationalFunction,
    /// Number of coefficients `t^1, t^2, ...` on which the convergent
    /// agrees with `t sigma_t(A)` before the first mismatch.
    pub matched_terms: usize,
    /// True if no mismatch was seen among the compared coefficients.
    pub exact_to_order: bool,
    /// `s1, s2` of every level equal `alpha_k, beta_k` of the division of
    /// `1` by `sigma(A)` (the terminating step contributes its `alpha`
    /// and `beta = 0`).
    pub levels_match_division: bool,
}

/// Expands the depth-`d` convergent in `t = 1/z` and compares it with
/// `t sigma_t(A)`; also re-derives the levels from the division trace.
/// If the fraction terminates before `depth`, the final level is used.
pub fn cf_verify(a: &VirtualAlphabet, depth: usize, order: usize) -> Result<CFReport> {
    let levels = cf_levels(a, depth, order)?;
    let used = depth.min(levels.len() - 1);
    let convergent = cf_convergent(&levels, used)?;

    // denominator is monic of degree used + 1
    let d = convergent.denominator.degree().expect("nonzero denominator");
    let num_t = convergent.numerator.reversed(d);
    let den_t = convergent.denominator.reversed(d);
    let expanded = Series::from_poly(&num_t, order).div(&Series::from_poly(&den_t, order))?;
    let target = sigma(a, order - 1).shift_up(1);
    let mismatch = (0..order).find(|&i| expanded.coeff(i) != target.coeff(i));
    let (matched_terms, exact_to_order) = match mismatch {
        Some(i) => (i.saturating_sub(1), false),
        None => (order - 1, true),
    };

    let trace = divide_iterate(&VirtualAlphabet::zero(), a, levels.len(), order.max(2 * levels.len() + 2))?;
    let levels_match_division = levels.iter().all(|l| {
        if let Some(step) = trace.steps.get(l.k) {
            step.alpha == l.s1 && step.beta == l.s2
        } else {
            match &trace.terminated {
                Some(t) => t.step == l.k && t.alpha == l.s1 && l.s2.is_zero(),
                None => false,
            }
        }
    });

    Ok(CFReport {
        depth: used,
        levels,
        convergent,
        matched_terms,
        exact_to_order,
        levels_match_division,
    })
}

/// `(1/z) sigma_{1/z}(A) = z^{N-1} / prod (z - a)` for a plain alphabet
/// of `N >= 1` letters.
pub fn exact_generating_function(a: &VirtualAlphabet) -> Result<RationalFunction> {
    if !a.is_plain() || a.plus.is_empty() {
        return Err(Error::InvalidArgument("need a nonempty plain alphabet".into()));
    }
    let n = a.plus.len();
    let denominator = a
        .plus
        .letters()
        .iter()
        .fold(DensePoly::one(), |acc, x| acc * DensePoly::linear_monic(-x.clone()));
    Ok(RationalFunction {
        numerator: DensePoly::monomial(n - 1, Rational::one()),
        denominator,
    })
}

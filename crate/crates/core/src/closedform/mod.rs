//! Closed forms for the division data: Schur-function remainders, the
//! merged linear system, the Padé approximant and the low-order
//! identities.

mod eq8;
mod lowk;
mod pade;

pub use eq8::{eq8_solve, Eq8Solution};
pub use lowk::{low_k_identities, IdentityCheck, IdentityOutcome, LowKReport};
pub use pade::{eq9_check, pade, pade_to_order, Eq9Report, PadeApproximant};

use num_traits::Zero;

use crate::alphabet::{sigma, Completes, VirtualAlphabet};
use crate::arith::Series;
use crate::error::{Error, Result};
use crate::schur::{schur_from, IntVector, Partition};

/// Ratio series `sum_i z^i S_{[head + i, tail]} / S_{denominator}` to
/// `order` coefficients.
fn schur_ratio_series(
    h: &Completes,
    head: i64,
    tail: &IntVector,
    denominator: &Partition,
    order: usize,
) -> Result<Series> {
    let den = schur_from(&denominator.to_vector(), h);
    if den.is_zero() {
        return Err(Error::non_generic(denominator.clone()));
    }
    let inv = den.recip();
    Ok(Series::new(
        (0..order as i64)
            .map(|i| schur_from(&IntVector::prepend(head + i, tail), h) * &inv)
            .collect(),
    ))
}

fn table_for(a: &VirtualAlphabet, head: i64, tail_len: usize, order: usize) -> Completes {
    // the first row reaches head + order - 1 + tail_len
    Completes::new(a, (head as usize) + order + tail_len)
}

/// `k`-th remainder of dividing `sigma(A)` by `1`:
/// `sum_i z^i S_{k+1+i, (k+1)^{k-1}}(A) / S_{(k+1)^k}(A)`.
pub fn remainder_sigma_by_one(a: &VirtualAlphabet, k: usize, order: usize) -> Result<Series> {
    if k == 0 {
        return Err(Error::InvalidArgument("remainder index must be at least 1".into()));
    }
    if order == 0 {
        return Err(Error::InvalidArgument("series order must be positive".into()));
    }
    let head = k as i64 + 1;
    let tail = IntVector(vec![head; k - 1]);
    let h = table_for(a, head, k - 1, order);
    schur_ratio_series(&h, head, &tail, &Partition::rectangle(k + 1, k), order)
}

/// `k`-th remainder of dividing `sigma(A)` by `sigma(B)`: the remainder
/// for `A - B` divided by one, multiplied back by `sigma(B)`.
pub fn remainder_sigma_by_sigma(
    a: &VirtualAlphabet,
    b: &VirtualAlphabet,
    k: usize,
    order: usize,
) -> Result<Series> {
    let quotient = remainder_sigma_by_one(&a.difference(b), k, order)?;
    Ok(sigma(b, order).mul(&quotient))
}

/// `sigma(A^k)`, the `k`-th remainder of dividing `1` by `sigma(A)`:
/// `sum_i z^i S_{k+i, k^k}(A) / S_{k^{k+1}}(A)`.
pub fn remainder_one_by_sigma(a: &VirtualAlphabet, k: usize, order: usize) -> Result<Series> {
    if order == 0 {
        return Err(Error::InvalidArgument("series order must be positive".into()));
    }
    if k == 0 {
        return Ok(sigma(a, order));
    }
    let head = k as i64;
    let tail = IntVector(vec![head; k]);
    let h = table_for(a, head, k, order);
    schur_ratio_series(&h, head, &tail, &Partition::rectangle(k, k + 1), order)
}

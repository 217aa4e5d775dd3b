//! Enumeration-backed ground truth.
//!
//! Nothing here touches the closed forms in `counting` or the series in
//! `series`; counts come from walking every partition of `n`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partitions::{enumerate, Partition};

/// Default enumeration cap; `p(35) = 14883`.
pub const DEFAULT_BUDGET: u64 = 35;

/// Number of partitions of `n` satisfying `pred`, by exhaustive enumeration.
///
/// Negative `n` has no partitions. Fails with [`Error::BudgetExceeded`]
/// when `n > cap`.
pub fn oracle_count(n: i64, cap: u64, pred: impl Fn(&Partition) -> bool) -> Result<BigInt> {
    if n < 0 {
        return Ok(BigInt::zero());
    }
    if n as u64 > cap {
        return Err(Error::BudgetExceeded { n, cap });
    }
    Ok(enumerate(n as u64).filter(|p| pred(p)).count().into())
}

/// `mex_j(λ) - j` is defined and odd.
pub fn mex_j_minus_j_odd(p: &Partition, j: u64) -> bool {
    p.mex_j(j).map(|m| (m - j) % 2 == 1).unwrap_or(false)
}

/// Frobenius symbol has no 0 in either row.
pub fn frobenius_no_zero(p: &Partition) -> bool {
    !p.to_frobenius().contains(0)
}

/// Frobenius symbol has no `j` in its top row.
pub fn frobenius_top_lacks(p: &Partition, j: u64) -> bool {
    !p.to_frobenius().top_contains(j)
}

/// Generating-function count minus combinatorial count of crank `m` at
/// `n = 1`. The series treat `(1)` as contributing `+1` at cranks `±1` and
/// `-1` at crank 0; the combinatorial crank of `(1)` is `-1`.
pub fn n1_crank_offset(m: i64) -> i64 {
    match m {
        1 => 1,
        0 => -1,
        _ => 0,
    }
}

/// The same offset summed over all cranks `>= j`.
pub fn n1_crank_geq_offset(j: u64) -> i64 {
    i64::from(j == 1)
}

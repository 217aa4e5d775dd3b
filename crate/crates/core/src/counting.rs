//! Closed-form counts expressed through the partition numbers.
//!
//! Every signed sum runs until its `p` argument drops below zero, using
//! `p(n) = 0` for `n < 0`. Values are defined by the generating functions,
//! which differ from the combinatorial crank at `n = 1` only: the series
//! assign `M(0,1) = -1` and `M(1,1) = M(-1,1) = 1`, whereas the single
//! partition `(1)` has crank `-1`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::partitions::{p_of, q_distinct};

/// The `k`th triangular number `t_k = 1 + ... + k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangular {
    k: u64,
    value: u64,
}

impl Triangular {
    pub fn new(k: u64) -> Self {
        Self {
            k,
            value: k * (k + 1) / 2,
        }
    }

    pub fn index(self) -> u64 {
        self.k
    }

    pub fn value(self) -> u64 {
        self.value
    }
}

fn t(k: i64) -> i64 {
    k * (k + 1) / 2
}

/// `M(m, n)`, the number of partitions of `n` with crank `m`.
///
/// `M(j,n) = sum_{k>=1} (-1)^(k+1) [p(n - k(k+2j-1)/2) - p(n - k(k+2j+1)/2)]`
/// with `j = |m|`.
pub fn crank_count(m: i64, n: i64) -> BigInt {
    let j = m.abs();
    let mut acc = BigInt::zero();
    for k in 1i64.. {
        let first = n - k * (k + 2 * j - 1) / 2;
        if first < 0 {
            break;
        }
        let term = p_of(first) - p_of(n - k * (k + 2 * j + 1) / 2);
        if k % 2 == 1 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Number of partitions of `n` with crank at least `j`:
/// `sum_{k>=1} (-1)^(k+1) p(n - k(k-1)/2 - kj)`.
pub fn crank_geq(j: u64, n: i64) -> BigInt {
    let j = j as i64;
    let mut acc = BigInt::zero();
    for k in 1i64.. {
        let arg = n - k * (k - 1) / 2 - k * j;
        if arg < 0 {
            break;
        }
        if k % 2 == 1 {
            acc += p_of(arg);
        } else {
            acc -= p_of(arg);
        }
    }
    acc
}

/// `M(0,n) = p(n) + 2 sum_{k>=1} (-1)^k p(n - t_k)`, the triangular-number
/// expansion of the crank-zero count.
pub fn crank_zero_expansion(n: i64) -> BigInt {
    let mut tail = BigInt::zero();
    for k in 1i64.. {
        let arg = n - t(k);
        if arg < 0 {
            break;
        }
        if k % 2 == 0 {
            tail += p_of(arg);
        } else {
            tail -= p_of(arg);
        }
    }
    p_of(n) + tail * 2
}

/// `x(m, n) = p(n - t_{m-1}) - p(n - t_m)`, the number of partitions of `n`
/// with mex `m`.
///
/// Panics if `m == 0`; the mex is always positive.
pub fn mex_count(m: u64, n: i64) -> BigInt {
    assert!(m >= 1, "the mex is a positive integer");
    let m = m as i64;
    p_of(n - t(m - 1)) - p_of(n - t(m))
}

fn mex_class(n: i64, keep: impl Fn(u64) -> bool) -> BigInt {
    let mut acc = BigInt::zero();
    for m in 1u64.. {
        if t(m as i64 - 1) > n {
            break;
        }
        if keep(m) {
            acc += mex_count(m, n);
        }
    }
    acc
}

/// `o(n)`: partitions of `n` with odd mex.
pub fn odd_mex(n: i64) -> BigInt {
    mex_class(n, |m| m % 2 == 1)
}

/// `e(n)`: partitions of `n` with even mex.
pub fn even_mex(n: i64) -> BigInt {
    mex_class(n, |m| m % 2 == 0)
}

/// `o_1(n)`: partitions of `n` with mex congruent to 1 mod 4.
pub fn mex_1_mod_4(n: i64) -> BigInt {
    mex_class(n, |m| m % 4 == 1)
}

/// `o_3(n)`: partitions of `n` with mex congruent to 3 mod 4.
pub fn mex_3_mod_4(n: i64) -> BigInt {
    mex_class(n, |m| m % 4 == 3)
}

fn ewell(target: i64) -> BigInt {
    let mut acc = BigInt::zero();
    for j in 0i64.. {
        let arg = target - t(j);
        if arg < 0 {
            break;
        }
        if t(j) % 2 == 0 {
            acc += p_of(arg);
        } else {
            acc -= p_of(arg);
        }
    }
    acc
}

/// `sum_j (-1)^(t_j) p(2k - t_j)`, which equals `q(k)`.
pub fn ewell_even(k: u64) -> BigInt {
    ewell(2 * k as i64)
}

/// `sum_j (-1)^(t_j) p(2k + 1 - t_j)`, which vanishes.
pub fn ewell_odd(k: u64) -> BigInt {
    ewell(2 * k as i64 + 1)
}

/// Whether `n = j(3j+1)` or `n = j(3j-1)` for some positive `j`.
///
/// Both quadratics have discriminant `1 + 12n`; `n` qualifies iff that is a
/// perfect square `s^2` with `s ≡ ±1 (mod 6)`.
pub fn is_double_pentagonal(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let disc = 1 + 12 * n as u128;
    let s = disc.isqrt();
    s * s == disc && (s % 6 == 1 || s % 6 == 5)
}

/// `q(n/2)` for even `n`, zero for odd `n`: the predicted value of
/// `o_1(n) - o_3(n)`.
pub fn mex_mod_4_gap(n: i64) -> BigInt {
    if n % 2 == 0 {
        q_distinct(n / 2)
    } else {
        BigInt::zero()
    }
}

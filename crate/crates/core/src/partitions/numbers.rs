//! The partition numbers `p(n)` and distinct-part counts `q(n)`.
//!
//! `p(n)` comes from the pentagonal-number recurrence
//! `p(n) = sum_{k>=1} (-1)^(k+1) [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]`.
//! A process-wide table grows on demand under a write lock and is read
//! concurrently afterwards; [`PartitionNumbers`] is an owned table for
//! callers that prefer to confine the memo to one worker.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

static P_TABLE: RwLock<Vec<BigInt>> = RwLock::new(Vec::new());

/// `p(n)`, with `p(n) = 0` for negative `n`.
pub fn p_of(n: i64) -> BigInt {
    if n < 0 {
        return BigInt::zero();
    }
    let n = n as usize;
    if let Some(v) = P_TABLE.read().expect("p table poisoned").get(n) {
        return v.clone();
    }
    let mut table = P_TABLE.write().expect("p table poisoned");
    extend(&mut table, n);
    table[n].clone()
}

/// `p(0), ..., p(n_max)` from the shared table.
pub fn p_table(n_max: usize) -> Vec<BigInt> {
    p_of(n_max as i64);
    P_TABLE.read().expect("p table poisoned")[..=n_max].to_vec()
}

/// Number of partitions of `n` into distinct parts, `0` for negative `n`.
///
/// Uses `(-q;q)_inf = (q^2;q^2)_inf / (q;q)_inf`, i.e.
/// `q(n) = sum_k (-1)^k p(n - k(3k-1))` over all integers `k`.
pub fn q_distinct(n: i64) -> BigInt {
    if n < 0 {
        return BigInt::zero();
    }
    let mut acc = p_of(n);
    for k in 1i64.. {
        let lo = k * (3 * k - 1);
        if lo > n {
            break;
        }
        let terms = p_of(n - lo) + p_of(n - lo - 2 * k);
        if k % 2 == 0 {
            acc += terms;
        } else {
            acc -= terms;
        }
    }
    acc
}

/// An owned memo of `p(0..=n_max)`.
#[derive(Clone, Debug)]
pub struct PartitionNumbers {
    table: Vec<BigInt>,
}

impl PartitionNumbers {
    pub fn up_to(n_max: usize) -> Self {
        let mut table = Vec::new();
        extend(&mut table, n_max);
        Self { table }
    }

    pub fn n_max(&self) -> usize {
        self.table.len() - 1
    }

    /// `p(n)`; zero below 0. Panics above `n_max`.
    pub fn p(&self, n: i64) -> BigInt {
        if n < 0 {
            return BigInt::zero();
        }
        self.table[n as usize].clone()
    }

    pub fn as_slice(&self) -> &[BigInt] {
        &self.table
    }
}

fn extend(table: &mut Vec<BigInt>, n_max: usize) {
    if table.is_empty() {
        table.push(BigInt::one());
    }
    for n in table.len()..=n_max {
        let mut acc = BigInt::zero();
        for k in 1usize.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let g2 = g1 + k;
            let mut term = table[n - g1].clone();
            if g2 <= n {
                term += &table[n - g2];
            }
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        table.push(acc);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate;

    #[test]
    fn small_values() {
        assert_eq!(p_of(-3), BigInt::zero());
        let first: Vec<BigInt> = (0..=6).map(p_of).collect();
        let want: Vec<BigInt> = [1, 1, 2, 3, 5, 7, 11].iter().map(|&v| v.into()).collect();
        assert_eq!(first, want);
        assert_eq!(p_of(100), BigInt::from(190_569_292u64));
    }

    #[test]
    fn owned_table_matches_shared() {
        let t = PartitionNumbers::up_to(300);
        assert_eq!(t.n_max(), 300);
        assert_eq!(t.as_slice(), p_table(300).as_slice());
        assert_eq!(t.p(-1), BigInt::zero());
    }

    #[test]
    fn p_matches_enumeration() {
        for n in 0..=30 {
            assert_eq!(p_of(n as i64), enumerate(n).count().into());
        }
    }

    #[test]
    fn q_examples() {
        assert_eq!(q_distinct(-1), BigInt::zero());
        assert_eq!(q_distinct(0), BigInt::one());
        assert_eq!(q_distinct(2), BigInt::one());
        assert_eq!(q_distinct(6), BigInt::from(4));
        for n in 0..=30u64 {
            let brute = enumerate(n).filter(|p| p.has_distinct_parts()).count();
            assert_eq!(q_distinct(n as i64), brute.into());
        }
    }

    #[test]
    fn shared_table_under_concurrent_readers() {
        let handles: Vec<_> = (0..4)
            .map(|t| std::thread::spawn(move || p_of(400 + t * 50)))
            .collect();
        let got: Vec<BigInt> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        let owned = PartitionNumbers::up_to(550);
        for (t, v) in got.iter().enumerate() {
            assert_eq!(*v, owned.p(400 + t as i64 * 50));
        }
    }
}

//! Partitions of an integer and the statistics defined on them.
//!
//! Enumeration runs in reverse lexicographic order of the part sequence:
//! for `n = 4` that is `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.

mod frobenius;
mod numbers;

pub use frobenius::FrobeniusSymbol;
pub use numbers::{p_of, p_table, q_distinct, PartitionNumbers};

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A partition: positive parts in nonincreasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition {
    parts: Vec<u64>,
    #[serde(skip)]
    weight: u64,
}

impl Partition {
    /// The empty partition of 0.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Wraps parts that are already positive and nonincreasing.
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidParams("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParams("parts must be nonincreasing".into()));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Sorts the parts into nonincreasing order first.
    pub fn from_unsorted(mut parts: Vec<u64>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    fn from_sorted(parts: Vec<u64>) -> Self {
        let weight = parts.iter().sum();
        Self { parts, weight }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest_part(&self) -> u64 {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn contains(&self, part: u64) -> bool {
        // nonincreasing, so search on the reversed order
        self.parts.binary_search_by(|p| part.cmp(p)).is_ok()
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Smallest positive integer that is not a part.
    pub fn mex(&self) -> u64 {
        least_missing_above(&self.parts, 0)
    }

    /// Least integer greater than `j` that is not a part. Defined for `j = 0`
    /// (where it is the mex) and for every `j` that is a part.
    pub fn mex_j(&self, j: u64) -> Result<u64> {
        if j > 0 && !self.contains(j) {
            return Err(Error::UndefinedMexJ { j });
        }
        Ok(least_missing_above(&self.parts, j))
    }

    /// The Andrews–Garvan crank.
    ///
    /// With `w` the number of ones, the crank is the largest part when
    /// `w = 0`, and otherwise the number of parts larger than `w` minus `w`.
    /// The empty partition has crank 0.
    pub fn crank(&self) -> i64 {
        let ones = self.parts.iter().rev().take_while(|&&p| p == 1).count() as u64;
        if ones == 0 {
            return self.largest_part() as i64;
        }
        let above = self.parts.iter().take_while(|&&p| p > ones).count() as i64;
        above - ones as i64
    }

    /// Side of the largest square fitting in the Young diagram.
    pub fn durfee(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i as u64)
            .count()
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.largest_part())
            .map(|i| self.count_at_least(i))
            .collect();
        Self::from_sorted(parts)
    }

    /// Number of parts `>= v`, which is the `v`th part of the conjugate.
    pub fn count_at_least(&self, v: u64) -> u64 {
        self.parts.partition_point(|&p| p >= v) as u64
    }

    pub fn to_frobenius(&self) -> FrobeniusSymbol {
        FrobeniusSymbol::from_partition(self)
    }
}

fn least_missing_above(parts: &[u64], j: u64) -> u64 {
    let mut m = j + 1;
    for &p in parts.iter().rev() {
        if p < m {
            continue;
        }
        if p == m {
            m += 1;
        } else {
            break;
        }
    }
    m
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Every partition of `n`, in reverse lexicographic order.
pub fn enumerate(n: u64) -> Partitions {
    Partitions {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

/// Iterator returned by [`enumerate`].
#[derive(Clone, Debug)]
pub struct Partitions {
    next: Option<Vec<u64>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(Partition::from_sorted(current))
    }
}

impl std::iter::FusedIterator for Partitions {}

fn successor(parts: &[u64]) -> Option<Vec<u64>> {
    let i = parts.iter().rposition(|&p| p > 1)?;
    let v = parts[i] - 1;
    let mut rest = (parts.len() - i - 1) as u64 + 1;
    let mut out = Vec::with_capacity(parts.len() + 1);
    out.extend_from_slice(&parts[..i]);
    out.push(v);
    while rest >= v {
        out.push(v);
        rest -= v;
    }
    if rest > 0 {
        out.push(rest);
    }
    Some(out)
}

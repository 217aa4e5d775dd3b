use serde::Serialize;

use super::Partition;
use crate::error::{Error, Result};

/// Two strictly decreasing rows of nonnegative integers of equal length `d`.
///
/// For a partition with Durfee square `d`, row `i` of the top is
/// `λ_i - i` and row `i` of the bottom is `λ'_i - i` (1-based `i`).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct FrobeniusSymbol {
    top: Vec<u64>,
    bottom: Vec<u64>,
}

impl FrobeniusSymbol {
    pub fn new(top: Vec<u64>, bottom: Vec<u64>) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::MalformedSymbol(format!(
                "row lengths differ: {} vs {}",
                top.len(),
                bottom.len()
            )));
        }
        for (name, row) in [("top", &top), ("bottom", &bottom)] {
            if row.windows(2).any(|w| w[0] <= w[1]) {
                return Err(Error::MalformedSymbol(format!(
                    "{name} row is not strictly decreasing"
                )));
            }
        }
        Ok(Self { top, bottom })
    }

    pub fn from_partition(p: &Partition) -> Self {
        let d = p.durfee();
        let top = (0..d).map(|i| p.parts()[i] - i as u64 - 1).collect();
        let bottom = (0..d)
            .map(|i| p.count_at_least(i as u64 + 1) - i as u64 - 1)
            .collect();
        Self { top, bottom }
    }

    pub fn to_partition(&self) -> Partition {
        let d = self.rank();
        let mut parts: Vec<u64> = self
            .top
            .iter()
            .enumerate()
            .map(|(i, &a)| a + i as u64 + 1)
            .collect();
        // rows below the square, read off the bottom row's columns
        let columns: Vec<u64> = self
            .bottom
            .iter()
            .enumerate()
            .map(|(i, &b)| b + i as u64 + 1)
            .collect();
        let depth = columns.first().copied().unwrap_or(0);
        for r in (d as u64 + 1)..=depth {
            parts.push(columns.iter().filter(|&&c| c >= r).count() as u64);
        }
        Partition::from_sorted(parts)
    }

    pub fn top(&self) -> &[u64] {
        &self.top
    }

    pub fn bottom(&self) -> &[u64] {
        &self.bottom
    }

    /// Number of columns, equal to the Durfee square of the partition.
    pub fn rank(&self) -> usize {
        self.top.len()
    }

    pub fn weight(&self) -> u64 {
        self.rank() as u64 + self.top.iter().sum::<u64>() + self.bottom.iter().sum::<u64>()
    }

    pub fn top_contains(&self, v: u64) -> bool {
        self.top.contains(&v)
    }

    /// True when `v` appears in either row; vacuously false for the empty
    /// symbol.
    pub fn contains(&self, v: u64) -> bool {
        self.top.contains(&v) || self.bottom.contains(&v)
    }
}

impl Partition {
    pub fn from_frobenius(symbol: &FrobeniusSymbol) -> Partition {
        symbol.to_partition()
    }
}

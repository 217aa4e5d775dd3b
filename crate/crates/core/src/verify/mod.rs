//! Identity registry and the harness that checks each identity exactly.
//!
//! Each [`IdentityCheck`] compares two computations that share no formula:
//! a closed form against an enumeration oracle, or two independently built
//! series. Grid points are evaluated in parallel and gathered back in grid
//! order, so a report is byte-identical for any worker count.

mod checks;
pub mod oracle;

pub use checks::registry;
pub use oracle::{oracle_count, DEFAULT_BUDGET};

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// How the two sides of a record must compare.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "eq")]
    Equal,
    #[serde(rename = "gt")]
    Greater,
}

impl Relation {
    fn holds(self, lhs: &BigInt, rhs: &BigInt) -> bool {
        match self {
            Relation::Equal => lhs == rhs,
            Relation::Greater => lhs > rhs,
        }
    }
}

fn decimal<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// One evaluated grid point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub check_id: &'static str,
    pub variant: &'static str,
    pub params: BTreeMap<&'static str, i64>,
    #[serde(serialize_with = "decimal")]
    pub lhs: BigInt,
    #[serde(serialize_with = "decimal")]
    pub rhs: BigInt,
    pub relation: Relation,
    pub pass: bool,
}

impl Record {
    fn new(
        check_id: &'static str,
        variant: &'static str,
        params: &[(&'static str, i64)],
        lhs: BigInt,
        rhs: BigInt,
        relation: Relation,
    ) -> Self {
        let pass = relation.holds(&lhs, &rhs);
        Self {
            check_id,
            variant,
            params: params.iter().copied().collect(),
            lhs,
            rhs,
            relation,
            pass,
        }
    }

    pub fn param(&self, name: &str) -> Option<i64> {
        self.params.get(name).copied()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

/// Outcome of one check: every record in grid order plus the first failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check_id: &'static str,
    pub statement: &'static str,
    pub summary: Summary,
    pub first_counterexample: Option<Record>,
    pub records: Vec<Record>,
}

impl VerificationReport {
    fn from_records(check: &IdentityCheck, records: Vec<Record>) -> Self {
        let passed = records.iter().filter(|r| r.pass).count();
        Self {
            check_id: check.id,
            statement: check.statement,
            summary: Summary {
                total: records.len(),
                passed,
                failed: records.len() - passed,
            },
            first_counterexample: records.iter().find(|r| !r.pass).cloned(),
            records,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| !r.pass)
    }
}

/// Default parameter ranges of a check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    /// Main axis: `n`, `k`, or the coefficient index of a series.
    pub main: RangeInclusive<i64>,
    /// Range covered by the enumeration oracles, when the check has any.
    pub oracle: Option<RangeInclusive<i64>>,
    /// Secondary parameter (`j`, `m` or `b`).
    pub aux: Option<(&'static str, RangeInclusive<i64>)>,
}

/// The grid after applying run-time overrides.
#[derive(Clone, Debug)]
pub(crate) struct Resolved {
    pub main: RangeInclusive<i64>,
    pub oracle: RangeInclusive<i64>,
    pub aux: RangeInclusive<i64>,
    pub budget: u64,
}

type Evaluator = fn(&IdentityCheck, &Resolved) -> Result<Vec<Record>>;

/// A named identity with both of its sides.
#[derive(Clone)]
pub struct IdentityCheck {
    pub id: &'static str,
    /// The identity in symbols.
    pub statement: &'static str,
    pub lhs: &'static str,
    pub rhs: &'static str,
    pub grid: Grid,
    eval: Evaluator,
}

impl std::fmt::Debug for IdentityCheck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityCheck")
            .field("id", &self.id)
            .field("grid", &self.grid)
            .finish_non_exhaustive()
    }
}

/// Adds `delta` to the right-hand side wherever `param == value`. Used to
/// confirm the harness reports a broken identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Perturbation {
    pub param: String,
    pub value: i64,
    pub delta: i64,
}

impl std::str::FromStr for Perturbation {
    type Err = Error;

    /// Parses `param=value:delta`, e.g. `n=10:1`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParams(format!("expected param=value:delta, got {s:?}"));
        let (param, rest) = s.split_once('=').ok_or_else(bad)?;
        let (value, delta) = rest.split_once(':').ok_or_else(bad)?;
        Ok(Self {
            param: param.to_string(),
            value: value.parse().map_err(|_| bad())?,
            delta: delta.parse().map_err(|_| bad())?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    /// Largest `n` the enumeration oracles may visit.
    pub budget: u64,
    /// Thread count; `None` uses the global rayon pool.
    pub workers: Option<usize>,
    /// Replaces the upper end of every check's main axis; oracle ranges are
    /// clamped to it but never extended.
    pub n_max: Option<i64>,
    pub perturbation: Option<Perturbation>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            workers: None,
            n_max: None,
            perturbation: None,
        }
    }
}

impl IdentityCheck {
    fn resolve(&self, config: &RunConfig) -> Resolved {
        let main_end = config.n_max.unwrap_or(*self.grid.main.end());
        let oracle = match &self.grid.oracle {
            Some(r) => *r.start()..=(*r.end()).min(main_end),
            // empty: no oracle side
            #[allow(clippy::reversed_empty_ranges)]
            None => 0..=-1,
        };
        Resolved {
            main: *self.grid.main.start()..=main_end,
            oracle,
            aux: self.grid.aux.as_ref().map_or(0..=0, |(_, r)| r.clone()),
            budget: config.budget,
        }
    }
}

/// Evaluates `check` over its grid.
pub fn run_check(check: &IdentityCheck, config: &RunConfig) -> Result<VerificationReport> {
    let resolved = check.resolve(config);
    let mut records = match config.workers {
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::InvalidParams(e.to_string()))?
            .install(|| (check.eval)(check, &resolved))?,
        None => (check.eval)(check, &resolved)?,
    };
    if let Some(p) = &config.perturbation {
        for r in records
            .iter_mut()
            .filter(|r| r.param(&p.param) == Some(p.value))
        {
            r.rhs += p.delta;
            r.pass = r.relation.holds(&r.lhs, &r.rhs);
        }
    }
    Ok(VerificationReport::from_records(check, records))
}

pub fn find_check(id: &str) -> Result<IdentityCheck> {
    registry()
        .into_iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

/// Runs every registered check in registry order.
pub fn run_all(config: &RunConfig) -> Result<Vec<VerificationReport>> {
    registry().iter().map(|c| run_check(c, config)).collect()
}

/// Evaluates `f` at every point in parallel, keeping point order.
pub(crate) fn par_records<P, F>(points: Vec<P>, f: F) -> Result<Vec<Record>>
where
    P: Sync,
    F: Fn(&P) -> Result<Record> + Sync + Send,
{
    points.par_iter().map(f).collect()
}

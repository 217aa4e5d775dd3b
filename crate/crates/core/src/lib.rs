//! Exact integer-partition statistics and truncated q-series.
//!
//! The crate is organised in layers:
//!
//! * [`series`] — truncated formal power series over big integers and
//!   constructors for the generating functions of the crank, the mex and
//!   Frobenius-symbol statistics.
//! * [`partitions`] — partitions, enumeration, `mex`, `mex_j`, the
//!   Andrews–Garvan crank, conjugation and Frobenius symbols, and the
//!   memoized partition numbers `p(n)` and `q(n)`.
//! * [`counting`] — closed-form counts expressed through `p(n)`.
//! * [`verify`] — brute-force oracles and a registry of identities checked
//!   by exact integer equality.
//! * [`cli`] — the `mexcrank` command-line front end.
//!
//! ```
//! use mexcrank::counting::crank_count;
//! use mexcrank::partitions::p_of;
//!
//! assert_eq!(p_of(100), 190_569_292u64.into());
//! assert_eq!(crank_count(0, 4), 1.into());
//! ```

pub mod cli;
pub mod counting;
pub mod error;
pub mod partitions;
pub mod series;
pub mod verify;

pub use error::{Error, Result};

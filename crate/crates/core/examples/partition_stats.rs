//! Lists every partition of `n` with its mex, crank, Durfee square and
//! Frobenius symbol.
//!
//!     cargo run --example partition_stats -- 6

use mexcrank::partitions::enumerate;

fn main() {
    let n: u64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(6);
    println!(
        "{:<16} {:>4} {:>6} {:>7}  frobenius",
        "partition", "mex", "crank", "durfee"
    );
    for p in enumerate(n) {
        let f = p.to_frobenius();
        println!(
            "{:<16} {:>4} {:>6} {:>7}  {:?} / {:?}",
            p.to_string(),
            p.mex(),
            p.crank(),
            p.durfee(),
            f.top(),
            f.bottom()
        );
    }
}

//! Prints M(m, n) from the p(n) formula next to the count obtained by
//! enumerating partitions and computing their crank.
//!
//!     cargo run --example crank_table -- 12

use std::collections::BTreeMap;

use mexcrank::counting::crank_count;
use mexcrank::partitions::enumerate;

fn main() {
    let n_max: i64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(10);
    for n in 0..=n_max {
        let mut by_crank = BTreeMap::<i64, usize>::new();
        for p in enumerate(n as u64) {
            *by_crank.entry(p.crank()).or_default() += 1;
        }
        let row: Vec<String> = (-n..=n)
            .filter_map(|m| {
                let formula = crank_count(m, n);
                let counted = by_crank.get(&m).copied().unwrap_or(0);
                let mark = if formula == counted.into() { "" } else { "*" };
                (formula != 0.into() || counted != 0).then(|| format!("{m}:{formula}{mark}"))
            })
            .collect();
        println!("n={n:<3} {}", row.join(" "));
    }
    // n = 1 is the only row where the formula and the statistic differ.
    println!("* = differs from the combinatorial crank count");
}

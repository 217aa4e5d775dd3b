//! Frobenius symbols: the bijection with partitions and the counts of
//! symbols avoiding a value in the top row.
//!
//!     cargo run --example frobenius -- 3 20

use mexcrank::counting::crank_geq;
use mexcrank::partitions::{enumerate, FrobeniusSymbol, Partition};

fn main() -> Result<(), mexcrank::Error> {
    let mut args = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse::<i64>().ok());
    let j = args.next().unwrap_or(1);
    let n_max = args.next().unwrap_or(15);

    let sym = FrobeniusSymbol::new(vec![4, 2, 0], vec![3, 1, 0])?;
    let p = Partition::from_frobenius(&sym);
    println!(
        "{:?} / {:?} <-> {p} (weight {})",
        sym.top(),
        sym.bottom(),
        sym.weight()
    );

    println!("n, crank >= {j}, partitions of n-{j} without {j} in the top row");
    for n in j..=n_max {
        let count = enumerate((n - j) as u64)
            .filter(|p| !p.to_frobenius().top_contains(j as u64))
            .count();
        println!("{n:>3} {:>8} {count:>8}", crank_geq(j as u64, n));
    }
    Ok(())
}

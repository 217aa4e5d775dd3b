//! Splits the odd-mex count by mex mod 4 and shows where o(n) is odd.
//!
//!     cargo run --example mex_parity -- 40

use mexcrank::counting::{even_mex, is_double_pentagonal, mex_1_mod_4, mex_3_mod_4, odd_mex};
use mexcrank::partitions::q_distinct;

fn main() {
    let n_max: i64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(30);
    println!(
        "{:>4} {:>10} {:>10} {:>8} {:>8} {:>8}  o odd?",
        "n", "o", "e", "o1", "o3", "q(n/2)"
    );
    for n in 1..=n_max {
        let half = if n % 2 == 0 {
            q_distinct(n / 2).to_string()
        } else {
            "-".into()
        };
        let o = odd_mex(n);
        let flag = if is_double_pentagonal(n as u64) {
            "yes (n = j(3j±1))"
        } else {
            ""
        };
        println!(
            "{n:>4} {o:>10} {:>10} {:>8} {:>8} {half:>8}  {flag}",
            even_mex(n),
            mex_1_mod_4(n),
            mex_3_mod_4(n),
        );
    }
}

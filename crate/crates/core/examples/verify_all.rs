//! Runs every registered identity at its default range and prints a summary
//! line per check.
//!
//!     cargo run --release --example verify_all

use std::time::Instant;

use mexcrank::verify::{run_all, RunConfig};

fn main() -> Result<(), mexcrank::Error> {
    let start = Instant::now();
    let reports = run_all(&RunConfig::default())?;
    for r in &reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        println!(
            "{status} {:<22} {:>6} records  {}",
            r.check_id, r.summary.total, r.statement
        );
        if let Some(bad) = &r.first_counterexample {
            println!("     first counterexample: {bad:?}");
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    println!(
        "{} checks, {failed} failing, {:.2?}",
        reports.len(),
        start.elapsed()
    );
    if failed > 0 {
        std::process::exit(1);
    }
    Ok(())
}

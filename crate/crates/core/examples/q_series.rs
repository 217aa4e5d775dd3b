//! Expands the named generating functions and checks two series identities
//! coefficient by coefficient.
//!
//!     cargo run --example q_series

use mexcrank::series::{gf, pochhammer_finite, GfKind, TruncatedSeries};

fn main() -> Result<(), mexcrank::Error> {
    let order = 12;
    for kind in [
        GfKind::EulerInv,
        GfKind::PochQInf,
        GfKind::Distinct,
        GfKind::CrankM { m: 0 },
        GfKind::CrankGeqJ { j: 1 },
        GfKind::FrobNo0,
        GfKind::FrobNoJTop { j: 2 },
    ] {
        println!("{:<14} {}", kind.tag(), gf(kind, order)?);
    }

    // (q)_3 by hand and its reciprocal
    let p3 = pochhammer_finite(3, order);
    println!("(q)_3          {p3}");
    println!("1/(q)_3        {}", p3.invert()?);

    let order = 200;
    let euler = gf(GfKind::EulerInv, order)?;
    let same = (0..=10).all(|b| gf(GfKind::DurfeeRectB { b }, order).as_ref() == Ok(&euler));
    println!(
        "Durfee rectangles b = 0..10 reproduce 1/(q)_inf to O(q^{}): {same}",
        order + 1
    );

    let crank0 = gf(GfKind::CrankM { m: 0 }, order)?;
    let alt = gf(GfKind::Crank0Alt, order)?;
    let mut one_minus_q = TruncatedSeries::one(order);
    one_minus_q.add_term(1, -1);
    let diff = &one_minus_q * &gf(GfKind::FrobNo0, order)?;
    println!(
        "crank-0 series, alternative form, (1-q)*FrobNo0 agree: {}",
        crank0 == alt && alt == diff
    );
    Ok(())
}

use std::collections::BTreeMap;

use mexcrank::partitions::{enumerate, FrobeniusSymbol, Partition};
use mexcrank::series::{gf, GfKind, TruncatedSeries};
use num_bigint::BigInt;
use proptest::prelude::*;

fn series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(-50i64..50, order + 1).prop_map(|c| TruncatedSeries::from_i64s(&c))
}

fn unit_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    (prop::bool::ANY, prop::collection::vec(-20i64..20, order)).prop_map(|(neg, rest)| {
        let mut c = vec![if neg { -1 } else { 1 }];
        c.extend(rest);
        TruncatedSeries::from_i64s(&c)
    })
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u64..15, 0..12).prop_map(|p| Partition::from_unsorted(p).unwrap())
}

proptest! {
    #[test]
    fn ring_laws(a in series(12), b in series(12), c in series(12)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn invert_is_two_sided(a in unit_series(15)) {
        let inv = a.invert().unwrap();
        let one = TruncatedSeries::one(15);
        prop_assert_eq!(&a * &inv, one.clone());
        prop_assert_eq!(&inv * &a, one);
        prop_assert_eq!(inv.invert().unwrap(), a);
    }

    #[test]
    fn shift_is_multiplication_by_monomial(a in series(10), k in 0usize..14) {
        let qk = TruncatedSeries::monomial(BigInt::from(1), k, 10);
        prop_assert_eq!(a.shift(k), &a * &qk);
    }

    #[test]
    fn frobenius_round_trip(p in partition()) {
        let f = p.to_frobenius();
        prop_assert_eq!(f.weight(), p.weight());
        prop_assert_eq!(FrobeniusSymbol::new(f.top().to_vec(), f.bottom().to_vec()).unwrap(), f.clone());
        prop_assert_eq!(Partition::from_frobenius(&f), p);
    }

    #[test]
    fn conjugate_is_an_involution(p in partition()) {
        let c = p.conjugate();
        prop_assert_eq!(c.weight(), p.weight());
        prop_assert_eq!(c.durfee(), p.durfee());
        prop_assert_eq!(c.conjugate(), p);
    }

    #[test]
    fn mex_characterisation(p in partition()) {
        let m = p.mex();
        prop_assert!((1..m).all(|v| p.contains(v)));
        prop_assert!(!p.contains(m));
        prop_assert_eq!(p.mex_j(0).unwrap(), m);
        for &j in p.parts() {
            let mj = p.mex_j(j).unwrap();
            prop_assert!(mj > j && !p.contains(mj));
            prop_assert!((j..mj).all(|v| p.contains(v)));
        }
    }
}

#[test]
fn pentagonal_times_euler_is_one() {
    for n in [0, 1, 2, 5, 17, 64, 150] {
        let prod = &gf(GfKind::PochQInf, n).unwrap() * &gf(GfKind::EulerInv, n).unwrap();
        assert_eq!(prod, TruncatedSeries::one(n), "order {n}");
    }
}

#[test]
fn combinatorial_crank_counts_are_symmetric() {
    for n in 2..=35 {
        let mut counts = BTreeMap::<i64, u64>::new();
        for p in enumerate(n) {
            *counts.entry(p.crank()).or_default() += 1;
        }
        for (&m, &c) in &counts {
            assert_eq!(counts.get(&-m).copied(), Some(c), "n = {n}, m = {m}");
        }
    }
}

#[test]
fn n1_crank_is_the_documented_exception() {
    // (1) has crank -1, while the generating function gives
    // M(-1,1) = M(1,1) = 1 and M(0,1) = -1.
    let only: Vec<_> = enumerate(1).map(|p| p.crank()).collect();
    assert_eq!(only, [-1]);
    let gf_values: Vec<BigInt> = (-1..=1)
        .map(|m| gf(GfKind::CrankM { m }, 1).unwrap().coeff_at(1))
        .collect();
    assert_eq!(gf_values, [1, -1, 1].map(BigInt::from));
}

use mexcrank::counting::{
    crank_count, crank_geq, crank_zero_expansion, even_mex, mex_count, odd_mex,
};
use mexcrank::partitions::{p_of, q_distinct};
use mexcrank::series::{gf, GfKind};
use num_bigint::BigInt;
use num_traits::Zero;

#[test]
fn crank_counts_sum_to_p() {
    for n in 0..=200i64 {
        let total: BigInt = (-n..=n).map(|m| crank_count(m, n)).sum();
        assert_eq!(total, p_of(n), "n = {n}");
    }
}

#[test]
fn crank_geq_telescopes() {
    for j in 0..=12u64 {
        for n in 0..=200 {
            assert_eq!(
                crank_geq(j, n) - crank_geq(j + 1, n),
                crank_count(j as i64, n),
                "j = {j}, n = {n}"
            );
        }
    }
}

#[test]
fn crank_geq_matches_its_series() {
    for j in 0..=6 {
        let s = gf(GfKind::CrankGeqJ { j }, 150).unwrap();
        for n in 0..=150 {
            assert_eq!(crank_geq(j as u64, n), s.coeff_at(n), "j = {j}, n = {n}");
        }
    }
}

#[test]
fn mex_counts_sum_to_p() {
    for n in 0..=200i64 {
        let total: BigInt = (1..=25).map(|m| mex_count(m, n)).sum();
        assert_eq!(total, p_of(n), "n = {n}");
    }
}

#[test]
fn odd_and_even_mex_are_crank_tails() {
    for n in 0..=200 {
        assert_eq!(odd_mex(n), crank_geq(0, n));
        assert_eq!(even_mex(n), crank_geq(1, n));
        assert_eq!(odd_mex(n) - even_mex(n), crank_zero_expansion(n));
    }
}

#[test]
fn q_distinct_matches_product_series() {
    let s = gf(GfKind::Distinct, 300).unwrap();
    for n in 0..=300 {
        assert_eq!(q_distinct(n), s.coeff_at(n));
    }
}

#[test]
fn negative_arguments_vanish() {
    for n in [-1, -5, -100] {
        assert!(p_of(n).is_zero());
        assert!(q_distinct(n).is_zero());
        assert!(crank_count(0, n).is_zero());
        assert!(crank_geq(2, n).is_zero());
        assert!(odd_mex(n).is_zero());
    }
}

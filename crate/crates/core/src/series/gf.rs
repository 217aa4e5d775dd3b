//! Named generating functions, each truncated to a requested order.
//!
//! Every infinite sum stops at the first index whose lowest exponent exceeds
//! the order. All such exponents grow at least linearly in the index, so the
//! truncation is exact.

use num_bigint::BigInt;

use super::TruncatedSeries;
use crate::error::{Error, Result};

/// The generating functions the crate knows how to expand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GfKind {
    /// `1/(q)_inf`, the partition numbers `p(n)`.
    EulerInv,
    /// `(q)_inf`, from the pentagonal number theorem.
    PochQInf,
    /// `(-q;q)_inf`, partitions into distinct parts.
    Distinct,
    /// Partitions of `n` with crank `m` (any integer `m`).
    CrankM { m: i64 },
    /// Partitions of `n` with crank at least `j >= 0`.
    CrankGeqJ { j: i64 },
    /// `sum_s q^(s^2+2s) / (q)_s^2`: Frobenius symbols with no 0 in either row.
    FrobNo0,
    /// `(q)_inf * sum_k q^(2k) / (q)_k^2`, the second form of the crank-0 series.
    Crank0Alt,
    /// `(1/(q)_inf) sum_b (-1)^b q^(b(b+1)/2 + jb)`: Frobenius symbols with no
    /// `j` in the top row.
    FrobNoJTop { j: i64 },
    /// `sum_s q^(s(s+b)) / ((q)_s (q)_(s+b))`, all partitions split by their
    /// `s x (s+b)` Durfee rectangle.
    DurfeeRectB { b: i64 },
}

impl GfKind {
    pub fn tag(&self) -> &'static str {
        match self {
            GfKind::EulerInv => "EULER_INV",
            GfKind::PochQInf => "POCH_Q_INF",
            GfKind::Distinct => "DISTINCT",
            GfKind::CrankM { .. } => "CRANK_M",
            GfKind::CrankGeqJ { .. } => "CRANK_GEQ_J",
            GfKind::FrobNo0 => "FROB_NO0",
            GfKind::Crank0Alt => "CRANK0_ALT",
            GfKind::FrobNoJTop { .. } => "FROB_NOJ_TOP",
            GfKind::DurfeeRectB { .. } => "DURFEE_RECT_B",
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |name: &str, v: i64| {
            Err(Error::InvalidParams(format!(
                "{} requires {name} >= 0, got {v}",
                self.tag()
            )))
        };
        match *self {
            GfKind::CrankGeqJ { j } | GfKind::FrobNoJTop { j } if j < 0 => bad("j", j),
            GfKind::DurfeeRectB { b } if b < 0 => bad("b", b),
            _ => Ok(()),
        }
    }
}

/// The finite product `(q;q)_k = (1-q)(1-q^2)...(1-q^k)` truncated to `order`.
pub fn pochhammer_finite(k: usize, order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    // factors with exponent above the order are 1 + O(q^(order+1))
    for i in 1..=k.min(order) {
        s.multiply_by_one_minus_q_pow(i);
    }
    s
}

/// Expands the generating function `kind` to order `order`.
pub fn gf(kind: GfKind, order: usize) -> Result<TruncatedSeries> {
    kind.validate()?;
    let n = order as i64;
    let s = match kind {
        GfKind::EulerInv => over_euler(TruncatedSeries::one(order)),
        GfKind::PochQInf => pentagonal(order),
        GfKind::Distinct => {
            let mut s = TruncatedSeries::one(order);
            let c = s.coeffs.as_mut_slice();
            for part in 1..=order {
                for k in (part..=order).rev() {
                    let (lo, hi) = c.split_at_mut(k);
                    hi[0] += &lo[k - part];
                }
            }
            s
        }
        GfKind::CrankM { m } => {
            let m = m.abs();
            let mut num = TruncatedSeries::zero(order);
            for k in 1i64.. {
                let e = k * (k - 1) / 2 + k * m;
                if e > n {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                num.add_term(e as usize, sign);
                if e + k <= n {
                    num.add_term((e + k) as usize, -sign);
                }
            }
            over_euler(num)
        }
        GfKind::CrankGeqJ { j } => {
            let mut num = TruncatedSeries::zero(order);
            for k in 0i64.. {
                let e = j * (2 * k + 1) + k * (2 * k + 1);
                if e > n {
                    break;
                }
                num.add_term(e as usize, 1);
                let e2 = e + 2 * k + j + 1;
                if e2 <= n {
                    num.add_term(e2 as usize, -1);
                }
            }
            over_euler(num)
        }
        GfKind::FrobNo0 => {
            let mut acc = TruncatedSeries::zero(order);
            // inv holds 1/(q)_s^2
            let mut inv = TruncatedSeries::one(order);
            for s in 0usize.. {
                let e = s * s + 2 * s;
                if e > order {
                    break;
                }
                if s > 0 {
                    inv.divide_by_one_minus_q_pow(s);
                    inv.divide_by_one_minus_q_pow(s);
                }
                acc = &acc + &inv.shift(e);
            }
            acc
        }
        GfKind::Crank0Alt => {
            let mut acc = TruncatedSeries::zero(order);
            let mut inv = TruncatedSeries::one(order);
            for k in 0usize.. {
                let e = 2 * k;
                if e > order {
                    break;
                }
                if k > 0 {
                    inv.divide_by_one_minus_q_pow(k);
                    inv.divide_by_one_minus_q_pow(k);
                }
                acc = &acc + &inv.shift(e);
            }
            &pentagonal(order) * &acc
        }
        GfKind::FrobNoJTop { j } => {
            let mut num = TruncatedSeries::zero(order);
            for b in 0i64.. {
                let e = b * (b + 1) / 2 + j * b;
                if e > n {
                    break;
                }
                num.add_term(e as usize, if b % 2 == 0 { 1 } else { -1 });
            }
            over_euler(num)
        }
        GfKind::DurfeeRectB { b } => {
            let b = b as usize;
            let mut acc = TruncatedSeries::zero(order);
            // short holds 1/(q)_s, long holds 1/(q)_(s+b)
            let mut short = TruncatedSeries::one(order);
            let mut long = TruncatedSeries::one(order);
            for i in 1..=b.min(order) {
                long.divide_by_one_minus_q_pow(i);
            }
            for s in 0usize.. {
                let e = s * (s + b);
                if e > order {
                    break;
                }
                if s > 0 {
                    short.divide_by_one_minus_q_pow(s);
                    if s + b <= order {
                        long.divide_by_one_minus_q_pow(s + b);
                    }
                }
                acc = &acc + &(&short * &long).shift(e);
            }
            acc
        }
    };
    Ok(s)
}

/// `numerator / (q)_inf`, applied as successive geometric divisions.
fn over_euler(mut numerator: TruncatedSeries) -> TruncatedSeries {
    for k in 1..=numerator.order() {
        numerator.divide_by_one_minus_q_pow(k);
    }
    numerator
}

/// `(q)_inf = sum_k (-1)^k q^(k(3k-1)/2)` over all integers `k`.
fn pentagonal(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    for k in 1usize.. {
        let lo = k * (3 * k - 1) / 2;
        if lo > order {
            break;
        }
        let sign = BigInt::from(if k % 2 == 0 { 1 } else { -1 });
        s.add_term(lo, sign.clone());
        s.add_term(lo + k, sign);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(kind: GfKind, order: usize) -> Vec<i64> {
        gf(kind, order)
            .unwrap()
            .coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(
            pochhammer_finite(0, 4),
            TruncatedSeries::from_i64s(&[1, 0, 0, 0, 0])
        );
        assert_eq!(
            pochhammer_finite(1, 3),
            TruncatedSeries::from_i64s(&[1, -1, 0, 0])
        );
        assert_eq!(
            pochhammer_finite(2, 4),
            TruncatedSeries::from_i64s(&[1, -1, -1, 1, 0])
        );
    }

    #[test]
    fn pochhammer_approaches_pentagonal() {
        assert_eq!(pochhammer_finite(40, 40), gf(GfKind::PochQInf, 40).unwrap());
    }

    #[test]
    fn named_series_examples() {
        assert_eq!(coeffs(GfKind::CrankM { m: 0 }, 5), [1, -1, 0, 1, 1, 1]);
        assert_eq!(coeffs(GfKind::CrankGeqJ { j: 1 }, 4)[4], 2);
        assert_eq!(coeffs(GfKind::FrobNo0, 4), [1, 0, 0, 1, 2]);
        assert_eq!(coeffs(GfKind::FrobNoJTop { j: 0 }, 4), [1, 0, 1, 2, 3]);
        assert_eq!(coeffs(GfKind::Distinct, 6), [1, 1, 1, 2, 2, 3, 4]);
        assert_eq!(
            gf(GfKind::DurfeeRectB { b: 3 }, 50).unwrap(),
            gf(GfKind::EulerInv, 50).unwrap()
        );
    }

    #[test]
    fn crank_m_is_symmetric_in_m() {
        for m in 1..6 {
            assert_eq!(
                gf(GfKind::CrankM { m }, 30).unwrap(),
                gf(GfKind::CrankM { m: -m }, 30).unwrap()
            );
        }
    }

    #[test]
    fn rejects_negative_params() {
        for kind in [
            GfKind::CrankGeqJ { j: -1 },
            GfKind::FrobNoJTop { j: -2 },
            GfKind::DurfeeRectB { b: -1 },
        ] {
            assert!(matches!(gf(kind, 5), Err(Error::InvalidParams(_))));
        }
    }

    #[test]
    fn order_zero() {
        for kind in [
            GfKind::EulerInv,
            GfKind::FrobNo0,
            GfKind::Crank0Alt,
            GfKind::PochQInf,
        ] {
            assert_eq!(coeffs(kind, 0), [1]);
        }
    }

    #[test]
    fn euler_coefficients_grow() {
        let e = coeffs(GfKind::EulerInv, 60);
        assert!(e.iter().all(|&c| c > 0));
        assert!(e[1..].windows(2).all(|w| w[0] <= w[1]));
    }
}

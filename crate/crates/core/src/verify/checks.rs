//! The registered identities.

use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::oracle::{
    frobenius_no_zero, frobenius_top_lacks, mex_j_minus_j_odd, n1_crank_geq_offset,
    n1_crank_offset, oracle_count,
};
use super::{par_records, Grid, IdentityCheck, Record, Relation, Resolved};
use crate::counting::{
    crank_count, crank_geq, crank_zero_expansion, even_mex, ewell_even, ewell_odd,
    is_double_pentagonal, mex_1_mod_4, mex_3_mod_4, mex_count, mex_mod_4_gap, odd_mex,
};
use crate::error::Result;
use crate::partitions::{p_of, q_distinct};
use crate::series::{gf, pochhammer_finite, GfKind, TruncatedSeries};

const ORACLE_N: RangeInclusive<i64> = 0..=35;

/// Every registered identity, in report order.
pub fn registry() -> Vec<IdentityCheck> {
    vec![
        IdentityCheck {
            id: "THM_JCRANK",
            statement: "#{λ ⊢ n : crank(λ) ≥ j} = #{λ ⊢ n : mex_j(λ) − j odd}",
            lhs: "crank_geq(j, n) from the p(n) recurrence",
            rhs: "enumeration: mex_j(λ) − j odd; combinatorial crank ≥ j for n ≥ 2",
            grid: Grid {
                main: ORACLE_N,
                oracle: Some(ORACLE_N),
                aux: Some(("j", 0..=10)),
            },
            eval: thm_jcrank,
        },
        IdentityCheck {
            id: "COR_CRANKRECUR",
            statement: "M(j,n) = Σ_{k≥1} (−1)^{k+1} [p(n − k(k+2j−1)/2) − p(n − k(k+2j+1)/2)]",
            lhs: "crank_count(m, n)",
            rhs: "enumeration of crank m (n ≥ 2); [q^n] of the crank generating function",
            grid: Grid {
                main: 0..=100,
                oracle: Some(ORACLE_N),
                aux: Some(("m", -12..=12)),
            },
            eval: cor_crankrecur,
        },
        IdentityCheck {
            id: "PROP_MEXFORM",
            statement: "x(m,n) = p(n − t_{m−1}) − p(n − t_m)",
            lhs: "mex_count(m, n)",
            rhs: "enumeration of mex m; p(n) for the sum over m",
            grid: Grid {
                main: 0..=200,
                oracle: Some(ORACLE_N),
                aux: Some(("m", 1..=9)),
            },
            eval: prop_mexform,
        },
        IdentityCheck {
            id: "COR_0CRANK",
            statement: "M(0,n) = p(n) + 2 Σ_{k≥1} (−1)^k p(n − k(k+1)/2)",
            lhs: "triangular-number expansion",
            rhs: "crank_count(0, n); enumeration of crank 0 (n ≥ 2)",
            grid: Grid {
                main: 0..=300,
                oracle: Some(ORACLE_N),
                aux: None,
            },
            eval: cor_0crank,
        },
        IdentityCheck {
            id: "PROP_NOF0",
            statement: "M(0,n) = F(n) − F(n−1), F(n) = #{λ ⊢ n : Frobenius symbol has no 0}",
            lhs: "crank_count(0, n); [q^n] of Σ q^(s²+2s)/(q)_s²",
            rhs: "coefficient difference of Σ q^(s²+2s)/(q)_s²; enumeration of Frobenius symbols",
            grid: Grid {
                main: 0..=200,
                oracle: Some(ORACLE_N),
                aux: None,
            },
            eval: prop_nof0,
        },
        IdentityCheck {
            id: "THM_FROB_J",
            statement: "#{λ ⊢ n : crank ≥ j} = #{λ ⊢ n − j : no j in the Frobenius top row}",
            lhs: "crank_geq(j, n)",
            rhs:
                "[q^(n−j)] (1/(q)_∞) Σ_b (−1)^b q^(b(b+1)/2 + jb); enumeration of Frobenius symbols",
            grid: Grid {
                main: 0..=200,
                oracle: Some(ORACLE_N),
                aux: Some(("j", 0..=8)),
            },
            eval: thm_frob_j,
        },
        IdentityCheck {
            id: "PROP_O13",
            statement: "o_1(n) − o_3(n) = q(n/2) for even n, 0 for odd n (n ≥ 1)",
            lhs: "o_1(n) − o_3(n) from mex_count",
            rhs: "q(n/2) or 0; enumeration of mex classes and distinct-part partitions",
            grid: Grid {
                main: 1..=400,
                oracle: Some(1..=35),
                aux: None,
            },
            eval: prop_o13,
        },
        IdentityCheck {
            id: "EWELL_EVEN",
            statement: "Σ_j (−1)^{t_j} p(2k − t_j) = q(k)",
            lhs: "ewell_even(k)",
            rhs: "q_distinct(k); [q^k] of (−q;q)_∞",
            grid: Grid {
                main: 0..=300,
                oracle: None,
                aux: None,
            },
            eval: ewell_even_check,
        },
        IdentityCheck {
            id: "EWELL_ODD",
            statement: "Σ_j (−1)^{t_j} p(2k + 1 − t_j) = 0",
            lhs: "ewell_odd(k)",
            rhs: "0",
            grid: Grid {
                main: 0..=300,
                oracle: None,
                aux: None,
            },
            eval: ewell_odd_check,
        },
        IdentityCheck {
            id: "THM_AN_PARITY",
            statement: "o(n) is odd exactly when n = j(3j ± 1)",
            lhs: "o(n) mod 2",
            rhs: "1 if n = j(3j ± 1) for some j ≥ 1, else 0",
            grid: Grid {
                main: 1..=2000,
                oracle: None,
                aux: None,
            },
            eval: thm_an_parity,
        },
        IdentityCheck {
            id: "INEQ_OE",
            statement: "o(n) > e(n) for n > 2",
            lhs: "o(n)",
            rhs: "e(n)",
            grid: Grid {
                main: 3..=1000,
                oracle: None,
                aux: None,
            },
            eval: ineq_oe,
        },
        IdentityCheck {
            id: "SERIES_HEINE",
            statement: "(1 − q) Σ_s q^(s²+2s)/(q)_s² = (q)_∞ Σ_k q^(2k)/(q)_k² = Σ_n M(0,n) q^n",
            lhs: "(1 − q) Σ_s q^(s²+2s)/(q)_s²; crank-0 alternative series",
            rhs: "(q)_∞ Σ_k q^(2k)/(q)_k²; crank generating function at m = 0",
            grid: Grid {
                main: 0..=200,
                oracle: None,
                aux: None,
            },
            eval: series_heine,
        },
        IdentityCheck {
            id: "DURFEE_RECT",
            statement: "Σ_s q^(s(s+b)) / ((q)_s (q)_(s+b)) = 1/(q)_∞ for every b ≥ 0",
            lhs: "Durfee-rectangle sum",
            rhs: "1/(q)_∞",
            grid: Grid {
                main: 0..=200,
                oracle: None,
                aux: Some(("b", 0..=10)),
            },
            eval: durfee_rect,
        },
        IdentityCheck {
            id: "CRANK_GF_CONSISTENCY",
            statement:
                "Σ_n M(m,n) q^n = (1/(q)_∞) Σ_{n≥1} (−1)^{n−1} q^(n(n−1)/2 + n|m|) (1 − q^n)",
            lhs: "crank_count(m, n)",
            rhs: "[q^n] of the crank generating function",
            grid: Grid {
                main: 0..=300,
                oracle: None,
                aux: Some(("m", 0..=12)),
            },
            eval: crank_gf_consistency,
        },
    ]
}

fn eq(
    c: &IdentityCheck,
    variant: &'static str,
    params: &[(&'static str, i64)],
    lhs: BigInt,
    rhs: BigInt,
) -> Record {
    Record::new(c.id, variant, params, lhs, rhs, Relation::Equal)
}

fn cross(a: &RangeInclusive<i64>, b: &RangeInclusive<i64>) -> Vec<(i64, i64)> {
    a.clone()
        .flat_map(|x| b.clone().map(move |y| (x, y)))
        .collect()
}

fn from(start: i64, r: &RangeInclusive<i64>) -> RangeInclusive<i64> {
    start.max(*r.start())..=*r.end()
}

/// Points of `main` in order, as a vector.
fn points(r: &RangeInclusive<i64>) -> Vec<i64> {
    r.clone().collect()
}

fn order_of(r: &RangeInclusive<i64>) -> usize {
    (*r.end()).max(0) as usize
}

fn thm_jcrank(c: &IdentityCheck, g: &Resolved) -> Result<Vec<Record>> {
    let mut out = par_records(cross(&g.aux, &g.oracle), |&(j, n)| {
        let ju = j as u64;
        let oracle = oracle_count(n, g.budget, |p| mex_j_minus_j_odd(p, ju))?;
        Ok(eq(
            c,
            "mex_j_oracle",
            &[("j", j), ("n", n)],
            crank_geq(ju, n),
            oracle,
        ))
    })?;
    out.extend(par_records(
        cross(&g.aux, &from(2, &g.oracle)),
        |&(j, n)| {
            let oracle = oracle_count(n, g.budget, |p| p.crank() >= j)?;
            Ok(eq(
                c,
                "crank_oracle",
                &[("j", j), ("n", n)],
                crank_geq(j as u64, n),
                oracle,
            ))
        },
    )?);
    if g.oracle.contains(&1) {
        out.extend(par_records(points(&g.aux), |&j| {
            let oracle = oracle_count(1, g.budget, |p| p.crank() >= j)?;
            let adjusted = crank_geq(j as u64, 1) - n1_crank_geq_offset(j as u64);
            Ok(eq(
                c,
                "crank_oracle_n1_offset",
                &[("j", j), ("n", 1)],
                adjusted,
                oracle,
            ))
        })?);
    }
    Ok(out)
}

fn cor_crankrecur(c: &IdentityCheck, g: &Resolved) -> Result<Vec<Record>> {
    let mut out = par_records(cross(&g.aux, &from(2, &g.oracle)), |&(m, n)| {
        let oracle = oracle_count(n, g.budget, |p| p.crank() == m)?;
        Ok(eq(
            c,
            "crank_oracle",
            &[("m", m), ("n", n)],
            crank_count(m, n),
            oracle,
        ))
    })?;
    if g.oracle.contains(&1) {
        out.extend(par_records(points(&g.aux), |&m| {
            let oracle = oracle_count(1, g.budget, |p| p.crank() == m)?;
            let adjusted = crank_count(m, 1) - n1_crank_offset(m);
            Ok(eq(
                c,
                "crank_oracle_n1_offset",
                &[("m", m), ("n", 1)],
                adjusted,
                oracle,
            ))
        })?);
    }
    let order = order_of(&g.main);
    let ms: Vec<i64> = g.aux.clone().filter(|&m| m >= 0).collect();
    let series: Vec<TruncatedSeries> = ms
        .par_iter()
        .map(|&m| gf(GfKind::CrankM { m }, order))
        .collect::<Result<_>>()?;
    for (m, s) in ms.iter().zip(&series) {
        out.extend(par_records(points(&g.main), |&n| {
            Ok(eq(
                c,
                "series",
                &[("m", *m), ("n", n)],
                crank_count(*m, n),
                s.coeff_at(n),
            ))
        })?);
    }
    Ok(out)
}

fn prop_mexform(c: &IdentityCheck, g: &Resolved) -> Result<Vec<Record>> {
    let mut out = par_records(cross(&g.aux, &g.oracle), |&(m, n)| {
        let oracle = oracle_count(n, g.budget, |p| p.mex() == m as u64)?;
        Ok(eq(
            c,
            "mex_oracle",
            &[("m", m), ("n", n)],
            mex_count(m as u64, n),
            oracle,
        ))
    })?;
    out.extend(par_records(points(&g.main), |&n| {
        let mut total = BigInt::zero();
        for m in 1u64.. {
            let x = mex_count(m, n);
            if x.is_zero() && (m * (m - 1) / 2) as i64 > n {
                break;
            }
            total += x;
        }
        Ok(eq(c, "sum_over_m", &[("n", n)], total, p_of(n)))
    })?);
    Ok(out)
}

fn cor_0crank(c: &IdentityCheck, g: &Resolved) -> Result<Vec<Record>> {
    let mut out = par_records(points(&g.main), |&n| {
        Ok(eq(
            c,
            "crank_count",
            &[("n", n)],
            crank_zero_expansion(n),
            crank_count(0, n),
        ))
    })?;
    out.extend(par_records(points(&from(2, &g.oracle)), |&n| {
        let oracle = oracle_count(n, g.budget, |p| p.crank() == 0)?;
        Ok(eq(
            c,
            "crank_oracle",
            &[("n", n)],
            crank_zero_expansion(n),
            oracle,
        ))
    })?);
    if g.oracle.contains(&1) {
        let oracle = oracle_count(1, g.budget, |p| p.crank() == 0)?;
        let adjusted = crank_zero_expansion(1) - n1_crank_offset(0);
        out.push(eq(
            c,
            "crank_oracle_n1_offset",
            &[("n", 1)],
            adjusted,
            oracle,
        ));
    }
    Ok(out)
}

fn prop_nof0(c: &IdentityCheck, g: &Resolved) -> Result<Vec<Record>> {
    let f = gf(GfKind::FrobNo0, order_of(&g.main))?;
    let mut out = par_records(points(&g.main), |&n| {
        let diff = f.coeff_at(n) - f.coeff_at(n - 1);
        Ok(eq(c, "series", &[("n", n)], crank_count(0, n), diff))
    })?;
    out.extend(par_records(points(&g.oracle), |&n| {
        let oracle = oracle_count(n, g.budget, frobenius_no_zero)?;
        Ok(eq(
            c,
            "frobenius_oracle",
            &[("n", n)],
            f.coeff_at(n),
            oracle,
        ))
    })?);
    out.extend(par_records(points(&g.oracle), |&n| {
        let diff = oracle_count(n, g.budget, frobenius_no_zero)?
            - oracle_count(n - 1, g.budget, frobenius_no_zero)?;
        Ok(eq(
            c,
            "difference_oracle",
            &[("n", n)],
            crank_count(0, n),
            diff,
        ))
    })?);
    Ok(out)
}

fn thm_frob_j(c: &IdentityCheck, g: &Resolved) -> Result<Vec<Record>> {
    let order = order_of(&g.main);
    let js = points(&g.aux);
    let series: Vec<TruncatedSeries> = js
        .par_iter()
        .map(|&j| gf(GfKind::FrobNoJTop { j }, order))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for (&j, s) in js.iter().zip(&series) {
        out.extend(par_records(points(&from(j, &g.main)), |&n| {
            Ok(eq(
                c,
                "series",
                &[("j", j), ("n", n)],
                crank_geq(j as u64, n),
                s.coeff_at(n - j),
            ))
        })?);
    }
    for &j in &js {
        out.extend(par_records(points(&from(j, &g.oracle)), |&n| {
            let oracle = oracle_count(n - j, g.budget, |p| frobenius_top_lacks(p, j as u64))?;
            Ok(eq(
                c,
                "frobenius_oracle",
                &[("j", j), ("n", n)],
                crank_geq(j as u64, n),
                oracle,
            ))
        })?);
    }
    Ok(out)
}

fn prop_o13(c: &IdentityCheck, g: &Resolved) -> Result<Vec<Record>> {
    let mut out = par_records(points(&g.main), |&n| {
        Ok(eq(
            c,
            "formula",
            &[("n", n)],
            mex_1_mod_4(n) - mex_3_mod_4(n),
            mex_mod_4_gap(n),
        ))
    })?;
    out.extend(par_records(points(&g.oracle), |&n| {
        let o1 = oracle_count(n, g.budget, |p| p.mex() % 4 == 1)?;
        let o3 = oracle_count(n, g.budget, |p| p.mex() % 4 == 3)?;
        let rhs = if n % 2 == 0 {
            oracle_count(n / 2, g.budget, |p| p.has_distinct_parts())?
        } else {
            BigInt::zero()
        };
        Ok(eq(c, "oracle", &[("n", n)], o1 - o3, rhs))
    })?);
    Ok(out)
}

fn ewell_even_check(c: &IdentityCheck, g: &Resolved) -> Result<Vec<Record>> {
    let mut out = par_records(points(&g.main), |&k| {
        Ok(eq(
            c,
            "q_distinct",
            &[("k", k)],
            ewell_even(k as u64),
            q_distinct(k),
        ))
    })?;
    let distinct = gf(GfKind::Distinct, order_of(&g.main))?;
    out.extend(par_records(points(&g.main), |&k| {
        Ok(eq(
            c,
            "distinct_series",
            &[("k", k)],
            ewell_even(k as u64),
            distinct.coeff_at(k),
        ))
    })?);
    Ok(out)
}

fn ewell_odd_check(c: &IdentityCheck, g: &Resolved) -> Result<Vec<Record>> {
    par_records(points(&g.main), |&k| {
        Ok(eq(
            c,
            "zero",
            &[("k", k)],
            ewell_odd(k as u64),
            BigInt::zero(),
        ))
    })
}

fn thm_an_parity(c: &IdentityCheck, g: &Resolved) -> Result<Vec<Record>> {
    par_records(points(&g.main), |&n| {
        let parity = odd_mex(n) % 2;
        let predicted = BigInt::from(u8::from(is_double_pentagonal(n as u64)));
        Ok(eq(c, "parity", &[("n", n)], parity, predicted))
    })
}

fn ineq_oe(c: &IdentityCheck, g: &Resolved) -> Result<Vec<Record>> {
    par_records(points(&g.main), |&n| {
        Ok(Record::new(
            c.id,
            "strict",
            &[("n", n)],
            odd_mex(n),
            even_mex(n),
            Relation::Greater,
        ))
    })
}

/// `1 / (q)_k^2`, built from the finite product and a generic inversion.
fn inverse_square_pochhammer(k: usize, order: usize) -> Result<TruncatedSeries> {
    let pk = pochhammer_finite(k, order);
    (&pk * &pk).invert()
}

fn series_heine(c: &IdentityCheck, g: &Resolved) -> Result<Vec<Record>> {
    let order = order_of(&g.main);
    let terms = |step: fn(usize) -> usize| -> Result<TruncatedSeries> {
        let idx: Vec<usize> = (0..).take_while(|&s| step(s) <= order).collect();
        let parts: Vec<TruncatedSeries> = idx
            .par_iter()
            .map(|&s| Ok(inverse_square_pochhammer(s, order)?.shift(step(s))))
            .collect::<Result<_>>()?;
        Ok(parts
            .iter()
            .fold(TruncatedSeries::zero(order), |acc, t| &acc + t))
    };
    let one_minus_q = {
        let mut s = TruncatedSeries::one(order);
        s.add_term(1, -BigInt::one());
        s
    };
    let lhs = &one_minus_q * &terms(|s| s * s + 2 * s)?;
    let rhs = &gf(GfKind::PochQInf, order)? * &terms(|k| 2 * k)?;
    let mut out = par_records(points(&g.main), |&n| {
        Ok(eq(
            c,
            "heine",
            &[("n", n)],
            lhs.coeff_at(n),
            rhs.coeff_at(n),
        ))
    })?;
    let alt = gf(GfKind::Crank0Alt, order)?;
    let crank0 = gf(GfKind::CrankM { m: 0 }, order)?;
    out.extend(par_records(points(&g.main), |&n| {
        Ok(eq(
            c,
            "crank0_alt",
            &[("n", n)],
            alt.coeff_at(n),
            crank0.coeff_at(n),
        ))
    })?);
    Ok(out)
}

fn durfee_rect(c: &IdentityCheck, g: &Resolved) -> Result<Vec<Record>> {
    let order = order_of(&g.main);
    let euler = gf(GfKind::EulerInv, order)?;
    let bs = points(&g.aux);
    let series: Vec<TruncatedSeries> = bs
        .par_iter()
        .map(|&b| gf(GfKind::DurfeeRectB { b }, order))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for (&b, s) in bs.iter().zip(&series) {
        out.extend(par_records(points(&g.main), |&n| {
            Ok(eq(
                c,
                "euler",
                &[("b", b), ("n", n)],
                s.coeff_at(n),
                euler.coeff_at(n),
            ))
        })?);
    }
    Ok(out)
}

fn crank_gf_consistency(c: &IdentityCheck, g: &Resolved) -> Result<Vec<Record>> {
    let order = order_of(&g.main);
    let ms = points(&g.aux);
    let series: Vec<TruncatedSeries> = ms
        .par_iter()
        .map(|&m| gf(GfKind::CrankM { m }, order))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for (&m, s) in ms.iter().zip(&series) {
        out.extend(par_records(points(&g.main), |&n| {
            Ok(eq(
                c,
                "series",
                &[("m", m), ("n", n)],
                crank_count(m, n),
                s.coeff_at(n),
            ))
        })?);
    }
    Ok(out)
}

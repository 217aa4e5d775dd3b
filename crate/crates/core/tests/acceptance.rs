//! Exit criteria. Every comparison is exact integer equality; each
//! criterion prints one PASS/FAIL line and any failure makes the run exit 1.

use std::process::Command;
use std::time::{Duration, Instant};

use mexcrank::counting::{
    crank_count, crank_geq, crank_zero_expansion, even_mex, ewell_even, ewell_odd,
    is_double_pentagonal, mex_1_mod_4, mex_3_mod_4, mex_count, odd_mex,
};
use mexcrank::partitions::{enumerate, p_of, q_distinct, PartitionNumbers};
use mexcrank::series::{gf, GfKind};
use mexcrank::verify::{find_check, run_check, Perturbation, RunConfig};
use num_bigint::BigInt;

fn verdict(id: &str, what: &str, failures: &[String]) -> bool {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("[{status}] {id}: {what}");
    for f in failures.iter().take(10) {
        println!("        {f}");
    }
    failures.is_empty()
}

fn within(id: &str, elapsed: Duration, limit: Duration) -> Option<String> {
    (elapsed >= limit).then(|| format!("{id}: took {elapsed:.2?}, limit {limit:.0?}"))
}

fn big(v: i64) -> BigInt {
    v.into()
}

fn ac01_oracle_sweep() -> bool {
    let start = Instant::now();
    let mut bad = Vec::new();
    let frob_no0 = gf(GfKind::FrobNo0, 35).unwrap();
    for n in 0..=35i64 {
        let mut total = 0i64;
        let mut by_mex = [0i64; 10];
        let mut frob = 0i64;
        let mut by_crank = std::collections::BTreeMap::<i64, i64>::new();
        for p in enumerate(n as u64) {
            total += 1;
            by_mex[p.mex() as usize] += 1;
            frob += i64::from(!p.to_frobenius().contains(0));
            *by_crank.entry(p.crank()).or_default() += 1;
        }
        let mut cmp = |what: String, formula: BigInt, oracle: i64| {
            if formula != big(oracle) {
                bad.push(format!("{what}: formula {formula}, enumeration {oracle}"));
            }
        };
        cmp(format!("p({n})"), p_of(n), total);
        for m in 1..=9u64 {
            cmp(format!("x({m},{n})"), mex_count(m, n), by_mex[m as usize]);
        }
        let class = |f: fn(u64) -> bool| {
            (1..10u64)
                .filter(|&m| f(m))
                .map(|m| by_mex[m as usize])
                .sum()
        };
        cmp(format!("o({n})"), odd_mex(n), class(|m| m % 2 == 1));
        cmp(format!("e({n})"), even_mex(n), class(|m| m % 2 == 0));
        cmp(format!("o1({n})"), mex_1_mod_4(n), class(|m| m % 4 == 1));
        cmp(format!("o3({n})"), mex_3_mod_4(n), class(|m| m % 4 == 3));
        cmp(format!("F({n})"), frob_no0.coeff_at(n), frob);
        if n >= 2 {
            for m in -12..=12 {
                let c = by_crank.get(&m).copied().unwrap_or(0);
                cmp(format!("M({m},{n})"), crank_count(m, n), c);
            }
            for j in 0..=10i64 {
                let c = by_crank.range(j..).map(|(_, v)| v).sum();
                cmp(format!("crank_geq({j},{n})"), crank_geq(j as u64, n), c);
            }
        }
    }
    bad.extend(within("AC1", start.elapsed(), Duration::from_secs(60)));
    verdict(
        "AC1",
        "enumeration counts equal formula values for n <= 35",
        &bad,
    )
}

fn ac02_mex_j_theorem() -> bool {
    let mut bad = Vec::new();
    for n in 0..=35i64 {
        let parts: Vec<_> = enumerate(n as u64).collect();
        for j in 0..=10u64 {
            let count = parts
                .iter()
                .filter(|p| p.mex_j(j).map(|m| (m - j) % 2 == 1).unwrap_or(false))
                .count() as i64;
            if crank_geq(j, n) != big(count) {
                bad.push(format!(
                    "j={j} n={n}: crank_geq {} vs mex_j count {count}",
                    crank_geq(j, n)
                ));
            }
        }
    }
    verdict(
        "AC2",
        "mex_j(λ) − j odd counts equal crank_geq(j,n), j <= 10, n <= 35",
        &bad,
    )
}

fn ac03_crank_series_consistency() -> bool {
    let start = Instant::now();
    let mut bad = Vec::new();
    for m in 0..=12 {
        let s = gf(GfKind::CrankM { m }, 300).unwrap();
        for n in 0..=300 {
            if s.coeff_at(n) != crank_count(m, n) {
                bad.push(format!("m={m} n={n}"));
            }
        }
    }
    bad.extend(within("AC3", start.elapsed(), Duration::from_secs(30)));
    verdict(
        "AC3",
        "crank generating function coefficients equal M(m,n), m <= 12, n <= 300",
        &bad,
    )
}

fn ac04_crank_zero_expansion() -> bool {
    let mut bad: Vec<String> = (0..=300)
        .filter(|&n| crank_zero_expansion(n) != crank_count(0, n))
        .map(|n| format!("n={n}"))
        .collect();
    let first: Vec<BigInt> = (0..=5).map(crank_zero_expansion).collect();
    if first != [1, -1, 0, 1, 1, 1].map(big) {
        bad.push(format!("n=0..5 gives {first:?}"));
    }
    verdict(
        "AC4",
        "triangular expansion of M(0,n) matches, n <= 300",
        &bad,
    )
}

fn ac05_crank_zero_frobenius_difference() -> bool {
    let f = gf(GfKind::FrobNo0, 200).unwrap();
    let mut bad: Vec<String> = (0..=200)
        .filter(|&n| crank_count(0, n) != f.coeff_at(n) - f.coeff_at(n - 1))
        .map(|n| format!("n={n}"))
        .collect();
    if !(crank_count(0, 1) == big(-1) && f.coeff_at(1) == big(0) && f.coeff_at(0) == big(1)) {
        bad.push("M(0,1) = F(1) − F(0) = −1 not reproduced".into());
    }
    verdict("AC5", "M(0,n) = F(n) − F(n−1), n <= 200", &bad)
}

fn ac06_frobenius_top_row() -> bool {
    let mut bad = Vec::new();
    for j in 0..=8i64 {
        let s = gf(GfKind::FrobNoJTop { j }, 200).unwrap();
        for n in j..=200 {
            if crank_geq(j as u64, n) != s.coeff_at(n - j) {
                bad.push(format!("j={j} n={n}"));
            }
        }
    }
    verdict(
        "AC6",
        "crank_geq(j,n) = [q^(n−j)] of the no-j-top-row series, j <= 8, n <= 200",
        &bad,
    )
}

fn ac07_mex_mod_4() -> bool {
    let bad: Vec<String> = (1..=400i64)
        .filter(|&n| {
            let want = if n % 2 == 0 {
                q_distinct(n / 2)
            } else {
                big(0)
            };
            mex_1_mod_4(n) - mex_3_mod_4(n) != want
        })
        .map(|n| format!("n={n}"))
        .collect();
    verdict("AC7", "o1(n) − o3(n) = q(n/2) or 0, n <= 400", &bad)
}

fn ac08_ewell() -> bool {
    let bad: Vec<String> = (0..=300u64)
        .filter(|&k| ewell_even(k) != q_distinct(k as i64) || ewell_odd(k) != big(0))
        .map(|k| format!("k={k}"))
        .collect();
    verdict(
        "AC8",
        "ewell_even(k) = q(k), ewell_odd(k) = 0, k <= 300",
        &bad,
    )
}

fn ac09_odd_mex_parity() -> bool {
    let bad: Vec<String> = (1..=2000i64)
        .filter(|&n| (odd_mex(n) % 2 == big(1)) != is_double_pentagonal(n as u64))
        .map(|n| format!("n={n}"))
        .collect();
    verdict("AC9", "o(n) odd exactly at n = j(3j ± 1), n <= 2000", &bad)
}

fn ac10_odd_beats_even() -> bool {
    let bad: Vec<String> = (3..=1000i64)
        .filter(|&n| odd_mex(n) <= even_mex(n))
        .map(|n| format!("n={n}"))
        .collect();
    verdict("AC10", "o(n) > e(n) for 2 < n <= 1000", &bad)
}

fn ac11_series_identities() -> bool {
    let mut bad = Vec::new();
    for id in ["SERIES_HEINE", "DURFEE_RECT"] {
        let report = run_check(&find_check(id).unwrap(), &RunConfig::default()).unwrap();
        if !report.passed() {
            bad.push(format!("{id}: {:?}", report.first_counterexample));
        }
        if report.records.iter().map(|r| r.param("n").unwrap()).max() != Some(200) {
            bad.push(format!("{id}: did not reach order 200"));
        }
    }
    let durfee_bs: std::collections::BTreeSet<i64> =
        run_check(&find_check("DURFEE_RECT").unwrap(), &RunConfig::default())
            .unwrap()
            .records
            .iter()
            .map(|r| r.param("b").unwrap())
            .collect();
    if durfee_bs != (0..=10).collect() {
        bad.push(format!("DURFEE_RECT covered b = {durfee_bs:?}"));
    }
    if gf(GfKind::Crank0Alt, 200).unwrap() != gf(GfKind::CrankM { m: 0 }, 200).unwrap() {
        bad.push("CRANK0_ALT differs from CRANK_M{0}".into());
    }
    verdict(
        "AC11",
        "Heine, Durfee rectangles (b <= 10) and crank-0 series agree to order 200",
        &bad,
    )
}

fn ac12_partition_numbers() -> bool {
    let mut bad = Vec::new();
    let start = Instant::now();
    let table = PartitionNumbers::up_to(5000);
    let elapsed = start.elapsed();
    let want: BigInt =
        "169820168825442121851975101689306431361757683049829233322203824652329144349"
            .parse()
            .unwrap();
    if table.p(5000) != want {
        bad.push(format!("p(5000) = {}", table.p(5000)));
    }
    bad.extend(within("p(5000)", elapsed, Duration::from_secs(5)));
    let by_series = gf(GfKind::PochQInf, 100)
        .unwrap()
        .invert()
        .unwrap()
        .coeff_at(100);
    let p100 = big(190_569_292);
    if p_of(100) != p100 || by_series != p100 {
        bad.push(format!(
            "p(100): recurrence {}, series {by_series}",
            p_of(100)
        ));
    }
    verdict(
        "AC12",
        "p(5000) in under 5 s; p(100) = 190569292 two ways",
        &bad,
    )
}

fn ac13_harness_integrity() -> bool {
    let mut bad = Vec::new();
    let config = RunConfig {
        perturbation: Some(Perturbation {
            param: "n".into(),
            value: 10,
            delta: 1,
        }),
        ..RunConfig::default()
    };
    let report = run_check(&find_check("COR_0CRANK").unwrap(), &config).unwrap();
    match &report.first_counterexample {
        Some(r) if r.param("n") == Some(10) && !report.passed() => {}
        other => bad.push(format!("perturbed check not caught: {other:?}")),
    }
    let out = Command::new(env!("CARGO_BIN_EXE_mexcrank"))
        .args(["verify", "--all"])
        .env_remove("MEXCRANK_BUDGET")
        .output()
        .unwrap();
    if out.status.code() != Some(0) {
        bad.push(format!("verify --all exited with {:?}", out.status.code()));
    }
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    if doc["all_pass"] != serde_json::Value::Bool(true) {
        bad.push("verify --all report has all_pass != true".into());
    }
    verdict(
        "AC13",
        "perturbed identity fails with a counterexample; verify --all exits 0",
        &bad,
    )
}

fn main() {
    let criteria: &[fn() -> bool] = &[
        ac01_oracle_sweep,
        ac02_mex_j_theorem,
        ac03_crank_series_consistency,
        ac04_crank_zero_expansion,
        ac05_crank_zero_frobenius_difference,
        ac06_frobenius_top_row,
        ac07_mex_mod_4,
        ac08_ewell,
        ac09_odd_mex_parity,
        ac10_odd_beats_even,
        ac11_series_identities,
        ac12_partition_numbers,
        ac13_harness_integrity,
    ];
    let start = Instant::now();
    let failed = criteria.iter().filter(|c| !c()).count();
    println!(
        "acceptance: {} criteria, {failed} failed, {:.2?}",
        criteria.len(),
        start.elapsed()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

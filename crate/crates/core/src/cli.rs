//! The `mexcrank` command line.
//!
//! Machine-readable output goes to the `out` writer and diagnostics to
//! `err`. Exit codes: 0 success, 1 a verification failure, 2 a usage error.

use std::collections::BTreeMap;
use std::io::Write;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::json;

use crate::counting::{
    crank_count, crank_geq, crank_zero_expansion, even_mex, mex_1_mod_4, mex_3_mod_4, mex_count,
    odd_mex,
};
use crate::partitions::{p_of, q_distinct, Partition};
use crate::series::{gf, GfKind};
use crate::verify::{self, RunConfig, VerificationReport, DEFAULT_BUDGET};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "mexcrank",
    version,
    about = "Exact partition statistics and q-series identities"
)]
pub struct Cli {
    /// Output format; defaults to csv for `table`/`series` and json otherwise.
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,

    /// Omit the csv header row.
    #[arg(long, global = true)]
    pub no_header: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate a counting function over n = 0..=n_max.
    Table(TableArgs),
    /// Expand a named generating function to a given order.
    Series(SeriesArgs),
    /// Statistics of a single partition given by its parts.
    Stat(StatArgs),
    /// Run identity checks.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFn {
    /// M(m, n), partitions with crank m (needs --m)
    #[value(name = "M")]
    M,
    /// partitions with crank >= j (needs --j)
    #[value(name = "crank_geq")]
    CrankGeq,
    /// x(m, n), partitions with mex m (needs --m >= 1)
    #[value(name = "x")]
    X,
    #[value(name = "o")]
    O,
    #[value(name = "e")]
    E,
    #[value(name = "o1")]
    O1,
    #[value(name = "o3")]
    O3,
    #[value(name = "p")]
    P,
    #[value(name = "q")]
    Q,
    /// crank-zero count from the triangular-number expansion
    #[value(name = "m0")]
    M0,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long = "fn", value_enum)]
    pub function: TableFn,
    #[arg(long, allow_negative_numbers = true)]
    pub m: Option<i64>,
    #[arg(long)]
    pub j: Option<u64>,
    #[arg(long, default_value_t = 100)]
    pub n_max: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum SeriesKind {
    EulerInv,
    PochQInf,
    Distinct,
    CrankM,
    CrankGeq,
    FrobNo0,
    Crank0Alt,
    FrobNojTop,
    DurfeeRect,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(long, value_enum)]
    pub kind: SeriesKind,
    #[arg(long, allow_negative_numbers = true)]
    pub m: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    pub j: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    pub b: Option<i64>,
    #[arg(long, default_value_t = 200)]
    pub order: usize,
}

#[derive(Debug, Args)]
pub struct StatArgs {
    /// Parts in any order; they are sorted before use.
    #[arg(allow_negative_numbers = true)]
    pub parts: Vec<i64>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("selection").required(true).args(["all", "check"])))]
pub struct VerifyArgs {
    #[arg(long)]
    pub all: bool,
    /// Check id; may be repeated.
    #[arg(long)]
    pub check: Vec<String>,
    /// Upper end of each check's main range.
    #[arg(long)]
    pub n_max: Option<u64>,
    /// Largest n the enumeration oracles may visit.
    #[arg(long, env = "MEXCRANK_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[arg(long)]
    pub workers: Option<usize>,
    /// Self-test: add DELTA to every right-hand side where PARAM == VALUE.
    #[arg(long, hide = true, value_name = "PARAM=VALUE:DELTA")]
    pub perturb: Option<verify::Perturbation>,
    /// Rejected: every check is exact.
    #[arg(long, hide = true)]
    pub tolerance: Option<String>,
}

struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let result = match &cli.command {
        Command::Table(a) => cmd_table(&cli, a, out),
        Command::Series(a) => cmd_series(&cli, a, out),
        Command::Stat(a) => cmd_stat(&cli, a, out),
        Command::Verify(a) => cmd_verify(&cli, a, out, err),
    };
    match result {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn decimal(v: &BigInt) -> String {
    v.to_string()
}

fn write_rows(
    cli: &Cli,
    out: &mut dyn Write,
    header: [&str; 2],
    rows: impl Iterator<Item = (u64, BigInt)>,
) -> Result<(), Usage> {
    match cli.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            if !cli.no_header {
                writeln!(out, "{},{}", header[0], header[1])?;
            }
            for (n, v) in rows {
                writeln!(out, "{n},{v}")?;
            }
        }
        Format::Json => {
            let records: Vec<_> = rows
                .map(|(n, v)| json!({ header[0]: n, header[1]: decimal(&v) }))
                .collect();
            writeln!(out, "{}", serde_json::to_string(&records)?)?;
        }
    }
    Ok(())
}

fn cmd_table(cli: &Cli, a: &TableArgs, out: &mut dyn Write) -> Result<i32, Usage> {
    let need_m = || {
        a.m.ok_or_else(|| Usage("--fn M and --fn x need --m".into()))
    };
    let f: Box<dyn Fn(i64) -> BigInt> = match a.function {
        TableFn::M => {
            let m = need_m()?;
            Box::new(move |n| crank_count(m, n))
        }
        TableFn::CrankGeq => {
            let j =
                a.j.ok_or_else(|| Usage("--fn crank_geq needs --j".into()))?;
            Box::new(move |n| crank_geq(j, n))
        }
        TableFn::X => {
            let m = need_m()?;
            if m < 1 {
                return Err(Usage(format!("the mex is positive; got --m {m}")));
            }
            Box::new(move |n| mex_count(m as u64, n))
        }
        TableFn::O => Box::new(odd_mex),
        TableFn::E => Box::new(even_mex),
        TableFn::O1 => Box::new(mex_1_mod_4),
        TableFn::O3 => Box::new(mex_3_mod_4),
        TableFn::P => Box::new(p_of),
        TableFn::Q => Box::new(q_distinct),
        TableFn::M0 => Box::new(crank_zero_expansion),
    };
    write_rows(
        cli,
        out,
        ["n", "value"],
        (0..=a.n_max).map(|n| (n, f(n as i64))),
    )?;
    Ok(EXIT_OK)
}

fn cmd_series(cli: &Cli, a: &SeriesArgs, out: &mut dyn Write) -> Result<i32, Usage> {
    let name = a.kind.to_possible_value().map(|v| v.get_name().to_owned());
    let need = |v: Option<i64>, flag: &str| {
        v.ok_or_else(|| {
            Usage(format!(
                "--kind {} needs --{flag}",
                name.as_deref().unwrap_or("?")
            ))
        })
    };
    let kind = match a.kind {
        SeriesKind::EulerInv => GfKind::EulerInv,
        SeriesKind::PochQInf => GfKind::PochQInf,
        SeriesKind::Distinct => GfKind::Distinct,
        SeriesKind::CrankM => GfKind::CrankM { m: need(a.m, "m")? },
        SeriesKind::CrankGeq => GfKind::CrankGeqJ { j: need(a.j, "j")? },
        SeriesKind::FrobNo0 => GfKind::FrobNo0,
        SeriesKind::Crank0Alt => GfKind::Crank0Alt,
        SeriesKind::FrobNojTop => GfKind::FrobNoJTop { j: need(a.j, "j")? },
        SeriesKind::DurfeeRect => GfKind::DurfeeRectB { b: need(a.b, "b")? },
    };
    let series = gf(kind, a.order)?;
    let rows = series
        .into_coeffs()
        .into_iter()
        .enumerate()
        .map(|(n, c)| (n as u64, c));
    write_rows(cli, out, ["n", "coefficient"], rows)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct StatRecord {
    parts: Vec<u64>,
    weight: u64,
    mex: u64,
    crank: i64,
    durfee: usize,
    frobenius: crate::partitions::FrobeniusSymbol,
    /// `mex_j` for every distinct part `j`.
    mex_j: BTreeMap<u64, u64>,
}

fn cmd_stat(cli: &Cli, a: &StatArgs, out: &mut dyn Write) -> Result<i32, Usage> {
    if cli.format == Some(Format::Csv) {
        return Err(Usage("stat writes json only".into()));
    }
    if let Some(bad) = a.parts.iter().find(|&&p| p <= 0) {
        return Err(Usage(format!("parts must be positive, got {bad}")));
    }
    let p = Partition::from_unsorted(a.parts.iter().map(|&v| v as u64).collect())?;
    let mut mex_j = BTreeMap::new();
    for &j in p.parts() {
        mex_j.insert(j, p.mex_j(j)?);
    }
    let record = StatRecord {
        parts: p.parts().to_vec(),
        weight: p.weight(),
        mex: p.mex(),
        crank: p.crank(),
        durfee: p.durfee(),
        frobenius: p.to_frobenius(),
        mex_j,
    };
    writeln!(out, "{}", serde_json::to_string(&record)?)?;
    Ok(EXIT_OK)
}

fn cmd_verify(
    cli: &Cli,
    a: &VerifyArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Usage> {
    if let Some(t) = &a.tolerance {
        return Err(Usage(format!(
            "checks use exact integer equality; --tolerance {t} is not accepted"
        )));
    }
    if a.workers == Some(0) {
        return Err(Usage("--workers must be at least 1".into()));
    }
    let checks = if a.all {
        verify::registry()
    } else {
        a.check
            .iter()
            .map(|id| verify::find_check(id))
            .collect::<Result<Vec<_>, _>>()?
    };
    let config = RunConfig {
        budget: a.budget,
        workers: a.workers,
        n_max: a.n_max.map(|n| n as i64),
        perturbation: a.perturb.clone(),
    };
    let mut reports: Vec<VerificationReport> = Vec::with_capacity(checks.len());
    for check in &checks {
        let report = match verify::run_check(check, &config) {
            Ok(r) => r,
            Err(e) => {
                writeln!(err, "{}: {e}", check.id)?;
                return Ok(EXIT_USAGE);
            }
        };
        let s = &report.summary;
        let status = if report.passed() { "pass" } else { "FAIL" };
        writeln!(
            err,
            "{status} {} ({}/{} records)",
            report.check_id, s.passed, s.total
        )?;
        reports.push(report);
    }
    let all_pass = reports.iter().all(VerificationReport::passed);
    match cli.format.unwrap_or(Format::Json) {
        Format::Json => {
            let doc = json!({ "all_pass": all_pass, "reports": reports });
            writeln!(out, "{}", serde_json::to_string(&doc)?)?;
        }
        Format::Csv => {
            if !cli.no_header {
                writeln!(out, "check_id,variant,params,lhs,rhs,relation,pass")?;
            }
            for r in reports.iter().flat_map(|r| &r.records) {
                let params: Vec<String> =
                    r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let relation = match r.relation {
                    verify::Relation::Equal => "eq",
                    verify::Relation::Greater => "gt",
                };
                writeln!(
                    out,
                    "{},{},{},{},{},{relation},{}",
                    r.check_id,
                    r.variant,
                    params.join(";"),
                    r.lhs,
                    r.rhs,
                    r.pass
                )?;
            }
        }
    }
    Ok(if all_pass { EXIT_OK } else { EXIT_FAILED })
}

//! Command-line front end. [`Cli`] is the clap grammar and [`run`] executes
//! a parsed command, returning what to print and the exit code, so the
//! binary only parses and prints.
//!
//! Exit codes: 0 ok, 1 failed hard assertion in `verify` (or no p-integral
//! candidate in `arith p-integral`), 2 bad flags, 3 bad `mu`, 4 I/O error.

pub mod output;
pub mod verify;

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::algebra::{big_rat, parse_rational, rat, Rational};
use crate::arith::{
    logconcavity_reports, p_integrality_search, p_integrality_table_check, parity_theorems_check,
    valuation_report, P_INTEGRALITY_TABLE,
};
use crate::beta_moments::{
    a_half_closed, a_mu_closed_table, a_mu_from_cumulants, a_mu_recur_table, a_neg_half_closed,
    bessel_zeta, bessel_zeta_numeric, lasalle_generalized,
};
use crate::error::Error;
use crate::hessenberg::{a_via_det_table, b_via_det_table};
use crate::narayana_poly::{gegenbauer, gen_narayana_table, narayana_poly, s_poly, NamedPoly};
use crate::report::Report;
use crate::sequences::{a_table_def, a_table_quad, a_table_sym, b_table, lasalle_a_table, Route};

pub use output::{Kind, OutputRecord};
pub use verify::Suite;

pub const THREADS_ENV: &str = "NARAYANA_LAB_THREADS";

#[derive(Parser, Debug)]
#[command(name = "narayana-lab", version, about = "Exact Narayana, beta-cumulant and Bessel zeta computations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Values 1..=n of a sequence by one route
    Seq(SeqArgs),
    /// Polynomials of one family for indices up to n
    Poly(PolyArgs),
    /// zeta_mu(2), ..., zeta_mu(2n), exact or numeric
    Zeta(ZetaArgs),
    /// Run a verification suite; exit 1 if a hard assertion fails
    Verify(VerifyArgs),
    /// Valuations, parity, p-integrality and log-concavity reports
    Arith(ArithArgs),
    /// Write a sequence or zeta table to a file
    Export(ExportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Write here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeqName {
    #[value(name = "a")]
    A,
    #[value(name = "A")]
    Lasalle,
    #[value(name = "b")]
    B,
    #[value(name = "a_mu")]
    AMu,
}

impl SeqName {
    fn label(self) -> &'static str {
        match self {
            SeqName::A => "a",
            SeqName::Lasalle => "A",
            SeqName::B => "b",
            SeqName::AMu => "a_mu",
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct SeqArgs {
    #[arg(value_enum)]
    pub name: SeqName,
    #[arg(long)]
    pub n: usize,
    /// def, quad, sym, det, closed, bernoulli, euler or cumulants, depending on the sequence
    #[arg(long)]
    pub route: Option<String>,
    /// Exact rational such as 1/2; required for a_mu
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<String>,
    /// Seed of the a_mu recurrence (route quad)
    #[arg(long, allow_hyphen_values = true)]
    pub a1: Option<String>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolyFamily {
    Narayana,
    GenNarayana,
    Gegenbauer,
    S,
}

#[derive(Args, Debug, Clone)]
pub struct PolyArgs {
    #[arg(value_enum)]
    pub family: PolyFamily,
    #[arg(long)]
    pub n: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<String>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct ZetaArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub mu: String,
    #[arg(long)]
    pub n: usize,
    /// recur (exact, default) or numeric (sum over zeros plus tail estimate)
    #[arg(long)]
    pub route: Option<String>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[arg(long)]
    pub n: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ArithTopic {
    /// nu_p(a_n) with the 2- and 3-adic claims tabulated
    Valuations,
    Parity,
    /// Search for an a_1 making a_n(mu) p-integral
    PIntegral,
    /// Rerun the p-integrality table
    PTable,
    Logconcavity,
}

#[derive(Args, Debug, Clone)]
pub struct ArithArgs {
    #[arg(value_enum)]
    pub topic: ArithTopic,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub p: Option<u64>,
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub a1: Option<String>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExportTarget {
    #[value(name = "a")]
    A,
    #[value(name = "A")]
    Lasalle,
    #[value(name = "b")]
    B,
    #[value(name = "a_mu")]
    AMu,
    #[value(name = "zeta")]
    Zeta,
}

#[derive(Args, Debug, Clone)]
pub struct ExportArgs {
    #[arg(value_enum)]
    pub target: ExportTarget,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub route: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub a1: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub out: PathBuf,
}

/// A failure with its exit code and a message for stderr.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { code: 2, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BadMu(_) => 3,
            Error::NoneFound => 1,
            _ => 2,
        };
        CliError { code, message: e.to_string() }
    }
}

/// What the binary should print and return.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn error(e: CliError) -> Self {
        Outcome { code: e.code, stdout: String::new(), stderr: format!("error: {}\n", e.message) }
    }
}

fn params<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_owned(), v)).collect()
}

fn need_n(n: usize) -> Result<usize, CliError> {
    if n == 0 {
        Err(CliError::usage("--n must be at least 1"))
    } else {
        Ok(n)
    }
}

fn parse_mu(mu: Option<&str>) -> Result<Rational, CliError> {
    let mu = mu.ok_or_else(|| CliError::usage("--mu is required"))?;
    let mu = parse_rational(mu)?;
    if mu <= rat(-1) {
        return Err(Error::BadMu(mu).into());
    }
    Ok(mu)
}

fn parse_route(route: Option<&str>, default: &str, allowed: &[&str]) -> Result<String, CliError> {
    let route = route.unwrap_or(default);
    if allowed.contains(&route) {
        Ok(route.to_owned())
    } else {
        Err(CliError::usage(format!("route {route:?} not available here; choose from {allowed:?}")))
    }
}

fn bigs(v: Vec<num_bigint::BigInt>) -> Vec<Rational> {
    v.into_iter().map(big_rat).collect()
}

fn seq_record(
    name: SeqName,
    n: usize,
    route: Option<&str>,
    mu: Option<&str>,
    a1: Option<&str>,
) -> Result<OutputRecord, CliError> {
    let n = need_n(n)?;
    let mut p = params([("name", name.label().to_owned()), ("n", n.to_string())]);
    let values = match name {
        SeqName::A => {
            let route = parse_route(route, "quad", &["def", "quad", "sym", "det", "closed"])?;
            let v = match route.parse::<Route>()? {
                Route::DefRecurrence => bigs(a_table_def(n)),
                Route::QuadraticRecurrence => bigs(a_table_quad(n)),
                Route::SymmetricRecurrence => bigs(a_table_sym(n)),
                Route::Determinant => a_via_det_table(n).into_iter().map(|s| s.value).collect(),
                _ => a_mu_closed_table(&rat(1), n)?,
            };
            p.insert("route".into(), route);
            v
        }
        SeqName::Lasalle => {
            let route = parse_route(route, "def", &["def", "closed"])?;
            let v = if route == "def" {
                bigs(lasalle_a_table(n))
            } else {
                (1..=n).map(|k| lasalle_generalized(&rat(1), k)).collect::<Result<_, _>>()?
            };
            p.insert("route".into(), route);
            v
        }
        SeqName::B => {
            let route = parse_route(route, "def", &["def", "det", "closed"])?;
            let v = match route.as_str() {
                "def" => bigs(b_table(n)),
                "det" => b_via_det_table(n).into_iter().map(|s| s.value).collect(),
                _ => a_mu_closed_table(&rat(0), n)?.into_iter().map(|x| x / rat(2)).collect(),
            };
            p.insert("route".into(), route);
            v
        }
        SeqName::AMu => {
            let mu = parse_mu(mu)?;
            let route =
                parse_route(route, "closed", &["closed", "quad", "cumulants", "bernoulli", "euler"])?;
            let v = match route.as_str() {
                "closed" => a_mu_closed_table(&mu, n)?,
                "quad" => {
                    let a1 = a1.map(parse_rational).transpose()?.unwrap_or_else(|| rat(2));
                    let v = a_mu_recur_table(&mu, n, &a1)?;
                    p.insert("a1".into(), a1.to_string());
                    v
                }
                "cumulants" => a_mu_from_cumulants(&mu, n)?,
                "bernoulli" if mu == Rational::new(1.into(), 2.into()) => (1..=n).map(a_half_closed).collect(),
                "euler" if mu == Rational::new((-1).into(), 2.into()) => (1..=n).map(a_neg_half_closed).collect(),
                r => return Err(CliError::usage(format!("route {r} needs mu = {}", if r == "bernoulli" { "1/2" } else { "-1/2" }))),
            };
            p.insert("mu".into(), mu.to_string());
            p.insert("route".into(), route);
            v
        }
    };
    if a1.is_some() && !p.contains_key("a1") {
        return Err(CliError::usage("--a1 applies to a_mu with route quad"));
    }
    Ok(OutputRecord::exact_values(Kind::Sequence, p, &values))
}

fn poly_json(p: &NamedPoly) -> serde_json::Value {
    let coeffs: Vec<String> = p.poly.coeffs().iter().map(output::format_rational).collect();
    json!({ "index": p.index, "coeffs": coeffs })
}

fn poly_record(args: &PolyArgs) -> Result<OutputRecord, CliError> {
    let n = need_n(args.n)?;
    let mut p = params([("n", n.to_string())]);
    let polys: Vec<NamedPoly> = match args.family {
        PolyFamily::Narayana => (1..=n).map(narayana_poly).collect(),
        PolyFamily::S => (1..=n).map(s_poly).collect(),
        PolyFamily::GenNarayana => {
            let mu = parse_mu(args.mu.as_deref())?;
            p.insert("mu".into(), mu.to_string());
            gen_narayana_table(&mu, n)?
        }
        PolyFamily::Gegenbauer => {
            let mu = parse_rational(args.mu.as_deref().ok_or_else(|| CliError::usage("--mu is required"))?)?;
            p.insert("mu".into(), mu.to_string());
            (0..=n).map(|k| gegenbauer(&mu, k)).collect()
        }
    };
    let family = args.family.to_possible_value().expect("not skipped").get_name().to_owned();
    p.insert("family".into(), family);
    Ok(OutputRecord::new(
        Kind::Polynomial,
        p,
        json!({ "variable": "z", "polys": polys.iter().map(poly_json).collect::<Vec<_>>() }),
    ))
}

/// Zeros summed by the numeric zeta route.
pub const NUMERIC_ZETA_ZEROS: usize = 1000;

fn zeta_record(mu: &str, n: usize, route: Option<&str>) -> Result<OutputRecord, CliError> {
    let n = need_n(n)?;
    let mu = parse_mu(Some(mu))?;
    let route = parse_route(route, "recur", &["recur", "numeric"])?;
    let mut p = params([("mu", mu.to_string()), ("n", n.to_string()), ("route", route.clone())]);
    if route == "recur" {
        let z = bessel_zeta(&mu, n)?;
        return Ok(OutputRecord::exact_values(Kind::Zeta, p, z.values()));
    }
    p.insert("zeros".into(), NUMERIC_ZETA_ZEROS.to_string());
    let values: Vec<f64> = (1..=n)
        .map(|k| bessel_zeta_numeric(&mu, k, NUMERIC_ZETA_ZEROS))
        .collect::<Result<_, _>>()?;
    Ok(OutputRecord::new(Kind::Zeta, p, json!({ "approx": true, "values": values })))
}

fn report_record(what: &str, p: BTreeMap<String, String>, payload: serde_json::Value) -> OutputRecord {
    let mut p = p;
    p.insert("report".into(), what.to_owned());
    OutputRecord::new(Kind::Report, p, payload)
}

fn to_value<T: serde::Serialize>(x: &T) -> serde_json::Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn arith_record(args: &ArithArgs) -> Result<OutputRecord, CliError> {
    match args.topic {
        ArithTopic::Valuations => {
            let n = need_n(args.n.unwrap_or(200))?;
            let prime = args.p.unwrap_or(2);
            if prime < 2 || !(2..prime).take_while(|d| d * d <= prime).all(|d| !prime.is_multiple_of(d)) {
                return Err(CliError::usage(format!("--p {prime} is not prime")));
            }
            let r = valuation_report(prime, n);
            Ok(report_record("valuations", params([("n", n.to_string()), ("p", prime.to_string())]), to_value(&r)))
        }
        ArithTopic::Parity => {
            let n = need_n(args.n.unwrap_or(512))?;
            let r = parity_theorems_check(n);
            Ok(report_record("parity", params([("n", n.to_string())]), report_summary(&r)))
        }
        ArithTopic::PIntegral => {
            let n = need_n(args.n.unwrap_or(12))?;
            let mu = parse_mu(args.mu.as_deref())?;
            let candidates = match &args.a1 {
                Some(a1) => vec![parse_rational(a1)?],
                None => default_candidates(&mu),
            };
            let r = p_integrality_search(&mu, n, &candidates)?;
            Ok(report_record("p-integral", params([("mu", mu.to_string()), ("n", n.to_string())]), to_value(&r)))
        }
        ArithTopic::PTable => {
            let n = need_n(args.n.unwrap_or(12))?;
            let r = p_integrality_table_check(n);
            Ok(report_record("p-table", params([("n", n.to_string())]), to_value(&r)))
        }
        ArithTopic::Logconcavity => {
            let n = args.n.unwrap_or(200);
            if n < 3 {
                return Err(CliError::usage("--n must be at least 3"));
            }
            let r = logconcavity_reports(n);
            Ok(report_record("logconcavity", params([("n", n.to_string())]), report_summary(&r)))
        }
    }
}

/// The table's `a_1` first when `mu` has a row, then the integers 1..=1000.
fn default_candidates(mu: &Rational) -> Vec<Rational> {
    let table = P_INTEGRALITY_TABLE
        .iter()
        .filter(|row| rat(row.0) == *mu)
        .map(|row| rat(row.1));
    table.chain((1..=1000).map(rat)).collect()
}

/// Counts per family plus failures and notes; full check lists get large.
fn report_summary(r: &Report) -> serde_json::Value {
    let mut families: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for c in &r.checks {
        let e = families.entry(c.family.as_str()).or_default();
        e.0 += 1;
        e.1 += usize::from(c.holds);
    }
    let families: BTreeMap<&str, serde_json::Value> = families
        .into_iter()
        .map(|(f, (total, held))| (f, json!({ "checks": total, "hold": held })))
        .collect();
    json!({
        "title": r.title,
        "all_hold": r.all_hold(),
        "families": families,
        "failures": r.failures(),
        "notes": r.notes,
    })
}

fn render(records: &[OutputRecord], format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => Ok(output::to_json_lines(records)),
        Format::Csv => Ok(output::to_csv(records)?),
    }
}

fn deliver(text: String, out: Option<&PathBuf>) -> Result<String, CliError> {
    match out {
        None => Ok(text),
        Some(path) => {
            std::fs::write(path, text).map_err(|e| CliError {
                code: 4,
                message: format!("cannot write {}: {e}", path.display()),
            })?;
            Ok(String::new())
        }
    }
}

fn emit(records: &[OutputRecord], output: &OutputArgs) -> Result<String, CliError> {
    deliver(render(records, output.format)?, output.out.as_ref())
}

/// Worker threads from `NARAYANA_LAB_THREADS`, if set.
pub fn thread_cap() -> Result<Option<usize>, CliError> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(k) if k > 0 => Ok(Some(k)),
            _ => Err(CliError::usage(format!("{THREADS_ENV} must be a positive integer, got {v:?}"))),
        },
    }
}

fn verify(args: &VerifyArgs) -> Result<(i32, String), CliError> {
    if let Some(n) = args.n {
        need_n(n)?;
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(k) = thread_cap()? {
        builder = builder.num_threads(k);
    }
    let pool = builder
        .build()
        .map_err(|e| CliError { code: 2, message: format!("cannot start worker threads: {e}") })?;
    let outcomes = pool.install(|| verify::run_suite(args.suite, args.n));
    let passed = outcomes.iter().all(|o| o.passed);
    let records: Vec<OutputRecord> = outcomes
        .iter()
        .map(|o| {
            report_record("verify", params([("suite", o.suite.clone()), ("n", o.n.to_string())]), to_value(o))
        })
        .collect();
    Ok((if passed { 0 } else { 1 }, emit(&records, &args.output)?))
}

fn dispatch(cli: &Cli) -> Result<(i32, String), CliError> {
    match &cli.command {
        Command::Seq(a) => {
            let rec = seq_record(a.name, a.n, a.route.as_deref(), a.mu.as_deref(), a.a1.as_deref())?;
            Ok((0, emit(&[rec], &a.output)?))
        }
        Command::Poly(a) => Ok((0, emit(&[poly_record(a)?], &a.output)?)),
        Command::Zeta(a) => Ok((0, emit(&[zeta_record(&a.mu, a.n, a.route.as_deref())?], &a.output)?)),
        Command::Verify(a) => verify(a),
        Command::Arith(a) => Ok((0, emit(&[arith_record(a)?], &a.output)?)),
        Command::Export(a) => {
            let rec = match a.target {
                ExportTarget::Zeta => {
                    let mu = a.mu.as_deref().ok_or_else(|| CliError::usage("--mu is required"))?;
                    zeta_record(mu, a.n, a.route.as_deref())?
                }
                t => {
                    let name = match t {
                        ExportTarget::A => SeqName::A,
                        ExportTarget::Lasalle => SeqName::Lasalle,
                        ExportTarget::B => SeqName::B,
                        _ => SeqName::AMu,
                    };
                    seq_record(name, a.n, a.route.as_deref(), a.mu.as_deref(), a.a1.as_deref())?
                }
            };
            deliver(render(&[rec], a.format)?, Some(&a.out))?;
            Ok((0, String::new()))
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(e) => Outcome::error(e),
    }
}

/// Parses `args` (including the program name) and runs; clap errors map to
/// exit code 2, help and version to 0.
pub fn run_from_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run_from_args(std::iter::once("narayana-lab").chain(args.iter().copied()))
    }

    fn values(out: &Outcome) -> Vec<String> {
        let rec = OutputRecord::from_json_line(out.stdout.trim()).unwrap();
        rec.values().unwrap().iter().map(ToString::to_string).collect()
    }

    #[test]
    fn sequences() {
        let out = run_args(&["seq", "a", "--n", "7", "--route", "quad"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert_eq!(values(&out), ["2", "1", "2", "8", "52", "495", "6470"]);
        assert_eq!(values(&run_args(&["seq", "b", "--n", "3"])), ["1", "1", "4"]);
        let half = run_args(&["seq", "a_mu", "--mu", "1/2", "--n", "5", "--route", "closed"]);
        assert_eq!(values(&half), ["2", "4/3", "32/9", "96/5", "512/3"]);
        let neg = run_args(&["seq", "a_mu", "--mu", "-1/2", "--n", "3", "--route", "euler"]);
        assert_eq!(values(&neg), ["2", "4", "32"]);
        let seeded = run_args(&["seq", "a_mu", "--mu", "3", "--n", "2", "--route", "quad", "--a1", "4"]);
        assert_eq!(values(&seeded)[0], "4");
        assert_eq!(values(&run_args(&["seq", "A", "--n", "4", "--route", "closed"])), ["1", "1", "5", "56"]);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["seq", "a_mu", "--mu", "-1", "--n", "3"]).code, 3);
        assert_eq!(run_args(&["seq", "a_mu", "--mu", "0.5", "--n", "3"]).code, 2);
        assert_eq!(run_args(&["seq", "a_mu", "--n", "3"]).code, 2);
        assert_eq!(run_args(&["seq", "a", "--n", "3", "--route", "euler"]).code, 2);
        assert_eq!(run_args(&["seq", "a", "--n", "0"]).code, 2);
        assert_eq!(run_args(&["seq", "a", "--n", "3", "--a1", "4"]).code, 2);
        assert_eq!(run_args(&["frobnicate"]).code, 2);
        assert_eq!(run_args(&["arith", "valuations", "--p", "4"]).code, 2);
        assert_eq!(run_args(&["arith", "p-integral", "--mu", "3", "--a1", "2"]).code, 1);
        assert_eq!(run_args(&["--help"]).code, 0);
        let bad = run_args(&["zeta", "--mu", "-2", "--n", "2"]);
        assert_eq!(bad.code, 3);
        assert!(bad.stdout.is_empty() && bad.stderr.contains("mu"));
    }

    #[test]
    fn zeta_and_polys() {
        let z = run_args(&["zeta", "--mu", "1", "--n", "2"]);
        assert_eq!(values(&z), ["1/8", "1/192"]);
        let numeric = run_args(&["zeta", "--mu", "1", "--n", "1", "--route", "numeric"]);
        let rec = OutputRecord::from_json_line(numeric.stdout.trim()).unwrap();
        assert!(rec.is_approx());
        let v = rec.payload["values"][0].as_f64().unwrap();
        assert!((v - 0.125).abs() < 1e-9);
        assert_eq!(run_args(&["zeta", "--mu", "1", "--n", "1", "--route", "numeric", "--format", "csv"]).code, 2);

        let p = run_args(&["poly", "narayana", "--n", "3"]);
        let rec = OutputRecord::from_json_line(p.stdout.trim()).unwrap();
        assert_eq!(rec.kind, Kind::Polynomial);
        assert_eq!(rec.payload["polys"][2]["coeffs"], json!(["1", "3", "1"]));
        assert_eq!(run_args(&["poly", "gegenbauer", "--n", "2", "--mu", "1"]).code, 0);
        assert_eq!(run_args(&["poly", "gen-narayana", "--n", "2", "--mu", "-3"]).code, 3);
    }

    #[test]
    fn csv_output() {
        let out = run_args(&["seq", "a", "--n", "3", "--format", "csv"]);
        assert_eq!(out.stdout, "n,value_num,value_den,route\n1,2,1,quad\n2,1,1,quad\n3,2,1,quad\n");
    }

    #[test]
    fn arith_reports() {
        let out = run_args(&["arith", "valuations", "--p", "2", "--n", "16"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("a_4 = 8"));
        let out = run_args(&["arith", "p-integral", "--mu", "3", "--n", "12"]);
        let rec = OutputRecord::from_json_line(out.stdout.trim()).unwrap();
        assert_eq!(rec.payload["a1"], "4");
        assert_eq!(rec.payload["p"], 5);
        let out = run_args(&["arith", "logconcavity", "--n", "20"]);
        assert!(out.stdout.contains("log-convexity"));
    }

    #[test]
    fn deterministic() {
        let args = ["verify", "routes", "--n", "10"];
        let first = run_args(&args);
        assert_eq!(first.code, 0);
        assert_eq!(first, run_args(&args));
    }
}

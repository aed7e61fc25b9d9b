//! Arithmetic of `a_n`, `b_n` and `a_n(mu)`: p-adic valuations, the parity
//! theorems, tabulation of the experimental 2- and 3-adic patterns, the
//! p-integrality search, and log-concavity in both orientations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{rat, Rational};
use crate::beta_moments::a_mu_recur_table;
use crate::error::{Error, Result};
use crate::report::{Check, Report};
use crate::sequences::{a_table_quad, b_table};

const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;

fn nu_int(x: &BigInt, p: u64) -> i64 {
    let p = BigInt::from(p);
    let mut x = x.abs();
    let mut v = 0;
    loop {
        let (q, r) = x.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        x = q;
        v += 1;
    }
}

/// `nu_p(x) = nu_p(num) - nu_p(den)`.
pub fn nu_p(x: &Rational, p: u64) -> Result<i64> {
    assert!(p >= 2, "p must be prime");
    if x.is_zero() {
        return Err(Error::ZeroInput);
    }
    Ok(nu_int(x.numer(), p) - nu_int(x.denom(), p))
}

fn is_power_of_two(n: usize) -> bool {
    n.is_power_of_two()
}

/// The four proved parity statements, for `1 <= n <= n_max`:
///
/// * `a-odd-iff`: `a_n` is odd iff `n = 2(2^m - 1)`;
/// * `a-even-at-odd-n`: `a_n` is even for odd `n`;
/// * `half-a-odd`: `a_n / 2` is odd for `n = 2^m - 1`;
/// * `b-odd-iff`: `b_n` is odd iff `n = 2^m`.
pub fn parity_theorems_check(n_max: usize) -> Report {
    let a = a_table_quad(n_max);
    let b = b_table(n_max);
    parity_from_tables(&a, &b)
}

pub(crate) fn parity_from_tables(a: &[BigInt], b: &[BigInt]) -> Report {
    let mut report = Report::new("parity theorems");
    let two = BigInt::from(2);
    for n in 1..=a.len() {
        let ni = n as i64;
        let an = &a[n - 1];
        let special = n % 2 == 0 && is_power_of_two(n / 2 + 1);
        report.push(Check::new("a-odd-iff", ni, an.is_odd() == special));
        if n % 2 == 1 {
            report.push(Check::new("a-even-at-odd-n", ni, an.is_even()));
        }
        if is_power_of_two(n + 1) {
            let half = an / &two;
            report.push(Check::new("half-a-odd", ni, an.is_even() && half.is_odd()));
        }
    }
    for n in 1..=b.len() {
        report.push(Check::new("b-odd-iff", n as i64, b[n - 1].is_odd() == is_power_of_two(n)));
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimStatus {
    Agrees,
    Disagrees,
    OutOfStatedRange,
}

/// One instance of an experimental claim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimRow {
    pub claim: String,
    pub n: usize,
    pub predicted: String,
    pub actual: String,
    pub status: ClaimStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValuationEntry {
    pub n: usize,
    pub nu: i64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pattern_class: Option<String>,
}

/// `nu_p` of a sequence with the outcome of each experimental claim.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValuationReport {
    pub p: u64,
    pub entries: Vec<ValuationEntry>,
    pub claims: Vec<ClaimRow>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl ValuationReport {
    pub fn nu(&self, n: usize) -> i64 {
        self.entries[n - 1].nu
    }

    pub fn rows(&self, claim: &str) -> impl Iterator<Item = &ClaimRow> {
        let claim = claim.to_owned();
        self.claims.iter().filter(move |r| r.claim == claim)
    }

    pub fn count(&self, claim: &str, status: ClaimStatus) -> usize {
        self.rows(claim).filter(|r| r.status == status).count()
    }

    fn summarize(&mut self, claim: &str) {
        let agree = self.count(claim, ClaimStatus::Agrees);
        let disagree: Vec<usize> = self
            .rows(claim)
            .filter(|r| r.status == ClaimStatus::Disagrees)
            .map(|r| r.n)
            .collect();
        let out = self.count(claim, ClaimStatus::OutOfStatedRange);
        self.notes.push(format!(
            "{claim}: {agree} agree, {} disagree {disagree:?}, {out} out of stated range",
            disagree.len()
        ));
    }
}

fn is_ones_then_zero(bits: &str) -> bool {
    bits.len() >= 2 && bits.ends_with('0') && bits[..bits.len() - 1].chars().all(|c| c == '1')
}

fn is_all_ones(bits: &str) -> bool {
    bits.chars().all(|c| c == '1')
}

fn is_one_then_zeros(bits: &str) -> bool {
    bits.len() >= 2 && bits.starts_with('1') && bits[1..].chars().all(|c| c == '0')
}

fn is_one_zero_ones_zero(bits: &str) -> bool {
    bits.len() >= 4
        && bits.starts_with("10")
        && bits.ends_with('0')
        && bits[2..bits.len() - 1].chars().all(|c| c == '1')
}

/// Binary-digit classes used by the 2-adic claims, with the valuation each
/// class predicts: `1..10 -> 0`, `1..1 -> 1`, `10..0 -> 1`, `101..10 -> 2`.
fn nu2_predictions(n: usize) -> (Vec<&'static str>, Vec<i64>) {
    let bits = format!("{n:b}");
    let mut classes = Vec::new();
    let mut predicted = Vec::new();
    if is_ones_then_zero(&bits) {
        classes.push("1..10");
        predicted.push(0);
    }
    if is_all_ones(&bits) {
        classes.push("1..1");
        predicted.push(1);
    }
    if is_one_then_zeros(&bits) {
        classes.push("10..0");
        predicted.push(1);
    }
    if is_one_zero_ones_zero(&bits) {
        classes.push("101..10");
        predicted.push(2);
    }
    predicted.dedup();
    (classes, predicted)
}

/// Tabulates `nu_2(a_n)` for `n <= n_max` against the binary-digit claims.
///
/// Each claim is an "if and only if", so an `n` whose class predicts a value
/// other than the actual one disagrees, and so does an `n` in no class whose
/// valuation is 0, 1 or 2. An `n` in no class with valuation at least 3 is
/// outside what the claims cover.
pub fn nu2_pattern_report(n_max: usize) -> ValuationReport {
    nu2_from_table(&a_table_quad(n_max))
}

pub(crate) fn nu2_from_table(a: &[BigInt]) -> ValuationReport {
    let mut report = ValuationReport {
        p: 2,
        ..Default::default()
    };
    for n in 1..=a.len() {
        let nu = nu_int(&a[n - 1], 2);
        let (classes, predicted) = nu2_predictions(n);
        let status = if predicted.is_empty() {
            if nu <= 2 {
                ClaimStatus::Disagrees
            } else {
                ClaimStatus::OutOfStatedRange
            }
        } else if predicted == [nu] {
            ClaimStatus::Agrees
        } else {
            ClaimStatus::Disagrees
        };
        report.entries.push(ValuationEntry {
            n,
            nu,
            pattern_class: (!classes.is_empty()).then(|| classes.join("|")),
        });
        report.claims.push(ClaimRow {
            claim: "nu2-binary-pattern".into(),
            n,
            predicted: if predicted.is_empty() {
                "none".into()
            } else {
                predicted.iter().map(i64::to_string).collect::<Vec<_>>().join("|")
            },
            actual: nu.to_string(),
            status,
        });
    }
    report.summarize("nu2-binary-pattern");
    if a.len() >= 4 {
        report.notes.push(format!(
            "a_4 = 8 has binary index 100, whose class 10..0 predicts nu_2 = 1; actual nu_2 = {}",
            report.nu(4)
        ));
    }
    report
}

fn is_three_power_minus_one(n: usize) -> Option<u32> {
    let mut w = 2usize;
    let mut m = 1;
    while w < n {
        w = 3 * w + 2;
        m += 1;
    }
    (w == n).then_some(m)
}

/// `j` with `3^j - 1 < n < 3^(j+1) - 1`, if `n` is not itself of that form.
fn w_interval(n: usize) -> Option<u32> {
    if is_three_power_minus_one(n).is_some() {
        return None;
    }
    let mut j = 0;
    let mut w_next = 2usize;
    while w_next <= n {
        w_next = 3 * w_next + 2;
        j += 1;
    }
    Some(j)
}

/// Tabulates `nu_3(a_n)` for `n <= n_max` against the 3-adic claims, with
/// `w_j = 3^j - 1`:
///
/// * `nu3-equal-triple`: `n != w_m` gives `nu_3(a_{3n-2}) = nu_3(a_{3n-1}) = nu_3(a_{3n})`;
/// * `nu3-shifted`: `w_j < n < w_{j+1}` gives `nu_3(a_{3n+2}) = j - nu_3(n+1)`;
/// * `nu3-zero-at-w`: `n = w_j` gives `nu_3(a_{3n}) = 0`;
/// * `nu3-m-at-w`: `n = w_m` gives `nu_3(a_{3n}) = nu_3(a_{3n-1}) - 1 = nu_3(a_{3n-2}) - 1 = m`;
/// * `nu3-m-at-w-swapped`: `n = w_m` gives `nu_3(a_{3n}) = nu_3(a_{3n-1}) + 1 = nu_3(a_{3n-2}) + 1 = m`.
///
/// The zero and `m` claims cannot both hold at any `w_m`; both are
/// tabulated. The swapped form is the relation the data follows where it
/// differs from the stated one.
pub fn nu3_fact_report(n_max: usize) -> ValuationReport {
    nu3_from_table(&a_table_quad(n_max))
}

pub(crate) fn nu3_from_table(a: &[BigInt]) -> ValuationReport {
    let n_max = a.len();
    let nu: Vec<i64> = a.iter().map(|x| nu_int(x, 3)).collect();
    let v = |k: usize| nu[k - 1];
    let mut report = ValuationReport {
        p: 3,
        ..Default::default()
    };
    for n in 1..=n_max {
        report.entries.push(ValuationEntry {
            n,
            nu: v(n),
            pattern_class: is_three_power_minus_one(n).map(|m| format!("3^{m}-1")),
        });
    }
    let status = |ok: bool| {
        if ok {
            ClaimStatus::Agrees
        } else {
            ClaimStatus::Disagrees
        }
    };
    let mut rows = Vec::new();
    for n in 1..=n_max / 3 {
        let triple = (v(3 * n - 2), v(3 * n - 1), v(3 * n));
        let actual = format!("{},{},{}", triple.0, triple.1, triple.2);
        match is_three_power_minus_one(n) {
            None => rows.push(ClaimRow {
                claim: "nu3-equal-triple".into(),
                n,
                predicted: "equal".into(),
                actual,
                status: status(triple.0 == triple.1 && triple.1 == triple.2),
            }),
            Some(m) => {
                let m = m as i64;
                rows.push(ClaimRow {
                    claim: "nu3-zero-at-w".into(),
                    n,
                    predicted: "0".into(),
                    actual: triple.2.to_string(),
                    status: status(triple.2 == 0),
                });
                rows.push(ClaimRow {
                    claim: "nu3-m-at-w".into(),
                    n,
                    predicted: format!("{},{},{m}", m + 1, m + 1),
                    actual: actual.clone(),
                    status: status(triple == (m + 1, m + 1, m)),
                });
                rows.push(ClaimRow {
                    claim: "nu3-m-at-w-swapped".into(),
                    n,
                    predicted: format!("{},{},{m}", m - 1, m - 1),
                    actual,
                    status: status(triple == (m - 1, m - 1, m)),
                });
            }
        }
    }
    for n in 1..=n_max.saturating_sub(2) / 3 {
        if let Some(j) = w_interval(n) {
            let predicted = j as i64 - nu_int(&BigInt::from(n + 1), 3);
            let actual = v(3 * n + 2);
            rows.push(ClaimRow {
                claim: "nu3-shifted".into(),
                n,
                predicted: predicted.to_string(),
                actual: actual.to_string(),
                status: status(predicted == actual),
            });
        }
    }
    rows.sort_by(|x, y| x.claim.cmp(&y.claim).then(x.n.cmp(&y.n)));
    report.claims = rows;
    for claim in [
        "nu3-equal-triple",
        "nu3-shifted",
        "nu3-zero-at-w",
        "nu3-m-at-w",
        "nu3-m-at-w-swapped",
    ] {
        report.summarize(claim);
    }
    report.notes.push(
        "nu3-zero-at-w and nu3-m-at-w assign different values to nu_3(a_{3n}) at every n = 3^m - 1, m >= 1".into(),
    );
    report
}

/// `nu_p(a_n)` for `n <= n_max`. For `p = 2` and `p = 3` this is the
/// corresponding claims report; other primes carry entries only.
pub fn valuation_report(p: u64, n_max: usize) -> ValuationReport {
    let a = a_table_quad(n_max);
    match p {
        2 => nu2_from_table(&a),
        3 => nu3_from_table(&a),
        _ => ValuationReport {
            p,
            entries: a
                .iter()
                .enumerate()
                .map(|(i, x)| ValuationEntry {
                    n: i + 1,
                    nu: nu_int(x, p),
                    pattern_class: None,
                })
                .collect(),
            ..Default::default()
        },
    }
}

/// Outcome of [`p_integrality_search`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PIntegralityResult {
    pub mu: String,
    pub a1: String,
    /// `None` when every denominator is 1.
    pub p: Option<u64>,
    pub checked_to: usize,
    pub witness_denominators: Vec<String>,
}

/// Miller-Rabin with the first twelve prime bases, deterministic for every
/// `u64` input.
fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let n_big = BigInt::from(n);
    let minus_one = &n_big - 1;
    let s = (n - 1).trailing_zeros();
    let d = BigInt::from((n - 1) >> s);
    'bases: for a in BASES {
        let mut x = BigInt::from(a).modpow(&d, &n_big);
        if x.is_one() || x == minus_one {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % &n_big;
            if x == minus_one {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Smallest prime factor by trial division up to `TRIAL_DIVISION_LIMIT`,
/// then a primality test on what remains. `None` when no small factor
/// exists and the number is composite or wider than 64 bits.
fn smallest_prime_factor(d: &BigInt) -> Option<u64> {
    debug_assert!(*d > BigInt::one());
    let mut q = 2u64;
    while q <= TRIAL_DIVISION_LIMIT {
        let qb = BigInt::from(q);
        if &qb * &qb > *d {
            return d.to_u64();
        }
        if (d % &qb).is_zero() {
            return Some(q);
        }
        q += if q == 2 { 1 } else { 2 };
    }
    d.to_u64().filter(|&n| is_prime_u64(n))
}

fn is_power_of(d: &BigInt, p: u64) -> bool {
    let p = BigInt::from(p);
    let mut d = d.clone();
    while d > BigInt::one() {
        let (q, r) = d.div_rem(&p);
        if !r.is_zero() {
            return false;
        }
        d = q;
    }
    true
}

/// The single prime all denominators are powers of: `Ok(None)` if all are 1,
/// `Err(())` if there is no such prime.
fn common_prime(dens: &[BigInt]) -> std::result::Result<Option<u64>, ()> {
    let Some(first) = dens.iter().find(|d| !d.is_one()) else {
        return Ok(None);
    };
    let p = smallest_prime_factor(first).ok_or(())?;
    if dens.iter().all(|d| is_power_of(d, p)) {
        Ok(Some(p))
    } else {
        Err(())
    }
}

/// Runs the `a_n(mu)` recurrence to `n_max` from each candidate `a_1` in
/// turn and returns the first whose denominators are all powers of one prime.
pub fn p_integrality_search(
    mu: &Rational,
    n_max: usize,
    candidates: &[Rational],
) -> Result<PIntegralityResult> {
    assert!(!candidates.is_empty(), "no candidates given");
    for a1 in candidates {
        let seq = a_mu_recur_table(mu, n_max, a1)?;
        let dens: Vec<BigInt> = seq.iter().map(|x| x.denom().clone()).collect();
        if let Ok(p) = common_prime(&dens) {
            return Ok(PIntegralityResult {
                mu: mu.to_string(),
                a1: a1.to_string(),
                p,
                checked_to: n_max,
                witness_denominators: dens.iter().map(BigInt::to_string).collect(),
            });
        }
    }
    Err(Error::NoneFound)
}

/// `(mu, a_1, p)` rows of the p-integrality table.
pub const P_INTEGRALITY_TABLE: [(i64, i64, u64); 7] = [
    (2, 2, 3),
    (3, 4, 5),
    (4, 10, 7),
    (5, 12, 7),
    (6, 84, 11),
    (7, 264, 11),
    (8, 990, 13),
];

/// Reruns every table row with its `a_1` as the only candidate.
pub fn p_integrality_table_check(n_max: usize) -> Report {
    let mut report = Report::new(format!("p-integrality table, N = {n_max}"));
    for (mu, a1, p) in P_INTEGRALITY_TABLE {
        let found = p_integrality_search(&rat(mu), n_max, &[rat(a1)]);
        let (holds, detail) = match &found {
            Ok(r) => (r.p == Some(p), format!("a1 = {a1}, p = {:?}, expected {p}", r.p)),
            Err(e) => (false, format!("a1 = {a1}: {e}")),
        };
        report.push(Check::new("p-integrality", mu, holds).with_detail(detail));
    }
    report
}

/// Checks the displayed inequality `x_{n+1} x_{n-1} >= x_n^2`
/// (`as_written = true`, family `displayed`) or the standard log-concavity
/// `x_n^2 >= x_{n+1} x_{n-1}` (family `standard`) at every interior index.
/// `seq[0]` is `x_1`.
pub fn logconcavity_report(seq: &[Rational], as_written: bool) -> Report {
    assert!(seq.len() >= 3, "need at least three terms");
    let family = if as_written { "displayed" } else { "standard" };
    let mut report = Report::new(format!("log-concavity ({family})"));
    for n in 2..seq.len() {
        let outer = &seq[n] * &seq[n - 2];
        let inner = &seq[n - 1] * &seq[n - 1];
        let holds = if as_written { outer >= inner } else { inner >= outer };
        report.push(Check::new(family, n as i64, holds));
    }
    report
}

/// Both orientations for one named sequence, with a note stating which
/// holds where.
pub fn logconcavity_both(name: &str, seq: &[Rational]) -> Report {
    let mut report = Report::new(format!("log-concavity of {name}"));
    let displayed = logconcavity_report(seq, true);
    let standard = logconcavity_report(seq, false);
    let describe = |r: &Report| {
        let bad: Vec<i64> = r.failures().iter().map(|c| c.n).collect();
        if bad.is_empty() {
            "holds at every n".to_string()
        } else if bad.len() == r.checks.len() {
            "fails at every n".to_string()
        } else {
            format!("fails at n = {bad:?}")
        }
    };
    report.note(format!(
        "{name}, 2 <= n <= {}: displayed x_(n+1) x_(n-1) >= x_n^2 (log-convexity) {}; \
         standard x_n^2 >= x_(n+1) x_(n-1) (log-concavity) {}",
        seq.len() - 1,
        describe(&displayed),
        describe(&standard)
    ));
    for mut c in displayed.checks.into_iter().chain(standard.checks) {
        c.family = format!("{name}-{}", c.family);
        report.push(c);
    }
    report
}

/// Log-concavity reports for `a_n` and `b_n` up to `n_max`.
pub fn logconcavity_reports(n_max: usize) -> Report {
    let to_rat = |v: Vec<BigInt>| v.into_iter().map(Rational::from_integer).collect::<Vec<_>>();
    let mut report = Report::new(format!("log-concavity, N = {n_max}"));
    report.extend(logconcavity_both("a", &to_rat(a_table_quad(n_max))));
    report.extend(logconcavity_both("b", &to_rat(b_table(n_max))));
    report
}

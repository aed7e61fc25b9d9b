//! Verification suites. Each suite is a list of independent tasks that run
//! on the current rayon pool; results are kept in task order.

use clap::ValueEnum;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{big_rat, rat, ratio, Rational};
use crate::arith::parity_theorems_check;
use crate::beta_moments::{
    a_half_closed, a_mu_closed_table, a_mu_from_cumulants, a_mu_recur_table, a_neg_half_closed,
    bessel_zero_numeric, bessel_zeta, bessel_zeta_numeric, cumulant_partition_oracle,
    lasalle_generalized, moments_to_cumulants, verify_bernoulli_euler_identities,
    verify_series_identities, MomentSeq,
};
use crate::hessenberg::{a_via_det_table, b_via_det_table};
use crate::narayana_poly::{
    gegen_narayana_check, lasalle_recurrence_check, narayana_representations_check, s_poly_check,
};
use crate::report::{Check, Report};
use crate::sequences::{a_table_def, a_table_quad, a_table_sym, b_table, lasalle_a_table};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Routes,
    Identities,
    Parity,
    ZetaNumeric,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Routes => "routes",
            Suite::Identities => "identities",
            Suite::Parity => "parity",
            Suite::ZetaNumeric => "zeta-numeric",
            Suite::All => "all",
        }
    }

    pub fn default_n(self) -> usize {
        match self {
            Suite::Routes => 40,
            Suite::Identities => 25,
            Suite::Parity => 512,
            Suite::ZetaNumeric => 3,
            Suite::All => 0,
        }
    }
}

/// Families that reproduce a form known to be misprinted. They are evaluated
/// and reported but are not hard assertions.
pub const KNOWN_DISCREPANCIES: [&str; 5] = [
    "euler-linear",
    "i1-determinant-as-printed",
    "tanh-half-as-printed",
    "tanh-neg-half-as-printed",
    "s-closed-form-truncated",
];

pub fn is_hard(check: &Check) -> bool {
    !KNOWN_DISCREPANCIES.contains(&check.family.as_str())
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteOutcome {
    pub suite: String,
    pub n: usize,
    pub passed: bool,
    pub checks: usize,
    pub failures: Vec<Check>,
    pub discrepancies: Vec<Check>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub approx: bool,
}

impl SuiteOutcome {
    fn from_reports(suite: &str, n: usize, reports: Vec<Report>, approx: bool) -> Self {
        let mut outcome = SuiteOutcome {
            suite: suite.to_owned(),
            n,
            passed: true,
            checks: 0,
            failures: Vec::new(),
            discrepancies: Vec::new(),
            notes: Vec::new(),
            approx,
        };
        for report in reports {
            outcome.checks += report.checks.len();
            for check in report.checks {
                match (check.holds, is_hard(&check)) {
                    (true, _) => {}
                    (false, true) => outcome.failures.push(check),
                    (false, false) => outcome.discrepancies.push(check),
                }
            }
            outcome.notes.extend(report.notes);
        }
        outcome.passed = outcome.failures.is_empty();
        outcome
    }
}

type Task = Box<dyn Fn() -> Report + Send + Sync>;

fn run_tasks(tasks: Vec<Task>) -> Vec<Report> {
    tasks.par_iter().map(|t| t()).collect()
}

fn equal_tables(family: &str, lhs: &[Rational], rhs: &[Rational]) -> Report {
    let mut report = Report::new(family);
    for (i, (l, r)) in lhs.iter().zip(rhs).enumerate() {
        let mut c = Check::new(family, i as i64 + 1, l == r);
        if l != r {
            c = c.with_detail(format!("{l} != {r}"));
        }
        report.push(c);
    }
    if lhs.len() != rhs.len() {
        report.push(Check::new(family, 0, false).with_detail("tables differ in length"));
    }
    report
}

fn ints(v: Vec<num_bigint::BigInt>) -> Vec<Rational> {
    v.into_iter().map(big_rat).collect()
}

fn values(v: Vec<crate::sequences::SeqValue>) -> Vec<Rational> {
    v.into_iter().map(|s| s.value).collect()
}

fn route_tasks(n: usize) -> Vec<Task> {
    let mut tasks: Vec<Task> = vec![
        Box::new(move || {
            let def = ints(a_table_def(n));
            let mut r = Report::new("a routes");
            r.extend(equal_tables("a-def-quad", &def, &ints(a_table_quad(n))));
            r.extend(equal_tables("a-def-sym", &def, &ints(a_table_sym(n))));
            r.extend(equal_tables("a-def-det", &def, &values(a_via_det_table(n))));
            r.extend(equal_tables("a-def-closed", &def, &a_mu_closed_table(&rat(1), n).expect("mu = 1")));
            r
        }),
        Box::new(move || {
            let b = ints(b_table(n));
            let half: Vec<Rational> = a_mu_closed_table(&rat(0), n)
                .expect("mu = 0")
                .into_iter()
                .map(|x| x / rat(2))
                .collect();
            let mut r = Report::new("b routes");
            r.extend(equal_tables("b-def-det", &b, &values(b_via_det_table(n))));
            r.extend(equal_tables("b-def-closed", &b, &half));
            r
        }),
        Box::new(move || {
            let lasalle = ints(lasalle_a_table(n));
            let closed: Vec<Rational> = (1..=n)
                .map(|k| lasalle_generalized(&rat(1), k).expect("mu = 1"))
                .collect();
            let m = n.min(20);
            let kappa = moments_to_cumulants(&MomentSeq::symmetric_beta(&rat(1), 2 * m).expect("mu = 1"));
            let signed: Vec<Rational> = (1..=m)
                .map(|k| if k % 2 == 1 { lasalle[k - 1].clone() } else { -lasalle[k - 1].clone() })
                .collect();
            let from_cumulants: Vec<Rational> = (1..=m).map(|k| kappa.get(2 * k).clone()).collect();
            let moments = MomentSeq::symmetric_beta(&rat(1), 8).expect("mu = 1");
            let oracle: Vec<Rational> = (1..=8)
                .map(|k| cumulant_partition_oracle(&moments, k).expect("k <= 10"))
                .collect();
            let mut r = Report::new("A routes");
            r.extend(equal_tables("A-def-closed", &lasalle, &closed));
            r.extend(equal_tables("A-cumulants", &signed, &from_cumulants));
            r.extend(equal_tables("cumulant-partition-oracle", &oracle, &kappa.values()[..8]));
            r
        }),
        Box::new(move || {
            let mut r = Report::new("half-integer closed forms");
            let half: Vec<Rational> = (1..=n).map(a_half_closed).collect();
            let neg: Vec<Rational> = (1..=n).map(a_neg_half_closed).collect();
            r.extend(equal_tables("bernoulli-closed", &half, &a_mu_closed_table(&ratio(1, 2), n).expect("mu > -1")));
            r.extend(equal_tables("euler-closed", &neg, &a_mu_closed_table(&ratio(-1, 2), n).expect("mu > -1")));
            r
        }),
    ];
    for mu in [rat(0), ratio(1, 2), rat(1), rat(2), rat(3), ratio(-1, 2)] {
        tasks.push(Box::new(move || {
            let closed = a_mu_closed_table(&mu, n).expect("mu > -1");
            let mut r = Report::new(format!("a_mu routes, mu = {mu}"));
            r.extend(equal_tables("a-mu-closed-recur", &closed, &a_mu_recur_table(&mu, n, &rat(2)).expect("mu > -1")));
            r.extend(equal_tables("a-mu-closed-cumulants", &closed, &a_mu_from_cumulants(&mu, n).expect("mu > -1")));
            r
        }));
    }
    tasks
}

fn identity_tasks(n: usize) -> Vec<Task> {
    let mut tasks: Vec<Task> = vec![
        Box::new(move || narayana_representations_check(n)),
        Box::new(move || s_poly_check(n)),
        Box::new(|| verify_series_identities(15)),
        Box::new(|| verify_bernoulli_euler_identities(15)),
        Box::new(move || lasalle_recurrence_check(&rat(1), n).expect("mu = 1")),
    ];
    for mu in [rat(0), ratio(1, 2), rat(2)] {
        let r_max = n.min(20);
        tasks.push(Box::new(move || lasalle_recurrence_check(&mu, r_max).expect("mu > -1")));
    }
    for mu in [rat(0), ratio(1, 2), rat(1), rat(2)] {
        tasks.push(Box::new(move || {
            let mut r = Report::new(format!("gegenbauer form, mu = {mu}"));
            for k in 1..=n.min(20) {
                let holds = gegen_narayana_check(&mu, k).expect("mu > -1");
                r.push(Check::new("gegenbauer-narayana", k as i64, holds).with_detail(format!("mu = {mu}")));
            }
            r
        }));
    }
    tasks
}

fn parity_tasks(n: usize) -> Vec<Task> {
    vec![Box::new(move || parity_theorems_check(n))]
}

/// Relative tolerance for the numeric zeta comparison with 200 zeros.
pub const ZETA_NUMERIC_TOL: f64 = 1e-8;
pub const ZETA_NUMERIC_ZEROS: usize = 200;

fn zeta_numeric_tasks(n: usize) -> Vec<Task> {
    let mut tasks: Vec<Task> = vec![Box::new(|| {
        let mut r = Report::new("first zero");
        let j = bessel_zero_numeric(&rat(1), 1, 1e-12).expect("mu = 1");
        let holds = (j - 3.831_705_970_207_512).abs() < 1e-8;
        r.push(Check::new("bessel-zero", 1, holds).with_detail(format!("j_(1,1) = {j:.12}")));
        r
    })];
    for mu in [rat(0), ratio(1, 2), rat(1), rat(2)] {
        tasks.push(Box::new(move || {
            let exact = bessel_zeta(&mu, n).expect("mu >= 0");
            let mut r = Report::new(format!("numeric zeta, mu = {mu}"));
            for k in 1..=n {
                let x = exact.get(k).to_f64().expect("finite");
                let y = bessel_zeta_numeric(&mu, k, ZETA_NUMERIC_ZEROS).expect("mu >= 0");
                let rel = ((y - x) / x).abs();
                r.push(
                    Check::new("zeta-numeric", k as i64, rel < ZETA_NUMERIC_TOL)
                        .with_detail(format!("mu = {mu}, numeric = {y:.15e}, exact = {x:.15e}, rel = {rel:.2e}")),
                );
            }
            r
        }));
    }
    tasks
}

/// Runs one suite; `All` runs the other four at their default sizes and
/// ignores `n`.
pub fn run_suite(suite: Suite, n: Option<usize>) -> Vec<SuiteOutcome> {
    if suite == Suite::All {
        return [Suite::Routes, Suite::Identities, Suite::Parity, Suite::ZetaNumeric]
            .into_iter()
            .flat_map(|s| run_suite(s, None))
            .collect();
    }
    let n = n.unwrap_or(suite.default_n());
    let tasks = match suite {
        Suite::Routes => route_tasks(n),
        Suite::Identities => identity_tasks(n),
        Suite::Parity => parity_tasks(n),
        Suite::ZetaNumeric => zeta_numeric_tasks(n),
        Suite::All => unreachable!(),
    };
    vec![SuiteOutcome::from_reports(suite.name(), n, run_tasks(tasks), suite == Suite::ZetaNumeric)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for (suite, n) in [(Suite::Routes, 12), (Suite::Identities, 8), (Suite::Parity, 64), (Suite::ZetaNumeric, 2)] {
            let out = run_suite(suite, Some(n));
            assert_eq!(out.len(), 1);
            assert!(out[0].passed, "{}: {:?}", suite.name(), out[0].failures);
            assert!(out[0].checks > 0);
        }
    }

    #[test]
    fn known_discrepancies_are_separated() {
        let out = &run_suite(Suite::Identities, Some(6))[0];
        assert!(out.passed);
        let families: std::collections::BTreeSet<&str> =
            out.discrepancies.iter().map(|c| c.family.as_str()).collect();
        assert_eq!(families.len(), KNOWN_DISCREPANCIES.len());
    }

    #[test]
    fn mismatched_tables_fail() {
        let r = equal_tables("x", &[rat(1), rat(2)], &[rat(1), rat(3)]);
        assert_eq!(r.failures().len(), 1);
        assert!(!equal_tables("x", &[rat(1)], &[]).all_hold());
    }
}

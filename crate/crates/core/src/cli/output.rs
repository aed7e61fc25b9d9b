//! Line-oriented output: one JSON [`OutputRecord`] per line, or CSV rows
//! `n,value_num,value_den,route` for exact sequence and zeta records.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{parse_rational, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Sequence,
    Polynomial,
    Zeta,
    Report,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub kind: Kind,
    pub params: BTreeMap<String, String>,
    pub payload: Value,
}

pub const CSV_HEADER: &str = "n,value_num,value_den,route";

/// `"num/den"`, or a bare integer when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

fn rational_strings(values: &[Rational]) -> Vec<String> {
    values.iter().map(format_rational).collect()
}

impl OutputRecord {
    pub fn new(kind: Kind, params: BTreeMap<String, String>, payload: Value) -> Self {
        OutputRecord { kind, params, payload }
    }

    /// Exact values for `n = 1, 2, ...`.
    pub fn exact_values(kind: Kind, params: BTreeMap<String, String>, values: &[Rational]) -> Self {
        OutputRecord::new(kind, params, json!({ "values": rational_strings(values) }))
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }

    pub fn from_json_line(line: &str) -> Result<Self> {
        serde_json::from_str(line).map_err(|e| Error::Parse(format!("bad record: {e}")))
    }

    pub fn is_approx(&self) -> bool {
        self.payload.get("approx").and_then(Value::as_bool).unwrap_or(false)
    }

    pub fn route(&self) -> &str {
        self.params.get("route").map(String::as_str).unwrap_or("")
    }

    /// The exact values of a sequence or zeta record.
    pub fn values(&self) -> Result<Vec<Rational>> {
        let not_exact = || Error::Parse("record has no exact values".into());
        if self.is_approx() {
            return Err(not_exact());
        }
        self.payload
            .get("values")
            .and_then(Value::as_array)
            .ok_or_else(not_exact)?
            .iter()
            .map(|v| v.as_str().ok_or_else(not_exact).and_then(parse_rational))
            .collect()
    }
}

pub fn to_json_lines(records: &[OutputRecord]) -> String {
    records.iter().fold(String::new(), |mut out, r| {
        out.push_str(&r.to_json_line());
        out.push('\n');
        out
    })
}

pub fn from_json_lines(text: &str) -> Result<Vec<OutputRecord>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(OutputRecord::from_json_line)
        .collect()
}

/// Fails for records without exact values.
pub fn to_csv(records: &[OutputRecord]) -> Result<String> {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for record in records {
        if !matches!(record.kind, Kind::Sequence | Kind::Zeta) {
            return Err(Error::Parse("csv output holds sequence and zeta records only".into()));
        }
        for (i, v) in record.values()?.iter().enumerate() {
            writeln!(out, "{},{},{},{}", i + 1, v.numer(), v.denom(), record.route())
                .expect("writing to a string");
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CsvRow {
    pub n: usize,
    pub value: Rational,
    pub route: String,
}

pub fn parse_csv(text: &str) -> Result<Vec<CsvRow>> {
    let mut lines = text.lines();
    if lines.next() != Some(CSV_HEADER) {
        return Err(Error::Parse("missing csv header".into()));
    }
    lines
        .map(|line| {
            let bad = || Error::Parse(format!("bad csv row {line:?}"));
            let fields: Vec<&str> = line.split(',').collect();
            let [n, num, den, route] = fields[..] else {
                return Err(bad());
            };
            Ok(CsvRow {
                n: n.parse().map_err(|_| bad())?,
                value: parse_rational(&format!("{num}/{den}"))?,
                route: route.to_owned(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};
    use proptest::prelude::*;

    fn params() -> BTreeMap<String, String> {
        [("name", "a"), ("route", "quad")]
            .into_iter()
            .map(|(k, v)| (k.to_owned(), v.to_owned()))
            .collect()
    }

    #[test]
    fn rational_strings_are_exact() {
        assert_eq!(format_rational(&rat(495)), "495");
        assert_eq!(format_rational(&ratio(-4, 6)), "-2/3");
        assert_eq!(format_rational(&ratio(1594, 27)), "1594/27");
    }

    #[test]
    fn csv_rows() {
        let values: Vec<Rational> = [2, 1, 2, 8, 52, 495, 6470].into_iter().map(rat).collect();
        let csv = to_csv(&[OutputRecord::exact_values(Kind::Sequence, params(), &values)]).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 8);
        assert_eq!(lines[0], CSV_HEADER);
        assert_eq!(lines[7], "7,6470,1,quad");
        let rows = parse_csv(&csv).unwrap();
        assert!(rows.iter().all(|r| r.value.denom() == &1.into()));
        assert_eq!(rows.iter().map(|r| r.value.clone()).collect::<Vec<_>>(), values);
    }

    #[test]
    fn csv_refuses_reports_and_approximations() {
        let report = OutputRecord::new(Kind::Report, params(), json!({}));
        assert!(to_csv(&[report]).is_err());
        let approx = OutputRecord::new(Kind::Zeta, params(), json!({"approx": true, "values": [0.125]}));
        assert!(approx.is_approx());
        assert!(to_csv(&[approx]).is_err());
    }

    proptest! {
        #[test]
        fn json_round_trip(pairs in prop::collection::vec((-10_000i64..10_000, 1i64..10_000), 1..12)) {
            let values: Vec<Rational> = pairs.iter().map(|&(n, d)| ratio(n, d)).collect();
            let rec = OutputRecord::exact_values(Kind::Zeta, params(), &values);
            let back = from_json_lines(&to_json_lines(std::slice::from_ref(&rec))).unwrap();
            prop_assert_eq!(&back[0], &rec);
            prop_assert_eq!(back[0].values().unwrap(), values.clone());
            let rows = parse_csv(&to_csv(&[rec]).unwrap()).unwrap();
            prop_assert_eq!(rows.into_iter().map(|r| r.value).collect::<Vec<_>>(), values);
        }
    }
}

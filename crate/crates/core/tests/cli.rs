use std::process::{Command, Output};

use narayana_lab::cli::output::{from_json_lines, parse_csv};

fn lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_narayana-lab"))
        .args(args)
        .env_remove("NARAYANA_LAB_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn seq_prints_one_record() {
    let o = lab(&["seq", "a", "--n", "7", "--route", "quad"]);
    assert_eq!(o.status.code(), Some(0));
    let records = from_json_lines(&stdout(&o)).unwrap();
    assert_eq!(records.len(), 1);
    let v: Vec<String> = records[0].values().unwrap().iter().map(ToString::to_string).collect();
    assert_eq!(v, ["2", "1", "2", "8", "52", "495", "6470"]);
    assert!(o.stderr.is_empty());
}

#[test]
fn export_csv_and_json_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("a.csv");
    let o = lab(&["export", "a", "--n", "7", "--format", "csv", "--out", csv.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(!text.contains('\r'));
    let rows = parse_csv(&text).unwrap();
    assert_eq!(rows.len(), 7);
    assert!(rows.iter().all(|r| r.value.denom() == &1.into()));

    let json = dir.path().join("zeta.json");
    let o = lab(&["export", "zeta", "--mu", "1", "--n", "3", "--out", json.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let records = from_json_lines(&std::fs::read_to_string(&json).unwrap()).unwrap();
    let v: Vec<String> = records[0].values().unwrap().iter().map(ToString::to_string).collect();
    assert_eq!(v, ["1/8", "1/192", "1/3072"]);
}

#[test]
fn export_to_missing_directory_is_an_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("missing").join("a.csv");
    let o = lab(&["export", "a", "--n", "3", "--out", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());
}

#[test]
fn exit_codes() {
    assert_eq!(lab(&["seq", "a", "--bogus"]).status.code(), Some(2));
    assert_eq!(lab(&["seq", "a_mu", "--mu", "-3/2", "--n", "4"]).status.code(), Some(3));
    assert_eq!(lab(&["verify", "routes", "--n", "20"]).status.code(), Some(0));
    let capped = Command::new(env!("CARGO_BIN_EXE_narayana-lab"))
        .args(["verify", "routes", "--n", "5"])
        .env("NARAYANA_LAB_THREADS", "none")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2));
}

#[test]
fn thread_count_does_not_change_output() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_narayana-lab"))
            .args(["verify", "identities", "--n", "10"])
            .env("NARAYANA_LAB_THREADS", threads)
            .output()
            .unwrap()
    };
    let one = run("1");
    let four = run("4");
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn verify_reports_discrepancies_without_failing() {
    let o = lab(&["verify", "identities", "--n", "25"]);
    assert_eq!(o.status.code(), Some(0));
    let rec = &from_json_lines(&stdout(&o)).unwrap()[0];
    assert_eq!(rec.payload["passed"], true);
    assert!(!rec.payload["discrepancies"].as_array().unwrap().is_empty());
}

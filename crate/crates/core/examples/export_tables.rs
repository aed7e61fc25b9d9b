//! Writes a_1..a_10 and zeta_1(2n) for n <= 5 as CSV and JSON through the
//! command-line entry point, then reads them back.

use narayana_lab::cli::output::{from_json_lines, parse_csv};
use narayana_lab::cli::run_from_args;

fn main() {
    let dir = std::env::temp_dir().join("narayana-lab-example");
    std::fs::create_dir_all(&dir).unwrap();
    let csv = dir.join("a.csv");
    let json = dir.join("zeta.json");
    for args in [
        vec!["export", "a", "--n", "10", "--format", "csv", "--out", csv.to_str().unwrap()],
        vec!["export", "zeta", "--mu", "1", "--n", "5", "--out", json.to_str().unwrap()],
    ] {
        let out = run_from_args(std::iter::once("narayana-lab").chain(args));
        assert_eq!(out.code, 0, "{}", out.stderr);
    }
    let rows = parse_csv(&std::fs::read_to_string(&csv).unwrap()).unwrap();
    for row in rows {
        println!("a_{} = {} ({})", row.n, row.value, row.route);
    }
    let records = from_json_lines(&std::fs::read_to_string(&json).unwrap()).unwrap();
    println!("zeta_1: {:?}", records[0].values().unwrap().iter().map(ToString::to_string).collect::<Vec<_>>());
}

use narayana_lab::arith::logconcavity_reports;

fn main() {
    let report = logconcavity_reports(200);
    for note in &report.notes {
        println!("{note}");
    }
}

//! Runs every registered claim on the default grid and writes the JSON
//! report.
//!
//! cargo run --release --example certify_theorems -- report.json

use pqelliptic::verify::{run_claims, ScanGrid, Status};

fn main() -> pqelliptic::Result<()> {
    let grid = ScanGrid::default();
    let report = run_claims::<&str>(&[], &grid, None)?;
    for c in &report.claims {
        let tag = match c.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skip",
        };
        println!(
            "{tag}  {:<20} {:>6} samples  worst {:>10}  {}",
            c.id,
            c.evaluated,
            c.worst_residual.map_or("-".to_string(), |w| format!("{w:.2e}")),
            c.description
        );
    }
    println!(
        "\n{} passed, {} failed, {} skipped",
        report.claims_passed, report.claims_failed, report.claims_skipped
    );
    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, report.to_json())?;
        println!("report written to {path}");
    }
    Ok(())
}

// Replaying the golden corpus of hand-transcribed derivations.

use std::path::Path;

use anyhow::{ensure, Result};
use bint::corpus::run_corpus;

pub fn run_example() -> Result<()> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
    let report = run_corpus(&dir)?;
    for r in report.failures() {
        println!("FAIL {}: {:?}", r.id, r.diffs);
    }
    println!(
        "{} cases, coverage complete: {}",
        report.reports.len(),
        report.coverage.is_complete()
    );
    ensure!(report.all_passed(), "golden corpus failed");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}

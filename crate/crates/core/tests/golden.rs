use std::path::Path;

use bint::corpus::run_corpus;

#[test]
fn every_golden_case_passes_and_covers_the_calculus() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
    let report = run_corpus(&dir).expect("manifest loads");
    let failures: Vec<_> = report.failures().map(|r| format!("{}: {:?}", r.id, r.diffs)).collect();
    assert!(failures.is_empty(), "{failures:#?}");
    assert!(report.coverage.missing_rules.is_empty(), "{:?}", report.coverage.missing_rules);
    assert!(report.coverage.missing_cut_cases.is_empty(), "{:?}", report.coverage.missing_cut_cases);
}

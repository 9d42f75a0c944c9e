use std::path::Path;

use bint::cli::run;
use bint::format::derivation_from_data;
use bint::kernel::check_derivation;

fn bint(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("bint").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn corpus(file: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(file).display().to_string()
}

#[test]
fn prove_prints_a_derivation() {
    let (code, out, _) = bint(&["prove", "; |-+ p -> p"]);
    assert_eq!(code, 0);
    assert!(out.contains("→R⁺") && out.contains("Rf⁺"));
}

#[test]
fn prove_reports_refutation() {
    let (code, _, err) = bint(&["prove", "F -> F ; |-+ F"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("Refuted"));
}

#[test]
fn parse_errors_are_usage_errors_with_positions() {
    let (code, _, err) = bint(&["prove", "; |-+ p -> -> q"]);
    assert_eq!(code, 2);
    assert!(err.contains("position"), "{err}");
    assert_eq!(bint(&["frobnicate"]).0, 2);
}

#[test]
fn check_a_golden_file() {
    let (code, out, _) = bint(&["check", &corpus("identity-bot-and-bot-plus.deriv")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("valid, height 1"), "{out}");
}

#[test]
fn check_reports_the_violated_schema() {
    let dir = std::env::temp_dir().join("bint-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.deriv");
    std::fs::write(&bad, r#"{"rule": "OrRPlus2", "conclusion": "p ; |-+ p \\/ q", "premises": [{"rule": "RfPlus", "conclusion": "p ; |-+ p", "premises": []}]}"#).unwrap();
    let (code, _, err) = bint(&["check", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("schema"), "{err}");
}

#[test]
fn emitted_derivations_recheck() {
    let runs: Vec<Vec<String>> = vec![
        vec!["prove".into(), "p /\\ q ; |-+ q /\\ p".into()],
        vec!["identity".into(), "r ; s".into(), "p -< q".into(), "-".into()],
        vec!["weaken".into(), corpus("weaken-and-l-a.input.deriv"), "r".into(), "c".into()],
        vec!["contract".into(), corpus("contract-or-c.input.deriv"), "p \\/ q".into(), "c".into()],
        vec!["invert".into(), corpus("identity-p-imp-q-plus.deriv"), "p -> q".into(), "a".into()],
        vec![
            "cut-eliminate".into(),
            corpus("case-5.3-cuta.left.deriv"),
            corpus("case-5.3-cuta.right.deriv"),
            "p -> q".into(),
            "a".into(),
        ],
    ];
    for args in runs {
        let mut full: Vec<&str> = vec!["--format", "data"];
        full.extend(args.iter().map(String::as_str));
        let (code, out, err) = bint(&full);
        assert_eq!(code, 0, "{args:?}: {err}");
        let d = derivation_from_data(&out).unwrap_or_else(|e| panic!("{args:?}: {e}"));
        assert!(check_derivation(&d).valid, "{args:?}");
    }
}

#[test]
fn cut_elimination_trace_lists_cases() {
    let (code, out, _) = bint(&[
        "--trace",
        "cut-eliminate",
        &corpus("case-4.16-cuta.left.deriv"),
        &corpus("case-4.16-cuta.right.deriv"),
        "p /\\ q",
        "a",
    ]);
    assert_eq!(code, 0);
    let first = out.lines().next().unwrap();
    assert!(first.contains("case=-4.16-") && first.contains("weight=3"), "{first}");
}

#[test]
fn latex_output() {
    let (code, out, _) = bint(&["--latex", "prove", "; |-- p -< p"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("\\infer[\\scriptstyle \\Yleft R^{-}]"), "{out}");
}

#[test]
fn golden_runs_the_corpus() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
    let (code, out, err) = bint(&["golden", dir.to_str().unwrap(), "--random", "20"]);
    assert_eq!(code, 0, "{out}{err}");
    assert!(out.contains("random: 20 of 20"));
}

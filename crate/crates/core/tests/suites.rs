use monodromy_core::verify::{run_suite, SuiteReport};

fn run(name: &str) -> SuiteReport {
    let report = run_suite(name, 1).unwrap();
    assert!(report.cases > 0, "{name} ran no cases");
    assert!(report.ok(), "{name} failures: {:#?}", report.failures);
    assert_eq!(report.passed, report.cases);
    report
}

#[test]
fn level_two() {
    run("level-two");
}

#[test]
fn wedge_echelon() {
    run("wedge-echelon");
}

#[test]
fn jordan_blocks() {
    let report = run("jordan-blocks");
    for note in ["ell=5 r=2: dim 6 = 1x5 + 1", "ell=7 r=3: dim 20 = 2x7 + 6", "ell=11 r=5: dim 252 = 22x11 + 10"] {
        assert!(report.notes.iter().any(|n| n == note), "missing {note}: {:?}", report.notes);
    }
}

#[test]
fn wedge_nonvanishing() {
    run("wedge-nonvanishing");
}

#[test]
fn twist_contrapositive() {
    run("twist-contrapositive");
}

#[test]
fn sharpness() {
    run("sharpness");
}

#[test]
fn bounds() {
    run("bounds");
}

#[test]
fn classifier() {
    run("classifier");
}

#[test]
fn unknown_suite_is_rejected() {
    let err = run_suite("bogus", 1).unwrap_err();
    assert!(err.to_string().contains("unknown suite"));
}

#[test]
fn suites_are_deterministic() {
    for name in ["level-two", "twist-contrapositive"] {
        assert_eq!(run_suite(name, 9).unwrap(), run_suite(name, 9).unwrap());
    }
}

use std::process::Command;

use antipodal::cli::{run, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};
use antipodal::report::VerificationReport;

fn cli(args: &[&str]) -> antipodal::cli::CliOutput {
    run(std::iter::once("antipodal").chain(args.iter().copied()))
}

#[test]
fn empty_report_json() {
    assert_eq!(VerificationReport::empty().to_json(), r#"{"suite":"","checks":[],"status":"pass"}"#);
    assert_eq!(EXIT_FAIL, 1);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "--suite", "nope"][..],
        &["verify", "--parallel", "0"],
        &["verify", "--jacobi", "sampled:0"],
        &["verify", "--jacobi", "often"],
        &["verify", "--format", "xml"],
        &["classify", "--element", "psi(g9,g0)"],
        &["classify", "--element", "psi(g1,g0)*x"],
        &["diagram", "--which", "nothing"],
        &["frobnicate"],
    ] {
        let out = cli(args);
        assert_eq!(out.code, EXIT_USAGE, "{:?}: {}", args, out.stderr);
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn help_exits_0() {
    let out = cli(&["--help"]);
    assert_eq!(out.code, EXIT_PASS);
    assert!(out.stdout.contains("verify"));
}

#[test]
fn rootsys_markdown() {
    let out = cli(&["verify", "--suite", "rootsys", "--format", "md"]);
    assert_eq!(out.code, EXIT_PASS);
    assert!(out.stdout.contains("## rootsys"));
    assert!(out.stdout.contains("roots: expected 240, actual 240 [pass]"));
    assert!(out.stdout.contains("lattice lemma: 9045 pairs, 0 collisions"));
}

#[test]
fn tables_markdown() {
    let out = cli(&["verify", "--suite", "tables", "--format", "md"]);
    assert_eq!(out.code, EXIT_PASS, "{}", out.stdout);
    assert!(out.stdout.contains("A_2(EIX_+): expected 120, actual 120 [pass]"));
    assert!(out.stdout.contains("## catalog table"));
}

#[test]
fn json_is_parseable_and_sorted() {
    let out = cli(&["verify", "--suite", "octonion", "--suite", "clifford", "--seed", "3"]);
    assert_eq!(out.code, EXIT_PASS);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["status"], "pass");
    let ids: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert!(ids.contains(&"octonion/norm.random_pairs"));
}

#[test]
fn parallel_matches_serial() {
    let a = cli(&["verify", "--suite", "octonion", "--suite", "triality", "--suite", "clifford"]);
    let b = cli(&["verify", "--suite", "octonion", "--suite", "triality", "--suite", "clifford", "--parallel", "3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn classify_text_and_json() {
    let out = cli(&["classify", "--element", "x"]);
    assert_eq!(out.code, EXIT_PASS);
    assert!(out.stdout.contains("e8 fixed dims: (120, 128)"));
    assert!(out.stdout.contains("E7: EV (orbit EV_2, fixed dim 63)"));
    let out = cli(&["classify", "--element", "psi(g1:0:0, g0:0:0)", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["levels"]["E6"]["label"], "EII");
    assert_eq!(v["e8_fixed_dims"], serde_json::json!([136, 112]));
}

#[test]
fn inclusion_diagram() {
    let out = cli(&["diagram", "--which", "inclusion"]);
    assert_eq!(out.code, EXIT_PASS);
    assert!(out.stdout.starts_with("digraph inclusion {"));
    assert!(out.stdout.contains("\"FI\" -> \"EI\";"));
    assert!(out.stdout.contains("\"EVIII\" -> \"E8\";"));
    assert_eq!(out.stdout.matches(" -> ").count(), 16);
}

#[test]
fn binary_exit_codes() {
    let exe = env!("CARGO_BIN_EXE_antipodal");
    let ok = Command::new(exe).args(["verify", "--suite", "octonion"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_PASS));
    let bad = Command::new(exe).args(["verify", "--suite", "bogus"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
}

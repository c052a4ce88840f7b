use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use proptest::prelude::*;
use tenpoint_cli::document::ConfigDocument;
use tenpoint_cli::seed_text::{format_param, parse_seed};
use tenpoint_core::scalar::ratio;
use tenpoint_core::{build_configuration, CircleParam, ConfigurationSeed};

const REFERENCE: &str = "tJ=0,tK=1,tA=-1,tB=2,tC=3,s=-3/2";

fn tenpoint(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tenpoint")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

/// Compares against a checked-in file; `TENPOINT_BLESS=1` rewrites it.
fn assert_golden(name: &str, actual: &str) {
    let path = golden(name);
    if std::env::var_os("TENPOINT_BLESS").is_some() {
        fs::write(&path, actual).unwrap();
        return;
    }
    let expected = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert!(expected == actual, "{name} differs from golden; rerun with TENPOINT_BLESS=1 after review");
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_reference_matches_golden() {
    let out = tenpoint(&["gen", "--seed", REFERENCE]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert_golden("reference.json", &String::from_utf8(out.stdout).unwrap());
}

#[test]
fn verify_reference_matches_golden() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let out = tenpoint(&["verify", path_str(&golden("reference.json")), "--report", path_str(&report)]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stderr(&out).contains("27 pass, 1 degenerate-pass, 0 fail"));
    assert_golden("reference_report.json", &fs::read_to_string(report).unwrap());
}

#[test]
fn render_reference_matches_golden() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("fig.svg");
    let out = tenpoint(&["render", path_str(&golden("reference.json")), "-o", path_str(&svg)]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = fs::read_to_string(svg).unwrap();
    assert!(text.contains(r#"cx="0.500000" cy="1.500000" r="1.581139""#));
    assert_golden("reference.svg", &text);
}

#[test]
fn gen_exit_codes() {
    let dup = tenpoint(&["gen", "--seed", "tJ=0,tK=0,tA=-1,tB=2,tC=3,s=1"]);
    assert_eq!(code(&dup), 2);
    assert!(stderr(&dup).contains("duplicate-parameter"));

    // s = 1/2 puts the second circle's centre at the origin.
    let same = tenpoint(&["gen", "--seed", "tJ=0,tK=1,tA=-1,tB=2,tC=3,s=1/2"]);
    assert_eq!(code(&same), 2);
    assert!(stderr(&same).contains("identical-circles"), "{}", stderr(&same));

    assert_eq!(code(&tenpoint(&["gen", "--seed", "tJ=zebra"])), 3);
    assert_eq!(code(&tenpoint(&["gen"])), 3);
    let dir = tempfile::tempdir().unwrap();
    let unwritable = dir.path().join("missing/dir/out.json");
    assert_eq!(code(&tenpoint(&["gen", "--seed", REFERENCE, "-o", path_str(&unwritable)])), 3);
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, text: &str| {
        let p = dir.path().join(name);
        fs::write(&p, text).unwrap();
        p
    };

    let mut doc: serde_json::Value = serde_json::from_str(&fs::read_to_string(golden("reference.json")).unwrap()).unwrap();
    doc["points"]["C"] = serde_json::json!(["0/1", "0/1"]);
    let tampered = write("tampered.json", &doc.to_string());
    let out = tenpoint(&["verify", path_str(&tampered), "--report", path_str(&dir.path().join("r.json"))]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("FAIL perspective.K"), "{}", stderr(&out));

    assert_eq!(code(&tenpoint(&["verify", path_str(&write("empty.json", ""))])), 3);
    assert_eq!(code(&tenpoint(&["verify", path_str(&dir.path().join("absent.json"))])), 3);

    doc["points"]["C"] = serde_json::json!(["-4/5", "3/5"]);
    doc["extra"] = serde_json::json!(1);
    assert_eq!(code(&tenpoint(&["verify", path_str(&write("extra.json", &doc.to_string()))])), 3);

    let mut doc: serde_json::Value = serde_json::from_str(&fs::read_to_string(golden("reference.json")).unwrap()).unwrap();
    doc["j"] = serde_json::json!(["1.0", "0"]);
    assert_eq!(code(&tenpoint(&["verify", path_str(&write("float.json", &doc.to_string()))])), 3);
}

#[test]
fn fuzz_campaigns() {
    let one = tenpoint(&["fuzz", "--count", "1", "--rng-seed", "5", "--max-num", "12"]);
    assert_eq!(code(&one), 0, "{}", stderr(&one));
    let report: serde_json::Value = serde_json::from_slice(&one.stdout).unwrap();
    assert_eq!(report["entries"].as_array().unwrap().len(), 1);

    let tiny = tenpoint(&["fuzz", "--count", "3", "--rng-seed", "5", "--max-num", "1", "--max-retries", "40"]);
    assert_eq!(code(&tiny), 2);
    assert!(stderr(&tiny).contains("duplicate-parameter"));

    assert_eq!(code(&tenpoint(&["fuzz", "--count", "0", "--rng-seed", "5", "--max-num", "3"])), 3);
    assert_eq!(code(&tenpoint(&["fuzz", "--count", "x", "--rng-seed", "5", "--max-num", "3"])), 3);
}

#[test]
fn fuzz_is_deterministic_across_runs_and_threads() {
    let args = ["fuzz", "--count", "40", "--rng-seed", "42", "--max-num", "12"];
    let first = tenpoint(&args);
    let second = tenpoint(&args);
    let serial = tenpoint(&[&args[..], &["--serial"]].concat());
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stdout, serial.stdout);
}

#[test]
fn render_layers() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("points.svg");
    let out = tenpoint(&["render", path_str(&golden("reference.json")), "-o", path_str(&svg), "--layers", "points"]);
    assert_eq!(code(&out), 0);
    let text = fs::read_to_string(&svg).unwrap();
    assert!(!text.contains("<circle"));
    assert!(text.contains(">J</text>"));

    let bad = tenpoint(&["render", path_str(&golden("reference.json")), "-o", path_str(&svg), "--layers", "zebra"]);
    assert_eq!(code(&bad), 3);
}

#[test]
fn help_and_usage() {
    assert_eq!(code(&tenpoint(&["--help"])), 0);
    assert_eq!(code(&tenpoint(&["--version"])), 0);
    assert_eq!(code(&tenpoint(&[])), 3);
    assert_eq!(code(&tenpoint(&["bogus"])), 3);
}

fn param() -> impl Strategy<Value = CircleParam> {
    prop_oneof![
        9 => (-50i64..=50, 1i64..=50).prop_map(|(n, d)| CircleParam::Finite(ratio(n, d))),
        1 => Just(CircleParam::Infinity),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn seed_text_round_trips(t_j in param(), t_k in param(), t_a in param(), t_b in param(), t_c in param(), (n, d) in (-50i64..=50, 1i64..=50)) {
        let seed = ConfigurationSeed { t_j, t_k, t_a, t_b, t_c, s: ratio(n, d) };
        prop_assert_eq!(parse_seed(&seed.to_string()).unwrap(), seed.clone());
        prop_assert!(format_param(&seed.t_j) == "inf" || format_param(&seed.t_j).contains('/'));
    }

    #[test]
    fn documents_round_trip_exactly(t in proptest::collection::vec((-12i64..=12, 1i64..=12), 6)) {
        let q = |i: usize| ratio(t[i].0, t[i].1);
        let seed = ConfigurationSeed {
            t_j: CircleParam::Finite(q(0)),
            t_k: CircleParam::Finite(q(1)),
            t_a: CircleParam::Finite(q(2)),
            t_b: CircleParam::Finite(q(3)),
            t_c: CircleParam::Finite(q(4)),
            s: q(5),
        };
        let Ok(config) = build_configuration(&seed) else { return Ok(()) };
        let text = ConfigDocument::from_configuration(&config).to_json();
        let back = ConfigDocument::from_json(&text).unwrap();
        prop_assert_eq!(back.to_json(), text);
        prop_assert_eq!(back.to_configuration().unwrap(), config);
    }
}

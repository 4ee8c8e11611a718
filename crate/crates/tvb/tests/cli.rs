//! Command-line runs through `cli::run` and the built binary.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Stdio};

use proptest::prelude::*;
use serde_json::Value;
use tempfile::TempDir;
use tvb::cli::{run, EXIT_DISTINCT, EXIT_OK, EXIT_UNKNOWN, EXIT_USAGE};
use tvb::json::{gauss_data_to_string, parse_gauss_data};
use tvb_core::diagram::{closure_gauss_data, gauss_isomorphic};
use tvb_core::BraidWord;

struct Output {
    code: i32,
    out: String,
    err: String,
}

fn tvb(args: &[&str]) -> Output {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("tvb").chain(args.iter().copied()), &mut out, &mut err);
    Output { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

fn file(dir: &TempDir, name: &str, body: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

fn json(text: &str) -> Value {
    serde_json::from_str(text.trim()).unwrap_or_else(|e| panic!("{e}: {text}"))
}

#[test]
fn equal_prints_a_derivation() {
    let d = TempDir::new().unwrap();
    let (a, b) = (file(&d, "a.bw", "# left side\nn=2; v1 t1 v1\n"), file(&d, "b.bw", "n=2; t2\n"));
    let o = tvb(&["equal", &a, &b, "--max-depth", "12"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.err);
    assert!(o.out.starts_with("equal\nn=2; v1 t1 v1\n@"), "{}", o.out);
    assert!(o.out.ends_with("=> n=2; t2\n"));
    let j = json(&tvb(&["--format", "json", "equal", &a, &b]).out);
    assert_eq!(j["verdict"], "equal");
    let script = file(&d, "found.txt", j["trace"].as_str().unwrap());
    assert_eq!(tvb(&["verify", &script]).code, EXIT_OK);
}

#[test]
fn equal_distinct_and_unknown() {
    let d = TempDir::new().unwrap();
    let (s, si) = (file(&d, "s.bw", "n=2; s1"), file(&d, "si.bw", "n=2; S1"));
    let o = tvb(&["equal", &s, &si]);
    assert_eq!(o.code, EXIT_DISTINCT);
    assert_eq!(o.out, "distinct: writhe\n");
    let (a, b) = (file(&d, "a.bw", "n=2; s1 s1"), file(&d, "b.bw", "n=2; s1 v1 s1 v1"));
    let o = tvb(&["--format", "json", "equal", &a, &b, "--max-depth", "3", "--max-states", "200"]);
    assert_eq!(o.code, EXIT_UNKNOWN);
    let j = json(&o.out);
    assert_eq!(j["verdict"], "unknown");
    assert!(j["states"].as_u64().is_some() && j["depth"].as_u64().is_some() && j["reason"].is_string());
}

#[test]
fn normalize_and_invariants() {
    let d = TempDir::new().unwrap();
    let p = file(&d, "w.bw", "n=3; s1 v2 v2 S1 t1\n");
    let o = tvb(&["normalize", &p]);
    assert_eq!((o.code, o.out.as_str()), (EXIT_OK, "n=3; t1\n"));
    assert_eq!(json(&tvb(&["--format", "json", "normalize", &p]).out)["word"], "n=3; t1");
    let q = file(&d, "x.bw", "n=2; t1 S1 t2");
    let j = json(&tvb(&["invariants", &q]).out);
    assert_eq!(j["degree"], 2);
    assert_eq!(j["signedPerm"]["perm"], serde_json::json!([2, 1]));
    assert_eq!(j["signedPerm"]["flips"], serde_json::json!([0, 0]));
    assert_eq!((j["writhe"].as_i64(), j["vParity"].as_u64(), j["barParity"].as_u64()), (Some(-1), Some(0), Some(0)));
    assert_eq!(j["closureComponents"], 1);
}

#[test]
fn closure_then_braid_round_trips() {
    let d = TempDir::new().unwrap();
    let p = file(&d, "w.bw", "n=2; t1 S1 t2");
    let o = tvb(&["closure", &p]);
    assert_eq!(o.code, EXIT_OK);
    let j = json(&o.out);
    assert_eq!(j["crossings"].as_array().unwrap().len(), 1);
    assert_eq!(j["crossings"][0]["sign"], -1);
    assert_eq!(j["bars"].as_array().unwrap().len(), 2);
    assert_eq!(j["mu"], 1);
    let gd = file(&d, "gd.json", &o.out);
    let b = tvb(&["braid", &gd]);
    assert_eq!(b.code, EXIT_OK, "{}", b.err);
    let word = BraidWord::parse(b.out.trim()).unwrap();
    let original = parse_gauss_data(&o.out).unwrap();
    assert!(gauss_isomorphic(&closure_gauss_data(&word), &original).is_some());
}

#[test]
fn braid_rejects_bad_gauss_data() {
    let d = TempDir::new().unwrap();
    let twice = file(&d, "bad.json", r#"{"crossings":[],"bars":["b"],"arcs":[["b",2,"b",1],["b",2,"b",1]],"freeLoops":0}"#);
    let o = tvb(&["braid", &twice]);
    assert_eq!(o.code, EXIT_DISTINCT);
    assert!(o.err.starts_with("error:"), "{}", o.err);
    let wrong_mu = file(&d, "mu.json", r#"{"crossings":[],"bars":["b"],"arcs":[["b",2,"b",1]],"freeLoops":0,"mu":3}"#);
    assert_eq!(tvb(&["braid", &wrong_mu]).code, EXIT_DISTINCT);
    let example = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/worked_example.json");
    assert_eq!(tvb(&["braid", example.to_str().unwrap()]).code, EXIT_OK);
}

#[test]
fn markov_equal_exit_codes() {
    let d = TempDir::new().unwrap();
    let (s, e) = (file(&d, "s.bw", "n=2; s1"), file(&d, "e.bw", "n=1;"));
    let o = tvb(&["markov-equal", &s, &e, "--max-degree", "3"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.err);
    assert!(o.out.contains("destabilize"), "{}", o.out);
    let two = file(&d, "two.bw", "n=2;");
    let o = tvb(&["markov-equal", &s, &two]);
    assert_eq!(o.code, EXIT_DISTINCT);
    assert!(o.out.starts_with("distinct:"));
}

#[test]
fn verify_scripts() {
    let d = TempDir::new().unwrap();
    let good = file(&d, "good.txt", "n=3; v1 t1 t1 v1\n@2 rel-inverse-b@i=1\n@1 rel-inverse-v@i=1\n=> n=3;\n");
    let o = tvb(&["verify", &good]);
    assert_eq!((o.code, o.out.as_str()), (EXIT_OK, "ok: 2 steps\n"));
    let bad = file(&d, "bad.txt", "n=3; v1 t1 t1 v1\n@1 rel-inverse-b@i=1\n=> n=3;\n");
    let o = tvb(&["verify", &bad]);
    assert_eq!(o.code, EXIT_DISTINCT);
    assert!(o.out.starts_with("failed: step 1"), "{}", o.out);
    let j = json(&tvb(&["--format", "json", "verify", &bad]).out);
    assert_eq!(j["ok"], false);
    let reduced = file(&d, "r.txt", "n=2; t1 t1 s1\n@1 relB-inverse-b\n=> n=2; s1\n");
    assert_eq!(tvb(&["verify", &reduced, "--rules", "reduced"]).code, EXIT_OK);
    assert_eq!(tvb(&["verify", &reduced]).code, EXIT_DISTINCT);
}

#[test]
fn verify_presentation_reports_json() {
    let o = tvb(&["verify-presentation", "--n", "3"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.err);
    let j = json(&o.out);
    let reports = j["reports"].as_array().unwrap();
    assert_eq!(reports[0]["direction"], "standard=>reduced");
    assert_eq!(reports[1]["direction"], "reduced=>standard");
    for r in reports {
        assert_eq!(r["allProven"], true);
        let names: Vec<&str> = r["perRelation"].as_array().unwrap().iter().map(|x| x["relation"].as_str().unwrap()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
    }
    assert!(j["lemmas"].as_array().unwrap().iter().all(|l| l["ok"] == true));
    assert_eq!(tvb(&["verify-presentation", "--n", "9"]).code, EXIT_USAGE);
}

#[test]
fn usage_errors() {
    for args in [&[][..], &["frobnicate"], &["equal", "only-one"], &["equal", "a", "b", "--max-depth", "0"], &["--format", "xml", "normalize", "x"]] {
        let o = tvb(args);
        assert_eq!(o.code, EXIT_USAGE, "{args:?}");
        assert!(!o.err.is_empty());
    }
    let o = tvb(&["--help"]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.out.contains("verify-presentation"));
}

#[test]
fn input_errors() {
    let d = TempDir::new().unwrap();
    let o = tvb(&["normalize", d.path().join("missing.bw").to_str().unwrap()]);
    assert_eq!(o.code, EXIT_DISTINCT);
    assert!(o.err.contains("missing.bw"));
    let bad = file(&d, "bad.bw", "n=2; t3");
    let o = tvb(&["normalize", &bad]);
    assert_eq!(o.code, EXIT_DISTINCT);
    assert!(o.err.contains("t3"), "{}", o.err);
}

#[test]
fn binary_reads_standard_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tvb"))
        .args(["normalize", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"n=2; v1 v1 s1\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "n=2; s1\n");
    let usage = Command::new(env!("CARGO_BIN_EXE_tvb")).arg("nope").output().unwrap();
    assert_eq!(usage.status.code(), Some(EXIT_USAGE));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn gauss_json_round_trips(seed in any::<u64>(), n in 1usize..5, len in 0usize..12) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let w = tvb::acceptance::random_word(&mut rng, n, len);
        let gd = closure_gauss_data(&w);
        prop_assert_eq!(parse_gauss_data(&gauss_data_to_string(&gd)).unwrap(), gd);
    }
}

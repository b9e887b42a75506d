use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

use decomp_core::document::{self, Document, MapDocument, PosetDocument, SSetDocument};
use decomp_core::fixtures;
use decomp_core::nerve::nerve;

fn fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn fixture(name: &str) -> String {
    fixture_dir().join(name).display().to_string()
}

fn goldens() -> Vec<(&'static str, Document)> {
    let delta = |names: &[&str], covers: &[(&str, &str)]| {
        let x = nerve(&fixtures::poset(names, covers), Some(3)).unwrap();
        Document::Sset(SSetDocument::from_space(&x))
    };
    vec![
        ("b2.poset", Document::Poset(PosetDocument::from_poset(&fixtures::b2_poset(), None))),
        ("delta2.sset", delta(&["0", "1", "2"], &[("0", "1"), ("1", "2")])),
        ("delta02.sset", delta(&["0", "2"], &[("0", "2")])),
        (
            "incl.map",
            Document::Map(MapDocument {
                components: None,
                vertices: Some(
                    [("(0)", "(0)"), ("(2)", "(2)")]
                        .iter()
                        .map(|(a, b)| (a.to_string(), b.to_string()))
                        .collect(),
                ),
            }),
        ),
    ]
}

/// Runs `decomp`, returning the exit code and the parsed report.
fn decomp(args: &[&str], env: &[(&str, &str)]) -> (i32, Value) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_decomp"));
    cmd.args(args).env_remove("DECOMP_VERBOSE");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("run decomp");
    let stdout = String::from_utf8(out.stdout).unwrap();
    let report = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("{e}: {stdout}"));
    (out.status.code().unwrap(), report)
}

fn temp_file(name: &str, text: &str) -> String {
    let path = std::env::temp_dir().join(format!("decomp-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

#[test]
fn goldens_are_canonical() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for (name, doc) in goldens() {
        let path = fixture_dir().join(name);
        let text = document::save(&doc);
        if update {
            std::fs::write(&path, &text).unwrap();
        }
        let on_disk = std::fs::read_to_string(&path).unwrap();
        assert_eq!(on_disk, text, "{name} differs from its generator");
        assert_eq!(document::save(&document::load(&on_disk).unwrap()), on_disk, "{name} round trip");
    }
}

#[test]
fn crapo_b2_table() {
    let (code, report) = decomp(&["crapo", &fixture("b2.poset"), "--k-vertices", "a"], &[]);
    assert_eq!(code, 0, "{report:#}");
    assert_eq!(report["passed"], true);
    let row = report["table"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["edge"] == "(0,1)")
        .unwrap();
    assert_eq!(row["mu"], serde_json::json!([1, 1]));
    assert_eq!(row["mu_complement"], serde_json::json!([0, 1]));
    assert_eq!(row["correction"], serde_json::json!([1, 1]));
    assert_eq!(report["k_vertices"], serde_json::json!(["(a)"]));
}

#[test]
fn validate_delta2() {
    let (code, report) = decomp(&["validate", &fixture("delta2.sset"), "--condition", "all"], &[]);
    assert_eq!(code, 0, "{report:#}");
    let conditions = report["conditions"].as_array().unwrap();
    assert_eq!(conditions.len(), 4);
    assert!(conditions.iter().all(|c| c["passed"] == true && c["horizon"] == "up to cap 3"));
    let (code, report) = decomp(&["validate", &fixture("delta2.sset"), "--condition", "3"], &[]);
    assert_eq!(code, 0);
    assert_eq!(report["conditions"].as_array().unwrap().len(), 1);
}

#[test]
fn check_map_non_example() {
    let args = ["check-map", &fixture("delta02.sset"), &fixture("delta2.sset"), &fixture("incl.map")];
    let (code, report) = decomp(&args, &[]);
    assert_eq!(code, 0, "{report:#}");
    let flags = &report["classification"]["flags"];
    assert_eq!(flags["culf"]["holds"], false);
    assert!(flags["culf"]["witness"].is_string());
    assert_eq!(flags["full_inclusion"]["holds"], true);
    assert_eq!(flags["convex"]["holds"], false);
    let mut strict = args.to_vec();
    strict.extend(["--require", "culf"]);
    assert_eq!(decomp(&strict, &[]).0, 1);
    let mut bogus = args.to_vec();
    bogus.extend(["--require", "shiny"]);
    assert_eq!(decomp(&bogus, &[]).0, 2);
}

#[test]
fn mobius_on_poset_and_raw_input() {
    let (code, report) = decomp(&["mobius", &fixture("b2.poset")], &[]);
    assert_eq!(code, 0);
    assert_eq!(report["certificate"]["reason"]["kind"], "chain_bound");
    let mu = report["mu"].as_array().unwrap();
    assert!(mu.contains(&serde_json::json!(["(0,1)", [1, 1]])));

    let raw = fixture("delta2.sset");
    let (code, report) = decomp(&["mobius", &raw], &[]);
    assert_eq!(code, 2);
    assert!(report["error"]["message"].as_str().unwrap().contains("--cap"));
    let (code, report) = decomp(&["mobius", &raw, "--cap", "3"], &[]);
    assert_eq!(code, 0, "{report:#}");
    assert_eq!(report["certificate"]["reason"]["kind"], "truncation_relative");
    let (code, report) = decomp(&["mobius", &raw, "--cap", "2"], &[]);
    assert_eq!(code, 1);
    assert_eq!(report["certificate"]["reason"]["kind"], "denied");
    assert_eq!(report["certificate"]["reason"]["edge"], "(0,2)");
}

#[test]
fn inversion_and_verbosity() {
    let (code, report) = decomp(&["inversion", &fixture("b2.poset")], &[]);
    assert_eq!(code, 0);
    assert_eq!(report["inversion"]["passed"], true);
    assert!(report["certificate"].get("lengths").is_none());
    let (_, verbose) = decomp(&["inversion", &fixture("b2.poset")], &[("DECOMP_VERBOSE", "1")]);
    assert!(verbose["certificate"]["lengths"].is_array());
}

#[test]
fn hull_commands() {
    let (code, report) = decomp(&["hull", &fixture("b2.poset"), "--vertices", "0,1", "--convex"], &[]);
    assert_eq!(code, 0);
    assert_eq!(report["vertices"].as_array().unwrap().len(), 4);
    let (_, report) = decomp(&["hull", &fixture("b2.poset"), "--vertices", "0,1", "--full"], &[]);
    assert_eq!(report["vertices"], serde_json::json!(["(0)", "(1)"]));
    assert_eq!(report["hull"]["type"], "sub_sset");
    let (code, _) = decomp(&["hull", &fixture("b2.poset"), "--vertices", "z"], &[]);
    assert_eq!(code, 2);
}

#[test]
fn failing_checks_exit_one() {
    let doc = Document::Sset(SSetDocument::from_space(&fixtures::not_decomposition()));
    let path = temp_file("notdcmp.sset", &document::save(&doc));
    let (code, report) = decomp(&["validate", &path], &[]);
    assert_eq!(code, 1);
    for c in report["conditions"].as_array().unwrap() {
        assert_eq!(c["passed"], false);
        assert!(c["failure"]["witness"].as_str().unwrap().contains("(0,1,2)'"), "{c:#}");
    }
}

#[test]
fn input_errors_exit_two() {
    let path = temp_file("bad.poset", r#"{"type": "poset", "elements": [], "relation": "covers", "pairs": [], "colour": 1}"#);
    let (code, report) = decomp(&["mobius", &path], &[]);
    assert_eq!(code, 2);
    assert!(report["error"]["message"].as_str().unwrap().contains("colour"));
    let path = temp_file("cycle.poset", r#"{"type": "poset", "elements": ["a", "b"], "relation": "covers", "pairs": [["a", "b"], ["b", "a"]]}"#);
    assert_eq!(decomp(&["validate", &path], &[]).0, 2);
    assert_eq!(decomp(&["validate", "/nonexistent/file"], &[]).0, 2);
}

#[test]
fn reports_are_deterministic() {
    let args = ["crapo", &fixture("b2.poset"), "--k-vertices", "a,b"];
    let (_, first) = decomp(&args, &[("DECOMP_VERBOSE", "2")]);
    let (_, second) = decomp(&args, &[("DECOMP_VERBOSE", "2")]);
    assert_eq!(first, second);
    assert_eq!(first["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
}

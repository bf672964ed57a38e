use std::process::{Command, Output};

use schubert_core::report::{ElementJson, IntervalJson, RootsJson, SmoothnessJson, TangentBoundsJson, TranslateJson};
use schubert_core::sweep::SweepReport;
use serde_json::Value;

fn schubert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubert")).args(args).env_remove("SCHUBERT_JOBS").output().expect("binary runs")
}

fn ok_json(args: &[&str]) -> Value {
    let out = schubert(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn b2_singular_locus() {
    let v = ok_json(&["singular-locus", "--type", "B2", "--word", "1,2,1"]);
    assert_eq!(v["max_singular"], serde_json::json!([[1]]));
    assert_eq!(v["dim"], 3);
    assert_eq!(v["poincare"], serde_json::json!([1, 2, 2, 1]));
    assert!(v.get("verification").is_none());
}

#[test]
fn b2_tangent_weights_at_identity() {
    let v = ok_json(&["tangent-weights", "--type", "B2", "--word", "1,2,1", "--at", ""]);
    assert_eq!(v, serde_json::json!([[-2, -1], [-1, -1], [-1, 0], [0, -1]]));
    let v = ok_json(&["tangent-weights", "--type", "B2", "--word", "1,2,1", "--at", "", "--curves"]);
    assert_eq!(v, serde_json::json!([[-2, -1], [-1, 0], [0, -1]]));
}

#[test]
fn b2_translates() {
    let c = ok_json(&["translate", "--type", "B2", "--word", "1,2,1", "--at", "1", "--from", "2,1"]);
    assert_eq!(c["curve_root"], serde_json::json!([0, 1]));
    assert_eq!(c["tau"], serde_json::json!([[-1, -1], [0, -1], [1, 0]]));
    assert_eq!(c["equals_TE"], false);
    let d = ok_json(&["translate", "--type", "B2", "--word", "1,2,1", "--at", "2", "--curve", "1,0"]);
    assert_eq!(d["y"], serde_json::json!([1, 2]));
    assert_eq!(d["tau"], serde_json::json!([[-1, -1], [-1, 0], [0, 1]]));
    assert_eq!(d["equals_TE"], true);
}

#[test]
fn a2_roots() {
    let v = ok_json(&["roots", "--type", "A2"]);
    assert_eq!(v["count"], 6);
    assert_eq!(v["roots"].as_array().unwrap().len(), 6);
}

fn round_trip<T: serde::Serialize + serde::de::DeserializeOwned>(args: &[&str]) {
    let text = stdout(&schubert(args));
    let parsed: T = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&parsed).unwrap() + "\n", text, "{args:?}");
}

#[test]
fn json_round_trips() {
    round_trip::<SmoothnessJson>(&["singular-locus", "--type", "C3", "--word", "2,3,2,1"]);
    round_trip::<SmoothnessJson>(&["singular-locus", "--type", "G2", "--word", "1,2,1", "--allow-g2"]);
    round_trip::<SweepReport>(&["sweep", "--type", "A3"]);
    round_trip::<IntervalJson>(&["interval", "--type", "B2", "--word", "2,1,2"]);
    round_trip::<ElementJson>(&["element", "--type", "A3", "--word", "2,1,3,2"]);
    round_trip::<RootsJson>(&["roots", "--type", "C3"]);
    round_trip::<TranslateJson>(&["translate", "--type", "B2", "--word", "1,2,1", "--at", "1", "--from", "1,2"]);
    round_trip::<TangentBoundsJson>(&["tangent-weights", "--type", "A3", "--word", "2,1,3,2", "--at", "", "--bounds"]);
}

#[test]
fn table_and_json_agree() {
    let sweep = ok_json(&["sweep", "--type", "B3", "--max-length", "5"]);
    for entry in sweep["entries"].as_array().unwrap() {
        let word: Vec<String> = entry["word"].as_array().unwrap().iter().map(|x| x.to_string()).collect();
        let word = word.join(",");
        let args = ["singular-locus", "--type", "B3", "--word", &word];
        let json = ok_json(&args);
        let table = stdout(&schubert(&[&args[..], &["--format", "table"]].concat()));
        let rows: Vec<(String, String)> = table
            .lines()
            .skip(2)
            .take_while(|l| !l.starts_with("max_singular"))
            .map(|l| {
                let f: Vec<&str> = l.split_whitespace().collect();
                (f[0].to_string(), f[2].to_string())
            })
            .collect();
        let expected: Vec<(String, String)> = json["verdicts"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| {
                let w: Vec<String> = v["element"].as_array().unwrap().iter().map(|x| x.to_string()).collect();
                let w = if w.is_empty() { "e".to_string() } else { w.join(",") };
                (w, v["verdict"].as_str().unwrap().to_string())
            })
            .collect();
        assert_eq!(rows, expected, "w = {word}");
    }
}

#[test]
fn sweeps() {
    let a2 = ok_json(&["sweep", "--type", "A2"]);
    assert_eq!(a2["count"], 6);
    assert_eq!(a2["smooth"], 6);
    let b2 = ok_json(&["sweep", "--type", "B2"]);
    assert_eq!(b2["count"], 8);
    let singular: Vec<&Value> = b2["entries"].as_array().unwrap().iter().filter(|e| e["smooth"] == false).collect();
    assert_eq!(singular.len(), 1);
    assert_eq!(singular[0]["word"], serde_json::json!([1, 2, 1]));
    let top = ok_json(&["sweep", "--type", "A3", "--length", "6"]);
    assert_eq!(top["count"], 1);
    assert_eq!(top["entries"][0]["smooth"], true);
}

#[test]
fn deterministic_across_thread_counts() {
    let one = schubert(&["sweep", "--type", "B3", "--jobs", "1"]);
    let four = schubert(&["sweep", "--type", "B3", "--jobs", "4"]);
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn exit_codes() {
    let usage = schubert(&["singular-locus", "--type", "Q7", "--word", "1"]);
    assert_eq!(usage.status.code(), Some(2));
    let missing = schubert(&["translate", "--type", "B2", "--word", "1,2,1", "--at", "1"]);
    assert_eq!(missing.status.code(), Some(2));

    let g2 = schubert(&["singular-locus", "--type", "G2", "--word", "1,2"]);
    assert_eq!(g2.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&g2.stderr).contains("G2Disallowed"));
    let outside = schubert(&["smooth-at", "--type", "B2", "--word", "1", "--at", "2"]);
    assert_eq!(outside.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&outside.stderr).contains("NotInInterval"));
    let budget = schubert(&["sweep", "--type", "B3", "--budget", "10"]);
    assert_eq!(budget.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&budget.stderr).contains("BudgetExceeded"));
    let singular_top = schubert(&["translate", "--type", "B2", "--word", "1,2,1", "--at", "", "--from", "1"]);
    assert!(String::from_utf8_lossy(&singular_top.stderr).contains("NotSmoothUpperPoint"));
}

#[test]
fn g2_opt_in_is_labelled() {
    let v = ok_json(&["singular-locus", "--type", "G2", "--word", "1,2,1", "--allow-g2"]);
    assert_eq!(v["verification"], "unverified-by-paper");
}

#[test]
fn gp_smooth_at() {
    // with J = {1} the preimage of X(s1 s2 W_J) is X(s1 s2 s1)
    let v = ok_json(&["gp-smooth-at", "--type", "B2", "--parabolic", "1", "--word", "1,2", "--at", ""]);
    assert_eq!(v["parabolic"], serde_json::json!([1]));
    assert_eq!(v["verdict"], "singular");
    let v = ok_json(&["gp-smooth-at", "--type", "B2", "--parabolic", "1", "--word", "1,2", "--at", "2"]);
    assert_eq!(v["verdict"], "smooth");
    let bad = schubert(&["gp-smooth-at", "--type", "B2", "--parabolic", "1", "--word", "1", "--at", ""]);
    assert!(String::from_utf8_lossy(&bad.stderr).contains("NotMinimalRepresentative"));
}

#[test]
fn writes_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("roots.json");
    let out = schubert(&["roots", "--type", "B3", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["count"], 18);
}

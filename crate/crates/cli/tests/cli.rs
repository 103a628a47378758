use serde_json::Value;
use tamecm_cli::run;

fn tamecm(args: &[&str]) -> (i32, Value, String) {
    let out = run(std::iter::once("tamecm").chain(args.iter().copied()));
    let json = serde_json::from_str(&out.stdout).unwrap_or(Value::Null);
    (out.code, json, out.stderr)
}

const NILPOTENT_PAIR: &str = r#"{"X":[["0","1"],["0","0"]],"Y":[["0","0"],["1","0"]]}"#;

#[test]
fn borel_line() {
    let (code, out, _) = tamecm(&["borel", "1+1+2"]);
    assert_eq!(code, 0);
    assert_eq!(out["result"]["line"], "B(1,1,2) = T ⋉ {Psi_q : q ∈ Cy^2 + y^4C[y]}");
    assert_eq!(out["result"]["threshold"], 4);
}

#[test]
fn cm_check_rank_one() {
    let (code, out, _) = tamecm(&["cm-check", NILPOTENT_PAIR]);
    assert_eq!(code, 0);
    assert_eq!(out["result"]["ok"], true);
    assert_eq!(out["result"]["rank"], 1);
}

#[test]
fn fixed_point_round_trips_through_cm_check() {
    let (code, out, _) = tamecm(&["fixed-point", "2+2"]);
    assert_eq!(code, 0);
    let pair = out["result"]["pair"].to_string();
    let (code, out, _) = tamecm(&["cm-check", &pair]);
    assert_eq!(code, 0);
    assert_eq!(out["result"]["rank"], 1);
}

#[test]
fn graph_presentations() {
    let (code, out, _) = tamecm(&["graph", "0"]);
    assert_eq!(code, 0);
    assert_eq!(out["result"]["presentation"], "G_0 = A ∗_U B");
    let (code, out, _) = tamecm(&["graph", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out["certificates"].as_array().map(Vec::len), Some(1));
    let (code, _, err) = tamecm(&["graph", "3"]);
    assert_eq!(code, 2);
    assert!(err.contains("unsupported"));
}

#[test]
fn henon_word() {
    let word = r#"[{"kind":"Phi","p":["0","0","1"]},{"kind":"Psi","q":[0,0,1]}]"#;
    let (code, out, _) = tamecm(&["classify-dyn", word]);
    assert_eq!(code, 0);
    assert_eq!(out["result"]["dynamics"], "henon");
    let (_, out, _) = tamecm(&["reduce", word]);
    assert_eq!(out["result"]["degree"], 4);
}

#[test]
fn one_point_navigation() {
    let (code, out, _) = tamecm(&["navigate", r#"{"X":[["1"]],"Y":[["2"]]}"#, r#"{"X":[["3"]],"Y":[["5"]]}"#]);
    assert_eq!(code, 0);
    let images = out["result"]["images"].as_array().expect("images");
    assert_eq!(images[0]["X"][0][0], "0");
    assert_eq!(images[1]["X"][0][0], "1");
    assert_eq!(images[1]["Y"][0][0], "0");
}

#[test]
fn validation_errors_exit_2() {
    let mixed = r#"{"X":[["0.5","1/2"],["0","0"]],"Y":[["0","0"],["1","0"]]}"#;
    let cases: [&[&str]; 5] = [
        &["cm-check", mixed],
        &["cm-check", r#"{"X":[["1"]]}"#],
        &["cm-check", r#"{"n":3,"X":[["0","1"],["0","0"]],"Y":[["0","0"],["1","0"]]}"#],
        &["borel", "2+x"],
        &["--bogus", "graph", "0"],
    ];
    for args in cases {
        let (code, _, err) = tamecm(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn not_rank_one_is_rejected() {
    let (code, _, _) = tamecm(&["orbit2", r#"{"X":[["0","0"],["0","0"]],"Y":[["0","0"],["0","0"]]}"#]);
    assert_eq!(code, 2);
}

#[test]
fn selftest_single_criterion() {
    let (code, out, _) = tamecm(&["selftest", "--only", "14"]);
    assert_eq!(code, 0);
    assert_eq!(out["result"]["passed"], true);
    assert_eq!(out["result"]["lines"].as_array().map(Vec::len), Some(1));
}

#[test]
fn json_file_output() {
    let path = std::env::temp_dir().join(format!("tamecm-{}.json", std::process::id()));
    let (code, out, _) = tamecm(&["--json", path.to_str().expect("utf-8"), "graph", "1"]);
    assert_eq!(code, 0);
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).expect("written")).expect("json");
    std::fs::remove_file(&path).ok();
    assert_eq!(written, out);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_tamecm");
    let ok = std::process::Command::new(bin).args(["graph", "1"]).output().expect("runs");
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("A_1 ∗_{U_1} B_1"));
    let bad = std::process::Command::new(bin).args(["borel", "0"]).output().expect("runs");
    assert_eq!(bad.status.code(), Some(2));
}

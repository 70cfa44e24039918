use std::path::Path;
use std::process::{Command, Output};

fn lusztig(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lusztig"))
        .args(args)
        .env_remove("LUSZTIG_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn weyl_enum_c3_length_five() {
    let o = lusztig(&["--family", "C", "--rank", "3", "weyl", "enum", "--length", "5"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 8);
    assert!(lines.iter().all(|l| l.starts_with('[') && l.len() == 7));

    let o = lusztig(&["--family", "C", "--rank", "3", "--json", "weyl", "enum", "--length", "6"]);
    let v: Vec<Vec<usize>> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.len(), 7);
    assert!(v.iter().all(|w| w.len() == 6));
}

#[test]
fn roots_json_schema() {
    let o = lusztig(&["--family", "C", "--rank", "3", "--json", "roots"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["family"], "C");
    assert_eq!(v["rank"], 3);
    assert_eq!(v["positive_roots"].as_array().unwrap().len(), 9);
    assert_eq!(v["cartan"][1][2], -2);
}

#[test]
fn hexagon_poincare_and_dimension() {
    let o = lusztig(&["--family", "A", "--rank", "2", "poincare", "--word", "12"]);
    assert_eq!(stdout(&o).trim(), "1 + 4q + q^2");
    let o = lusztig(&["--family", "A", "--rank", "2", "poincare", "--ideal", "1,0;0,1", "--xi", "-3,1"]);
    assert_eq!(stdout(&o).trim(), "1 + 4q + q^2");
    let o = lusztig(&["poincare", "--h", "2,3,3"]);
    assert_eq!(stdout(&o).trim(), "1 + 4q + q^2");
    let o = lusztig(&["--family", "A", "--rank", "2", "dimv", "--word", "1,2", "--lambda", "1,1"]);
    assert_eq!(stdout(&o).trim(), "7");
}

#[test]
fn charv_prints_sorted_pairs() {
    let o = lusztig(&[
        "--family", "A", "--rank", "1", "charv", "--word", "1", "--lambda", "2", "--check-symmetry",
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "[[[-2],1],[[0],1],[[2],1]]");
}

#[test]
fn bruhat_and_mw() {
    let o = lusztig(&["--family", "C", "--rank", "3", "bruhat", "--v", "232", "--w", "21323"]);
    assert_eq!(stdout(&o).trim(), "true");
    let o = lusztig(&["--family", "A", "--rank", "2", "bruhat", "--v", "21", "--w", "12"]);
    assert_eq!(stdout(&o).trim(), "false");
    let o = lusztig(&["--family", "C", "--rank", "3", "--json", "mw", "--word", "13231"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["roots"].as_array().unwrap().iter().any(|r| r == &serde_json::json!([1, 1, 1])));
}

#[test]
fn codominant_both_ways() {
    let o = lusztig(&["--json", "codominant", "--h", "3,3,3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["perm"], serde_json::json!([3, 2, 1]));
    let o = lusztig(&["--json", "codominant", "--perm", "231"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["h"], serde_json::json!([2, 3, 3]));
    // 312 is not codominant
    assert_eq!(code(&lusztig(&["codominant", "--perm", "312"])), 2);
}

#[test]
fn gkm_files_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("g.dot");
    let js = dir.path().join("g.json");
    let o = lusztig(&[
        "--family", "A", "--rank", "2", "gkm", "--ideal", "1,0;0,1",
        "--dot", dot.to_str().unwrap(), "--json-out", js.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let dot_text = std::fs::read_to_string(&dot).unwrap();
    assert_eq!(stdout(&o), dot_text);
    assert_eq!(dot_text.matches(" -- ").count(), 6);
    assert_eq!(dot_text.matches("[label=\"[").count(), 6);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&js).unwrap()).unwrap();
    assert_eq!(v["edges"].as_array().unwrap().len(), 6);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 6);
}

#[test]
fn exit_codes() {
    // invalid input
    assert_eq!(code(&lusztig(&["--family", "Q", "--rank", "2", "roots"])), 2);
    assert_eq!(code(&lusztig(&["roots"])), 2);
    assert_eq!(code(&lusztig(&["--family", "A", "--rank", "2", "mw", "--word", "14"])), 2);
    assert_eq!(code(&lusztig(&["--family", "A", "--rank", "3", "gkm", "--word", "2132"])), 2);
    assert_eq!(
        code(&lusztig(&["--family", "A", "--rank", "2", "dimv", "--word", "1", "--lambda", "-1,0"])),
        2
    );
    assert_eq!(code(&lusztig(&["verify", "codominant", "--n", "9"])), 2);
    // a negative answer to a check
    assert_eq!(code(&lusztig(&["--family", "A", "--rank", "2", "hess", "validate", "--ideal", "1,1"])), 1);
    assert_eq!(code(&lusztig(&["--family", "A", "--rank", "2", "hess", "validate", "--ideal", "1,0;1,1"])), 1);
    assert_eq!(code(&lusztig(&["--family", "A", "--rank", "2", "hess", "validate", "--ideal", "1,0;0,1;1,1"])), 0);
}

#[test]
fn verify_suites() {
    let o = lusztig(&["verify", "c3"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("8 elements of length 5: PASS"));
    assert!(text.contains("s_{2α₂+α₃} ≤ [21323]: PASS"));
    assert!(text.contains("no smooth w with M_w = M₂: PASS"));

    let o = lusztig(&["verify", "codominant", "--n", "3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("5 functions checked: PASS"));

    let o = lusztig(&["--family", "A", "--rank", "2", "verify", "gkm"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("P = 1 + 4q + q^2"));

    let o = lusztig(&["--family", "A", "--rank", "1", "verify", "characters", "--bound", "3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("[1]: 1 2 3 4"));

    let o = lusztig(&["--json", "verify", "flag"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

fn run_with_cache(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lusztig"))
        .args(args)
        .env("LUSZTIG_CACHE_DIR", dir)
        .output()
        .unwrap()
}

#[test]
fn cache_cold_and_warm_are_identical() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["--family", "C", "--rank", "3", "weyl", "enum"];
    let cold = run_with_cache(dir.path(), &args);
    assert!(dir.path().join("weyl-C3.json").exists());
    let stored = std::fs::read(dir.path().join("weyl-C3.json")).unwrap();
    let warm = run_with_cache(dir.path(), &args);
    assert_eq!(cold.stdout, warm.stdout);
    assert_eq!(stdout(&cold).lines().count(), 48);
    assert_eq!(std::fs::read(dir.path().join("weyl-C3.json")).unwrap(), stored);

    // The explicit flag takes precedence over the environment.
    let other = tempfile::tempdir().unwrap();
    let o = run_with_cache(
        dir.path(),
        &["--cache-dir", other.path().to_str().unwrap(), "--family", "G", "--rank", "2", "verify", "gkm"],
    );
    assert_eq!(code(&o), 0);
    assert!(other.path().join("weyl-G2.json").exists());
    assert!(!dir.path().join("weyl-G2.json").exists());
}

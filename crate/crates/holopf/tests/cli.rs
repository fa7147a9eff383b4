use std::process::{Command, Output};

use holopf_core::guess::{catalog, RecurrenceOperator};
use serde_json::Value;

fn holopf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_holopf"))
        .args(args)
        .env_remove("HOLOPF_OUT_DIR")
        .output()
        .unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--format", "json", "-q"];
    all.extend_from_slice(args);
    let out = holopf(&all);
    (code(&out), serde_json::from_slice(&out.stdout).unwrap())
}

#[test]
fn pfaffian_of_families() {
    let (c, v) = json(&["pfaffian", "--family", "motzkin", "--dim", "4"]);
    assert_eq!(c, 0);
    assert_eq!(v["tool"], "holopf");
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(v["command"], "pfaffian");
    assert_eq!(v["config"]["seed"], 0);
    assert_eq!(v["result"]["value"], "5");

    let (_, v) = json(&[
        "pfaffian",
        "--family",
        "narayana:x=sym",
        "--dim",
        "4",
        "--all-algorithms",
    ]);
    assert_eq!(v["result"]["value"], "5*x^4");
    let (_, v) = json(&[
        "pfaffian",
        "--family",
        "schroeder",
        "--dim",
        "6",
        "--algorithm",
        "laplace",
    ]);
    assert_eq!(v["result"]["value"], (512 * 45).to_string());
}

#[test]
fn pfaffian_of_matrix_file() {
    let dir = tempfile::tempdir().unwrap();
    let sparse = dir.path().join("a.json");
    std::fs::write(
        &sparse,
        r#"{"dim": 4, "upper": [[1, 2, "1/2"], [3, 4, 6], [1, 3, 0]]}"#,
    )
    .unwrap();
    let (c, v) = json(&["pfaffian", "--matrix", sparse.to_str().unwrap()]);
    assert_eq!(c, 0);
    assert_eq!(v["result"]["value"], "3");
    let dense = dir.path().join("b.json");
    std::fs::write(&dense, "[[0, 7], [-7, 0]]").unwrap();
    let (_, v) = json(&["pfaffian", "--matrix", dense.to_str().unwrap()]);
    assert_eq!(v["result"]["value"], "7");
    let bad = dir.path().join("c.json");
    std::fs::write(&bad, "[[1, 7], [-7, 0]]").unwrap();
    assert_eq!(
        code(&holopf(&["pfaffian", "--matrix", bad.to_str().unwrap()])),
        2
    );
}

#[test]
fn exit_codes() {
    assert_eq!(
        code(&holopf(&[
            "-q",
            "certify",
            "--family",
            "motzkin",
            "--no-guess"
        ])),
        0
    );
    let refuted = holopf(&[
        "-q",
        "certify",
        "--family",
        "motzkin",
        "--no-guess",
        "--closed-form-override",
        "prod(4k+2)",
    ]);
    assert_eq!(code(&refuted), 1);
    assert_eq!(code(&holopf(&["-q", "conjecture", "--k", "2"])), 1);
    assert_eq!(
        code(&holopf(&["pfaffian", "--family", "nosuch", "--dim", "2"])),
        2
    );
    assert_eq!(
        code(&holopf(&["pfaffian", "--family", "motzkin", "--dim", "3"])),
        2
    );
    assert_eq!(code(&holopf(&["frobnicate"])), 2);
    let starved = holopf(&[
        "-q", "guess", "--source", "numbers", "--family", "motzkin", "--n-max", "6", "--order", "3",
    ]);
    assert_eq!(code(&starved), 3);
}

#[test]
fn certify_reports_witness() {
    let (c, v) = json(&[
        "certify",
        "--family",
        "motzkin",
        "--no-guess",
        "--closed-form-override",
        "prod(4k+2)",
    ]);
    assert_eq!(c, 1);
    let s = v.to_string();
    assert!(s.contains("refuted") || s.contains("Refuted"), "{s}");
}

#[test]
fn minor_sum_and_okinawa() {
    let out = holopf(&["-q", "minor-sum", "2"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("5 = 5, PASS"));
    let out = holopf(&["-q", "okinawa"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("169/169 PASS"));
}

#[test]
fn guess_finds_motzkin_recurrence() {
    let (c, v) = json(&[
        "guess", "--source", "numbers", "--family", "motzkin", "--n-max", "30", "--order", "2",
        "--degree", "1",
    ]);
    assert_eq!(c, 0);
    assert_eq!(v["config"]["source"], "numbers");
    let ops = v["result"]["operators"].as_array().unwrap();
    assert_eq!(ops.len(), 1);
    assert_eq!(
        ops[0]["text"],
        "(n + 4)*f(n+2) - (2*n + 5)*f(n+1) - (3*n + 3)*f(n)"
    );
}

#[test]
fn guess_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("m.txt");
    std::fs::write(
        &data,
        "1 1 2 4 9 21 51 127 323 835 2188 5798 15511 41835 113634 310572 853467 2356779",
    )
    .unwrap();
    let out = holopf(&[
        "-q",
        "guess",
        "--source",
        "file",
        "--data",
        data.to_str().unwrap(),
        "--order",
        "2",
        "--degree",
        "1",
        "--margin",
        "4",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("(n + 4)*f(n+2) - (2*n + 5)*f(n+1) - (3*n + 3)*f(n)"));
}

#[test]
fn operator_json_round_trip() {
    let (_, v) = json(&[
        "guess",
        "--source",
        "r-sequence",
        "--family",
        "motzkin",
        "--n-max",
        "30",
        "--order",
        "1",
    ]);
    let found = &v["result"]["operators"][0];
    let op: RecurrenceOperator = serde_json::from_value(found["operator"].clone()).unwrap();
    assert_eq!(op.to_string(), found["text"].as_str().unwrap());
    assert_eq!(serde_json::to_value(&op).unwrap(), found["operator"]);
    assert_eq!(op.to_string(), "(4*n - 3)*f(n+1) - (4*n + 1)*f(n)");
    let printed = catalog::motzkin_ratio();
    let back: RecurrenceOperator =
        serde_json::from_str(&serde_json::to_string(&printed).unwrap()).unwrap();
    assert_eq!(back, printed);
}

#[test]
fn reports_go_to_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pf.json");
    let out = holopf(&[
        "-q",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
        "pfaffian",
        "--family",
        "motzkin",
        "--dim",
        "6",
    ]);
    assert_eq!(code(&out), 0);
    assert!(!stdout(&out).is_empty() && !stdout(&out).contains("\"tool\""));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["result"]["value"], "45");

    let out = Command::new(env!("CARGO_BIN_EXE_holopf"))
        .args(["-q", "okinawa", "--i-max", "3", "--j-max", "3"])
        .env("HOLOPF_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    let text = std::fs::read_to_string(dir.path().join("okinawa.txt")).unwrap();
    assert!(text.contains("16/16"));
}

#[test]
fn progress_on_stderr_unless_quiet() {
    let loud = holopf(&["certify", "--family", "motzkin", "--no-guess"]);
    assert!(String::from_utf8_lossy(&loud.stderr).contains("[holopf]"));
    let quiet = holopf(&["-q", "certify", "--family", "motzkin", "--no-guess"]);
    assert!(!String::from_utf8_lossy(&quiet.stderr).contains("[holopf]"));
}

#[test]
fn reports_are_deterministic() {
    for args in [
        &[
            "--format", "json", "-q", "selftest", "--seed", "5", "--cases", "20",
        ][..],
        &[
            "--format", "json", "-q", "certify", "--family", "delannoy", "--n-max", "5",
        ][..],
    ] {
        let a = holopf(args);
        let b = holopf(args);
        assert_eq!(code(&a), 0);
        assert_eq!(a.stdout, b.stdout);
    }
    let (_, v) = json(&["selftest", "--seed", "5", "--cases", "20"]);
    assert_eq!(v["config"]["seed"], 5);
}

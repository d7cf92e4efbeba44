use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_wallforge"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn wallforge");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn count_single_m() {
    let o = run(&["count", "--family", "A1", "--n", "2", "--m", "3"], "");
    assert!(o.status.success());
    assert_eq!(stdout(&o), "m,count\n3,10\n");
}

#[test]
fn count_methods_agree() {
    let args = |method| vec!["count", "--family", "B1", "--n", "3", "--lambda", "3", "--m", "0..4", "--method", method];
    let outs: Vec<String> = ["bijection", "oracle", "series"].iter().map(|m| stdout(&run(&args(m), ""))).collect();
    assert_eq!(outs[0], "m,count\n0,1\n1,5\n2,19\n3,60\n4,169\n");
    assert_eq!(outs[0], outs[1]);
    assert_eq!(outs[1], outs[2]);
    let cross = stdout(&run(&["count", "--family", "B1", "--n", "3", "--cross", "--m", "0..2"], ""));
    assert_eq!(cross, "m,count\n0,1\n1,5\n2,19\n");
}

#[test]
fn series_text_and_json() {
    let o = run(&["series", "--case", "D1-diag", "--n", "3", "--order", "4"], "");
    assert_eq!(stdout(&o), "1,5,20,65,190\n");
    let o = run(&["series", "--case", "D1-diag", "--n", "3", "--order", "2", "--json"], "");
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["coeffs"], serde_json::json!([1, 5, 20]));
}

#[test]
fn map_then_invmap() {
    let o = run(&["map", "--family", "A2even", "--n", "2"], "[5]");
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["m"], 1);
    assert_eq!(v["notation"], "((1),(),())");
    let back = run(&["invmap", "--family", "A2even", "--n", "2"], &stdout(&o));
    let w: serde_json::Value = serde_json::from_str(&stdout(&back)).unwrap();
    assert_eq!(w, serde_json::json!([{"b": 5, "orient": null}]));
}

#[test]
fn reduce_reports_moves() {
    let o = run(&["reduce", "--family", "A2even", "--n", "2"], "[10,7,5,5,5,4,1]");
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["delta_removed"], 7);
    assert_eq!(v["reduced"], serde_json::json!([{"b": 2, "orient": null}]));
}

#[test]
fn crystal_dot_to_file() {
    let dir = std::env::temp_dir().join(format!("wallforge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g.dot");
    let o = run(&["crystal", "--family", "A1", "--n", "2", "--depth", "3", "--dot", path.to_str().unwrap()], "");
    assert!(o.status.success());
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("digraph crystal {"));
    assert_eq!(dot.matches("[label=\"0\"]").count() + dot.matches("[label=\"1\"]").count(), dot.matches(" -> ").count());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn examples_and_verify_pass() {
    let o = run(&["examples"], "");
    assert!(o.status.success());
    assert!(!stdout(&o).contains("MISMATCH"));
    let o = run(&["verify", "--suite", "counts", "--max-m", "3"], "");
    assert!(o.status.success(), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.starts_with("family,n,lambda,sector,m,oracle,bijection,series,status\n"));
    assert_eq!(out.lines().count(), 1 + 16 * 4);
}

#[test]
fn output_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("wallforge-out-{}.csv", std::process::id()));
    let o = run(&["count", "--family", "D2", "--n", "2", "--m", "0..2", "--output", path.to_str().unwrap()], "");
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "m,count\n0,1\n1,1\n2,4\n");
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn usage_errors_exit_2() {
    for (args, stdin) in [
        (vec!["count", "--family", "A1", "--n", "1"], ""),
        (vec!["count", "--family", "B1", "--n", "3", "--lambda", "2"], ""),
        (vec!["count", "--family", "A1", "--n", "2", "--cross"], ""),
        (vec!["count", "--family", "A1", "--n", "2", "--m", "5..1"], ""),
        (vec!["map", "--family", "A2even", "--n", "2"], "not json"),
        (vec!["map", "--family", "A2even", "--n", "2"], "[1, 2]"),
        (vec!["invmap", "--family", "A2even", "--n", "2"], r#"{"kind": "a1", "quotient": []}"#),
        (vec!["series", "--case", "nope", "--n", "2"], ""),
    ] {
        let o = run(&args, stdin);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
    }
}

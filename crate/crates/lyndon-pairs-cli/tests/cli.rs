use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lyndon-pairs"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn classify_order_six() {
    let o = run(&["classify", "--d", "6", "--format", "tsv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let rows: Vec<Vec<&str>> = text.lines().skip(1).map(|l| l.split('\t').collect()).collect();
    assert_eq!(rows.len(), 8);
    let standard: Vec<&str> = rows.iter().filter(|r| r[4] == "standard").map(|r| r[0]).collect();
    assert_eq!(standard, ["6.4.1", "6.4.2", "6.5.3", "6.5.4"]);
    assert!(o.stderr.starts_with(b"enumerating"));
}

#[test]
fn gs_check_on_pair_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, r#"{{"alphabet": ["x", "y"], "atoms": ["x", "xy", "xyy", "xyyy", "xyyyy", "y"]}}"#).unwrap();
    let o = run(&["gs", "check", "--pair", file.path().to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(json(&o)["verdict"], "standard");
}

#[test]
fn pair_from_stdin() {
    let mut child = bin()
        .args(["pair", "atoms", "--pair", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(br#"{"alphabet": ["a", "b"], "obstructions": ["aab", "abb"]}"#).unwrap();
    let o = child.wait_with_output().unwrap();
    assert!(o.status.success());
    assert_eq!(json(&o)["atoms"], serde_json::json!(["a", "ab", "b"]));
}

#[test]
fn hilbert_series() {
    let o = run(&["hilbert", "--degree", "5", "--obstructions", "xxy,xyy"]);
    assert_eq!(json(&o)["coefficients"], serde_json::json!(["1", "2", "4", "6", "9", "12"]));
}

#[test]
fn exit_codes() {
    let malformed = run(&["pair", "atoms", "--obstructions", "xq"]);
    assert_eq!(malformed.status.code(), Some(1));
    assert!(malformed.stdout.is_empty());
    assert!(!malformed.stderr.is_empty());
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    let bound = run(&["gldim", "--obstructions", "xx", "--bound", "12"]);
    assert_eq!(bound.status.code(), Some(2));
    assert_eq!(json(&bound)["global_dimension"], serde_json::Value::Null);
    let gldim = run(&["gldim", "--obstructions", "xxy,xyy"]);
    assert_eq!(json(&gldim)["global_dimension"], 3);
}

#[test]
fn deterministic_output() {
    let args = ["--jobs", "3", "classify", "--d", "7"];
    let (a, b) = (run(&args), run(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let rows = json(&a);
    assert_eq!(rows.as_array().unwrap().len(), 30);
}

#[test]
fn lyndon_commands() {
    let o = run(&["lyndon", "list", "--max-length", "5", "--exact", "--alphabet", "a,b"]);
    assert_eq!(json(&o)["words"], serde_json::json!(["aaaab", "aaabb", "aabab", "aabbb", "ababb", "abbbb"]));
    let o = run(&["lyndon", "bracket", "xyy", "--format", "tsv"]);
    assert_eq!(stdout(&o).lines().nth(1), Some("xyy\t[[x,y],y]\txyy - 2yxy + yyx"));
    let o = run(&["lyndon", "factor", "yxyxx"]);
    assert_eq!(json(&o)["factors"], serde_json::json!(["y", "xy", "x", "x"]));
}

#[test]
fn catalog_and_pairs() {
    let o = run(&["catalog", "--family", "filiform-l", "--params", "4"]);
    assert_eq!(json(&o)[0]["obstructions"], serde_json::json!(["xxy", "xyxyy", "xyyy"]));
    let o = run(&["catalog", "--family", "golden", "--params", "7", "--format", "tsv"]);
    assert_eq!(stdout(&o).lines().count(), 31);
    let o = run(&["pair", "check", "--atoms", "x xy xyy y"]);
    assert_eq!(json(&o)["pair"]["invariants"]["d"], 4);
    let o = run(&["pair", "connected", "--atoms", "x,xxy,xy,xyxyy,xyy,y"]);
    assert_eq!(json(&o)["component"], serde_json::json!(["x", "xxy", "xy", "xyy", "y"]));
    let o = run(&["gs", "complete", "--atoms", "x xxy xxyxy xy xyy xyyy y"]);
    assert_eq!(json(&o)["verdict"], "degenerates");
    assert_eq!(run(&["enumerate", "--d", "5", "--alphabet", "x,y,z"]).status.code(), Some(0));
}

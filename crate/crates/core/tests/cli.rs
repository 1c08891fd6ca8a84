use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weierstrass")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path(name: &str) -> String {
    data(name).to_string_lossy().into_owned()
}

#[test]
fn genus_of_trigonal_and_hyperelliptic_files() {
    let o = run(&["genus", &path("trigonal_genus3.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("genus: 3"));
    let o = run(&["genus", &path("genus2_x5_plus_1.json")]);
    assert!(stdout(&o).contains("genus: 2"));
}

#[test]
fn malformed_file_exits_2_with_position() {
    let o = run(&["genus", &path("malformed.json")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line "));
    assert_eq!(run(&["genus"]).status.code(), Some(2));
    assert_eq!(run(&["weierstrass", &path("genus2_x5_plus_1.json"), "--method", "fast"]).status.code(), Some(2));
}

#[test]
fn weierstrass_footer_and_rows() {
    let o = run(&["weierstrass", &path("genus2_x5_plus_1.json"), "--method", "both"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("total 6 / expected 6 (g=2)"), "{text}");
    // x = -1, the quartic block of degree 4, and infinity: six points of weight 1
    assert_eq!(text.lines().filter(|l| l.contains("weight 1 ")).count(), 3);
    let o = run(&["weierstrass", &path("trigonal_genus3.json"), "--method", "wronskian"]);
    assert!(stdout(&o).contains("total 24 / expected 24 (g=3)"));
}

#[test]
fn gaps_at_ramified_and_generic_points() {
    let o = run(&["gaps", &path("genus2_x5_plus_1.json"), "--place", "x=-1"]);
    let text = stdout(&o);
    assert!(text.contains("gaps: 1 3"), "{text}");
    assert!(text.contains("l(kP), k=0..4: 1 1 2 2 3"));
    let o = run(&["gaps", &path("genus2_x5_plus_1.json"), "--place", "(x=0, y=1)"]);
    let text = stdout(&o);
    assert!(text.contains("gaps: 1 2") && text.contains("weight: 0"), "{text}");
    let o = run(&["gaps", &path("genus2_x5_plus_1.json"), "--place", "x=0"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn prop5_and_prop6_verdicts() {
    let o = run(&["prop5", "--genus", "2", "--prime", "11"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("subgroup size: 16 (expected 4^g = 16)"));
    let o = run(&["prop5", &path("genus2_x5_plus_1.json"), "--prime", "5"]);
    assert_eq!(o.status.code(), Some(4));
    let o = run(&["prop5", "--genus", "2", "--prime", "11", "--budget", "8"]);
    assert_eq!(o.status.code(), Some(5));

    let o = run(&["prop6", "--genus", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("div(f) = 3*P(x=0, y=0) - 3*P(x=1, y=0)"), "{text}");
    assert!(text.contains("order: 3 (expected 3)"));
    assert_eq!(run(&["prop6", "--genus", "4", "--prime", "101"]).status.code(), Some(0));
    assert_eq!(run(&["prop6", "--genus", "2"]).status.code(), Some(4));
}

#[test]
fn zeta_output_and_budget() {
    let o = run(&["zeta", &path("elliptic_f5.json")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("L(T) coefficients: 1 -2 5"));
    assert!(text.contains("functional equation: OK"));
    assert_eq!(run(&["zeta", &path("genus2_f11.json"), "--budget", "100"]).status.code(), Some(5));
    assert_eq!(run(&["zeta", &path("genus2_x5_plus_1.json")]).status.code(), Some(4));
    assert_eq!(run(&["zeta", &path("genus2_x5_plus_1.json"), "--prime", "11"]).status.code(), Some(0));
}

#[test]
fn json_output_is_reproducible() {
    for args in [
        vec!["--json", "weierstrass", "genus2_x5_plus_1.json"],
        vec!["--json", "--seed", "5", "prop5", "--genus", "2", "--prime", "7"],
        vec!["--json", "prop6", "--genus", "4"],
        vec!["--json", "zeta", "genus2_f11.json"],
    ] {
        let args: Vec<String> = args
            .iter()
            .map(|a| if a.ends_with(".json") { path(a) } else { a.to_string() })
            .collect();
        let args: Vec<&str> = args.iter().map(|s| s.as_str()).collect();
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout);
        let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
        assert!(v.is_object());
    }
}

#[test]
fn json_report_schema() {
    let o = run(&["--json", "weierstrass", &path("trigonal_genus3.json"), "--method", "wronskian"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["total_weight"], 24);
    assert_eq!(v["method"], "wronskian");
    assert!(v["places"][0]["gaps"].is_null());
    let o = run(&["--json", "prop6", "--genus", "3"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["proposition"], "prop6");
    assert_eq!(v["verdict"], true);
    assert_eq!(v["field"]["type"], "Q");
}

use std::fs;
use std::process::{Command, Output};

use bricklab_core::graph6::to_graph6;
use bricklab_core::Graph;

fn bricklab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bricklab"))
        .args(args)
        .env_remove("BRICKLAB_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn props_of_petersen() {
    let o = bricklab(&["props", "PETERSEN"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("brick: true"));
    assert!(text.contains("claw_free: false"));
}

#[test]
fn decompose_alias_splits_into_two_k4() {
    let o = bricklab(&["decompose", "W6_PLUSPLUS_MINUS_Y3Y4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("b: 2"));
    assert_eq!(text.matches("simple = C~ (K4)").count(), 2);
}

#[test]
fn catalog_and_classify() {
    let o = bricklab(&["catalog", "w6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("graph6: E|fG"));
    let o = bricklab(&["catalog"]);
    assert!(stdout(&o).contains("W6_PLUSPLUS_MINUS_Y3Y4"));
    let o = bricklab(&["classify", "W6_PLUSPLUS"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("b_invariant: 5"));
    assert!(text.contains("every_b_invariant_solitary: true"));
    // graph6 input works the same as a name
    let o = bricklab(&["classify", "E~vG"]);
    assert!(stdout(&o).contains("b_invariant: 5"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(bricklab(&["props", "NOT_A_GRAPH"]).status.code(), Some(2));
    assert_eq!(bricklab(&["catalog", "K5"]).status.code(), Some(2));
    assert_eq!(bricklab(&["census"]).status.code(), Some(2));
    assert_eq!(bricklab(&["census", "--max-n", "0"]).status.code(), Some(2));
    assert_eq!(bricklab(&["census", "--max-n", "4", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(bricklab(&["census", "--in", "/no/such/file.g6"]).status.code(), Some(2));
    // not matching covered
    assert_eq!(bricklab(&["classify", "A?"]).status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_bricklab"))
        .args(["census", "--max-n", "4"])
        .env("BRICKLAB_JOBS", "0")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn capacity_errors_exit_three() {
    assert_eq!(bricklab(&["census", "--max-n", "11"]).status.code(), Some(3));
    let big = to_graph6(&Graph::complete(34)).unwrap();
    assert_eq!(bricklab(&["props", &big]).status.code(), Some(3));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("big.g6");
    fs::write(&path, format!("{big}\nC~\n")).unwrap();
    let o = bricklab(&["census", "--in", path.to_str().unwrap(), "--check", "thm11"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("capacity:"));
}

#[test]
fn main_check_reports_the_extra_graph() {
    let o = bricklab(&["census", "--max-n", "6", "--claw-free", "--check", "main"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("unexpected: EL~o"));
    assert!(text.contains("verified up to n = 6"));
    let o = bricklab(&[
        "census",
        "--max-n",
        "6",
        "--claw-free",
        "--expect",
        "C6BAR_PLUS,W6,W6_PLUS,W6_PLUSPLUS,EL~o",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict: pass"));
}

#[test]
fn fake_expected_set_exits_one() {
    let o = bricklab(&[
        "census",
        "--max-n",
        "6",
        "--claw-free",
        "--expect",
        "C6BAR_PLUS,W6_PLUS,W6_PLUSPLUS,EL~o",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("unexpected: W6"));
}

#[test]
fn thm11_census_passes() {
    let o = bricklab(&["census", "--max-n", "8", "--check", "thm11", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("exception R8: 1 b-invariant edges"));
}

#[test]
fn reports_and_cache_from_the_command_line() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.jsonl");
    let cache = dir.path().join("cache.jsonl");
    let run = |jobs: &str| {
        let o = bricklab(&[
            "census",
            "--max-n",
            "8",
            "--claw-free",
            "--check",
            "main",
            "--check",
            "thm11",
            "--out",
            out.to_str().unwrap(),
            "--jobs",
            jobs,
            "--cache",
            cache.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(1));
        fs::read(&out).unwrap()
    };
    let cold = run("1");
    let warm = run("4");
    assert_eq!(cold, warm);
    let text = String::from_utf8(cold).unwrap();
    assert!(text.lines().last().unwrap().starts_with("{\"summary\":"));

    let csv = dir.path().join("r.csv");
    let o = bricklab(&[
        "census",
        "--max-n",
        "6",
        "--claw-free",
        "--out",
        csv.to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let text = fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("\"graph6\","));
    assert!(text.contains("\"EL~o\""));
}

#[test]
fn skipped_lines_are_reported_with_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("in.g6");
    fs::write(&path, "C~\ngarbage\n").unwrap();
    let o = bricklab(&["census", "--in", path.to_str().unwrap(), "--check", "thm11"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("in.g6:2:"));
    assert!(stdout(&o).contains("1 unreadable lines"));
}

#[test]
fn selftest_subset() {
    let o = bricklab(&["selftest", "--only", "1,2,7"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("PASS")).count(), 3);
}

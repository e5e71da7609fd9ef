//! End-to-end tests of the binary: artifact bytes, exit codes, determinism.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};
use std::time::Instant;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cayley-chroma"))
}

fn tmpdir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cayley-chroma-test-{tag}-{}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

#[test]
fn golden_table_byte_exact_through_cli() {
    let dir = tmpdir("golden1");
    let out = dir.join("o");
    let started = Instant::now();
    let result = run(&[
        "color",
        "thm5-total",
        "--n",
        "13",
        "--k",
        "5",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(result.status.success(), "{result:?}");
    assert!(started.elapsed().as_secs_f64() < 1.0);
    let written = fs::read_to_string(out.join("matrix.csv")).unwrap();
    assert_eq!(written, cayley_chroma::golden::TABLE1_CSV);

    let out2 = dir.join("o2");
    let result = run(&[
        "color",
        "thm5-total",
        "--n",
        "25",
        "--k",
        "5",
        "--out",
        out2.to_str().unwrap(),
    ]);
    assert!(result.status.success());
    let written = fs::read_to_string(out2.join("matrix.csv")).unwrap();
    assert_eq!(written, cayley_chroma::golden::TABLE2_CSV);
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn golden_subcommand_passes() {
    let result = run(&["golden"]);
    assert!(result.status.success());
    let stdout = String::from_utf8_lossy(&result.stdout);
    assert!(stdout.contains("table1: matches"));
    assert!(stdout.contains("table2: matches"));
}

#[test]
fn outputs_are_deterministic() {
    let dir = tmpdir("det");
    for name in ["a", "b"] {
        let out = dir.join(name);
        let result = run(&[
            "color",
            "gyro-total",
            "--m",
            "8",
            "--s1",
            "1,2,6,7",
            "--out",
            out.to_str().unwrap(),
        ]);
        assert!(result.status.success(), "{result:?}");
    }
    for artifact in ["graph.json", "matrix.csv", "report.json"] {
        let a = fs::read(dir.join("a").join(artifact)).unwrap();
        let b = fs::read(dir.join("b").join(artifact)).unwrap();
        assert_eq!(a, b, "{artifact} differs between identical runs");
    }
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes_follow_the_contract() {
    // Usage error: unknown method.
    let result = run(&["color", "no-such-method", "--n", "3"]);
    assert_eq!(result.status.code(), Some(1));

    // Verification failure: deliberately broken artifact.
    let dir = tmpdir("exit2");
    let out = dir.join("o");
    assert!(run(&[
        "color",
        "thm5-total",
        "--n",
        "9",
        "--k",
        "3",
        "--out",
        out.to_str().unwrap(),
    ])
    .status
    .success());
    let matrix = fs::read_to_string(out.join("matrix.csv")).unwrap();
    // Make two adjacent vertices share a color.
    let broken = matrix.replace("\n0,1,", "\n0,2,");
    let bad_path = dir.join("bad.csv");
    fs::write(&bad_path, broken).unwrap();
    let result = run(&[
        "verify",
        "total",
        "--graph",
        out.join("graph.json").to_str().unwrap(),
        "--artifact",
        bad_path.to_str().unwrap(),
    ]);
    assert_eq!(result.status.code(), Some(2), "{result:?}");

    // Budget exceeded.
    let result = run(&[
        "oracle",
        "chi",
        "--graph",
        out.join("graph.json").to_str().unwrap(),
        "--budget",
        "1",
    ]);
    assert_eq!(result.status.code(), Some(3));
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_round_trip_via_files() {
    let dir = tmpdir("roundtrip");
    let out = dir.join("o");
    assert!(run(&[
        "color",
        "thm2-lift",
        "--n",
        "5",
        "--out",
        out.to_str().unwrap(),
    ])
    .status
    .success());
    let result = run(&[
        "verify",
        "vertex",
        "--graph",
        out.join("graph.json").to_str().unwrap(),
        "--artifact",
        out.join("coloring.json").to_str().unwrap(),
    ]);
    assert!(result.status.success(), "{result:?}");
    let stdout = String::from_utf8_lossy(&result.stdout);
    assert!(stdout.contains("\"proper\": true"));
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn build_reports_shape() {
    let dir = tmpdir("build");
    let out = dir.join("o");
    let result = run(&[
        "build",
        "gyro",
        "--m",
        "8",
        "--k",
        "2",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(result.status.success());
    let stdout = String::from_utf8_lossy(&result.stdout);
    assert!(stdout.contains("16 vertices"));
    assert!(stdout.contains("5-regular"));
    let manifest = fs::read_to_string(out.join("manifest.json")).unwrap();
    assert!(manifest.contains("\"command\": \"build gyro\""));
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn iso_and_oracle_json() {
    let result = run(&["iso", "--n", "5", "--s1", "1,4", "--s2", "2,3"]);
    assert!(result.status.success());
    assert!(String::from_utf8_lossy(&result.stdout).contains("\"multiplier\":2"));

    let dir = tmpdir("oracle");
    let out = dir.join("o");
    assert!(run(&[
        "build",
        "power-cycle",
        "--n",
        "8",
        "--k",
        "2",
        "--out",
        out.to_str().unwrap(),
    ])
    .status
    .success());
    let result = run(&[
        "oracle",
        "chi",
        "--graph",
        out.join("graph.json").to_str().unwrap(),
    ]);
    assert!(result.status.success());
    let stdout = String::from_utf8_lossy(&result.stdout);
    assert!(stdout.contains("\"value\": 4"));
    assert!(stdout.contains("\"status\": \"Exact\""));
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn conformable_method_accepts_both_names() {
    let dir = tmpdir("conf");
    for (tag, method) in [("a", "thm3/4-conformable"), ("b", "conformable")] {
        let out = dir.join(tag);
        let result = run(&[
            "color",
            method,
            "--n",
            "8",
            "--k",
            "2",
            "--out",
            out.to_str().unwrap(),
        ]);
        assert!(result.status.success(), "{method}: {result:?}");
    }
    let a = fs::read(dir.join("a").join("coloring.json")).unwrap();
    let b = fs::read(dir.join("b").join("coloring.json")).unwrap();
    assert_eq!(a, b);
    fs::remove_dir_all(&dir).unwrap();
}

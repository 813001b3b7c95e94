use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn grape(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grape")).args(args).output().unwrap()
}

fn lesmis() -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data/lesmiserables.csv")
        .display()
        .to_string()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn diagram_output_is_byte_identical_across_runs() {
    let dir = TempDir::new().unwrap();
    let input = lesmis();
    let mut outputs = Vec::new();
    for run in 0..2 {
        let json = dir.path().join(format!("d{run}.json"));
        let svg = dir.path().join(format!("d{run}.svg"));
        let o = grape(&[
            "diagram",
            "--input",
            &input,
            "--transform",
            "inverse",
            "--feature",
            "hub",
            "--mode",
            "steady",
            "--out",
            json.to_str().unwrap(),
            "--svg",
            svg.to_str().unwrap(),
        ]);
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
        outputs.push((fs::read(&json).unwrap(), fs::read(&svg).unwrap()));
    }
    assert_eq!(outputs[0], outputs[1]);
    let same = grape(&[
        "bottleneck",
        dir.path().join("d0.json").to_str().unwrap(),
        dir.path().join("d1.json").to_str().unwrap(),
    ]);
    assert_eq!(code(&same), 0);
    assert_eq!(
        String::from_utf8_lossy(&same.stdout).trim().parse::<f64>().unwrap(),
        0.0
    );
}

#[test]
fn hubs_at_the_floor_gap() {
    let o = grape(&[
        "hubs",
        "--input",
        &lesmis(),
        "--transform",
        "inverse",
        "--feature",
        "hub",
        "--mode",
        "ranging",
        "--gap",
        "floor",
    ]);
    assert_eq!(code(&o), 0);
    let out = String::from_utf8(o.stdout).unwrap();
    for name in ["Cosette", "Courfeyrac", "Enjolras", "Marius", "Myriel", "Valjean"] {
        assert!(out.contains(name), "{out}");
    }
    assert!(out.starts_with('#'));
}

#[test]
fn oracle_counts_agree() {
    let o = grape(&[
        "oracle",
        "rho",
        "--input",
        &lesmis(),
        "--transform",
        "inverse",
        "--feature",
        "hub",
        "--u",
        "0.1",
        "--v",
        "0.5",
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let out = String::from_utf8(o.stdout).unwrap();
    let nums: Vec<&str> = out.split_whitespace().filter(|t| t.parse::<usize>().is_ok()).collect();
    assert!(nums.len() >= 2 && nums.windows(2).all(|w| w[0] == w[1]), "{out}");
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("o.json");
    let out = out.to_str().unwrap();
    assert_eq!(
        code(&grape(&[
            "diagram",
            "--input",
            &lesmis(),
            "--feature",
            "nope",
            "--mode",
            "steady",
            "--out",
            out
        ])),
        1
    );
    assert_eq!(code(&grape(&["frobnicate"])), 1);
    assert_eq!(code(&grape(&["--help"])), 0);
    let missing = dir.path().join("missing.csv");
    assert_eq!(
        code(&grape(&[
            "diagram",
            "--input",
            missing.to_str().unwrap(),
            "--feature",
            "hub",
            "--mode",
            "steady",
            "--out",
            out
        ])),
        2
    );

    let bad = dir.path().join("bad.csv");
    fs::write(&bad, "a,b,1\nb,c,x\n").unwrap();
    let o = grape(&[
        "diagram",
        "--input",
        bad.to_str().unwrap(),
        "--feature",
        "hub",
        "--mode",
        "steady",
        "--out",
        out,
    ]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains('2'));

    let o = Command::new(env!("CARGO_BIN_EXE_grape"))
        .env("GRAPE_MAX_SETS", "10")
        .args([
            "diagram",
            "--input",
            &lesmis(),
            "--feature",
            "independent",
            "--mode",
            "steady",
            "--out",
            out,
        ])
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
}

#[test]
fn unbalanced_search_reports_a_witness() {
    let o = grape(&[
        "oracle",
        "unbalanced",
        "--feature",
        "kernel",
        "--mode",
        "steady",
        "--trials",
        "200",
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(!o.stdout.is_empty());
}

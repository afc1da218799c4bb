use std::process::{Command, Output};

fn brunnian(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brunnian"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn rank_csv_brunnian_column() {
    let o = brunnian(&["rank", "--n", "3", "--qmax", "6", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let column: Vec<&str> = text.lines().skip(1).map(|l| l.rsplit(',').next().unwrap()).collect();
    assert_eq!(column, ["0", "1", "2", "3", "6", "9"]);
    assert!(text.contains("\r\n"));
}

#[test]
fn rank_n2() {
    let o = brunnian(&["rank", "--n", "2", "--qmax", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let b: Vec<u64> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["brunnian"].as_u64().unwrap())
        .collect();
    assert_eq!(b, [1, 0, 0]);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(brunnian(&["rank", "--n", "1", "--qmax", "3"]).status.code(), Some(2));
    assert_eq!(
        brunnian(&["rank", "--n", "3", "--format", "xml"]).status.code(),
        Some(2)
    );
    assert_eq!(
        brunnian(&["generators", "--n", "3", "--degmax", "3", "--level", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        brunnian(&[
            "generators",
            "--n",
            "3",
            "--degmax",
            "3",
            "--family",
            "prop5",
            "--level",
            "3"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(brunnian(&["bogus"]).status.code(), Some(2));
}

#[test]
fn generator_listings() {
    let o = brunnian(&["generators", "--n", "3", "--degmax", "3", "--level", "2"]);
    assert_eq!(stdout(&o), "1 A[2,3]\n2 [A[2,3],A[1,3]]\n3 [[A[2,3],A[1,3]],A[1,3]]\n");
    let o = brunnian(&["generators", "--n", "4", "--degmax", "3"]);
    assert_eq!(stdout(&o).lines().count(), 2);
    let o = brunnian(&["generators", "--n", "3", "--degmax", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "");
}

#[test]
fn generator_families() {
    let o = brunnian(&[
        "generators",
        "--n",
        "3",
        "--degmax",
        "4",
        "--family",
        "prop6",
        "--level",
        "2",
    ]);
    assert_eq!(stdout(&o).lines().count(), 4);
    let o = brunnian(&[
        "generators",
        "--n",
        "4",
        "--degmax",
        "2",
        "--family",
        "lemma4",
        "--x",
        "3",
        "--y",
        "1,2",
    ]);
    assert_eq!(stdout(&o), "1 A[3,4]\n2 [A[3,4],A[1,4]]\n2 [A[3,4],A[2,4]]\n");
    let o = brunnian(&[
        "generators",
        "--n",
        "3",
        "--degmax",
        "2",
        "--level",
        "2",
        "--format",
        "csv",
    ]);
    assert_eq!(
        stdout(&o),
        "degree,monomial\r\n1,\"A[2,3]\"\r\n2,\"[A[2,3],A[1,3]]\"\r\n"
    );
    let o = brunnian(&[
        "generators",
        "--n",
        "3",
        "--degmax",
        "2",
        "--level",
        "2",
        "--format",
        "latex",
    ]);
    assert!(stdout(&o).contains("2 & $[A_{2,3},A_{1,3}]$ \\\\"));
}

#[test]
fn verify_all_passes() {
    let o = brunnian(&["verify", "--n", "3", "--qmax", "6", "--check", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("checks passed\n"));
}

#[test]
fn verify_json() {
    let o = brunnian(&[
        "verify", "--n", "4", "--qmax", "6", "--check", "theorem8", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "pass");
    let r = &v["reports"][0];
    assert_eq!(r["check"], "theorem8");
    assert_eq!(r["status"], "pass");
    for key in ["n", "q_max", "details", "millis"] {
        assert!(r.get(key).is_some(), "{key}");
    }
}

#[test]
fn resource_guard() {
    let o = brunnian(&["verify", "--n", "4", "--qmax", "99"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--force"));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--n", "4", "--qmax", "4", "--check", "all"];
    assert_eq!(stdout(&brunnian(&args)), stdout(&brunnian(&args)));
    let args = ["rank", "--n", "5", "--qmax", "8", "--format", "latex"];
    assert_eq!(stdout(&brunnian(&args)), stdout(&brunnian(&args)));
}

#[test]
fn thread_cap_and_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.txt");
    let o = Command::new(env!("CARGO_BIN_EXE_brunnian"))
        .args(["verify", "--n", "3", "--qmax", "3", "--output", path.to_str().unwrap()])
        .env("BRUNNIAN_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(std::fs::read_to_string(&path).unwrap().contains("checks passed"));
    let bad = Command::new(env!("CARGO_BIN_EXE_brunnian"))
        .args(["rank", "--n", "3"])
        .env("BRUNNIAN_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn selftest_is_seeded() {
    let a = brunnian(&["selftest", "--seed", "3", "--cases", "50"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(
        stdout(&a),
        stdout(&brunnian(&["selftest", "--seed", "3", "--cases", "50"]))
    );
}

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nearrect"))
        .arg("--no-timing")
        .args(args)
        .env_remove("NEARRECT_ORACLE_MAX_DEGREE")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn single_coefficient() {
    assert_eq!(
        stdout(&["kron", "--mu", "4,3,1", "--nu", "4,4", "--theta", "3,2,2,1"]),
        "2\n"
    );
    for method in ["closed", "oracle", "both"] {
        let args = [
            "kron",
            "--mu",
            "4,4",
            "--nu",
            "4,3,1",
            "--theta",
            "4,1,1,1,1",
            "--method",
            method,
        ];
        assert_eq!(stdout(&args), "1\n", "{method}");
    }
}

#[test]
fn expansion_golden() {
    assert_eq!(
        stdout(&["kron", "--mu", "2,2", "--nu", "2,2"]),
        "1  (4)\n1  (2,2)\n1  (1,1,1,1)\n"
    );
    let expected = "\
1  (6,1)
1  (5,2)
1  (5,1,1)
1  (4,3)
2  (4,2,1)
1  (4,1,1,1)
1  (3,3,1)
1  (3,2,2)
2  (3,2,1,1)
1  (3,1,1,1,1)
1  (2,2,2,1)
1  (2,2,1,1,1)
";
    for method in ["closed", "oracle", "both"] {
        let args = ["kron", "--mu", "3,3,1", "--nu", "4,3", "--method", method];
        assert_eq!(stdout(&args), expected, "{method}");
    }
}

#[test]
fn oracle_engine() {
    // s(2,1) * s(2,1) = s(3) + s(2,1) + s(1,1,1)
    let args = ["kron", "--mu", "2,1", "--nu", "2,1", "--method", "oracle"];
    assert_eq!(stdout(&args), "1  (3)\n1  (2,1)\n1  (1,1,1)\n");
}

#[test]
fn counts() {
    assert_eq!(stdout(&["count", "tau", "-k", "3", "-n", "5"]), "21\n");
    assert_eq!(
        stdout(&["count", "tau", "-k", "3", "-n", "5", "--method", "brute"]),
        "21\n"
    );
    assert_eq!(stdout(&["count", "lsum", "-k", "5"]), "1\n");
    assert_eq!(
        stdout(&["count", "lsum", "-k", "5", "--method", "brute"]),
        "1\n"
    );
    assert_eq!(
        stdout(&["count", "rho", "-k", "1", "-i", "2", "-n", "5"]),
        "5\n"
    );
    assert_eq!(stdout(&["count", "sigma", "-k", "4", "-n", "2"]), "2\n");
    assert_eq!(
        stdout(&["count", "tau", "-k", "2", "--range", "0..5"]),
        "0  1\n1  1\n2  2\n3  3\n4  6\n5  10\n"
    );
    assert_eq!(
        stdout(&["count", "lsum", "--range", "5..6", "--format", "csv"]),
        "k,value\n5,1\n6,5\n"
    );
}

#[test]
fn stats_fields() {
    let out = stdout(&["stats", "8,6,2,1"]);
    for line in ["sigma: 22211", "a2: 0", "b1: 2"] {
        assert!(out.lines().any(|l| l == line), "{line} missing from\n{out}");
    }
    let out = stdout(&["stats", "6,5,3,3,3,2,2"]);
    for line in ["distinct: 4", "repeated: 2", "two_removable: 2"] {
        assert!(out.lines().any(|l| l == line), "{line} missing from\n{out}");
    }
    let out = stdout(&["stats", "4,4,3,2,1"]);
    for line in [
        "even_parts: 3",
        "distinct_even_parts: 2",
        "odd_parts: 1",
        "distinct_odd_parts: 1",
    ] {
        assert!(out.lines().any(|l| l == line), "{line} missing from\n{out}");
    }
    assert!(stdout(&["stats", "0"]).contains("syt_count: 1"));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["kron", "--mu", "3", "--nu", "2,2"]), 2);
    assert_eq!(
        code(&["kron", "--mu", "2,2", "--nu", "2,2", "--theta", "3"]),
        2
    );
    assert_eq!(code(&["kron", "--mu", "2,3", "--nu", "3,2"]), 2);
    assert_eq!(code(&["kron", "--mu", "x", "--nu", "2"]), 2);
    assert_eq!(code(&["count", "tau", "-k", "3"]), 2);
    assert_eq!(code(&["count", "tau", "-k", "3", "--range", "5..2"]), 2);
    assert_eq!(code(&["verify", "everything"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(
        code(&["kron", "--mu", "3,1,1", "--nu", "3,1,1", "--method", "closed"]),
        3
    );
    assert_eq!(
        code(&["count", "tau", "-k", "6", "-n", "4", "--method", "closed"]),
        3
    );
    assert_eq!(
        code(&["count", "sigma", "-k", "3", "-n", "4", "--method", "closed"]),
        3
    );
    assert_eq!(
        code(&["kron", "--mu", "3,1,1", "--nu", "3,1,1", "--method", "both"]),
        3
    );
    assert_eq!(code(&["kron", "--mu", "3,1,1", "--nu", "3,1,1"]), 0);
    assert_eq!(code(&["verify", "enumeration", "--n-max", "8"]), 0);
}

#[test]
fn oracle_cap_comes_from_the_environment() {
    let capped = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_nearrect"))
            .args(args)
            .env("NEARRECT_ORACLE_MAX_DEGREE", "5")
            .output()
            .unwrap()
            .status
            .code()
            .unwrap()
    };
    assert_eq!(
        capped(&["kron", "--mu", "3,3", "--nu", "3,3", "--method", "oracle"]),
        2
    );
    assert_eq!(
        capped(&["kron", "--mu", "3,3", "--nu", "3,3", "--method", "closed"]),
        0
    );
    assert_eq!(
        capped(&["kron", "--mu", "3,2", "--nu", "3,2", "--method", "oracle"]),
        0
    );
    assert_eq!(capped(&["verify", "formulas", "--n-max", "3"]), 2);
}

#[test]
fn verify_suites_pass() {
    let out = stdout(&["verify", "formulas", "--n-max", "5"]);
    assert!(out.lines().all(|l| !l.starts_with("FAIL")), "{out}");
    assert!(out.ends_with("checks passed\n"));
    let out = stdout(&["verify", "all", "--n-max", "4", "--format", "csv"]);
    assert!(out.starts_with("name,passed,detail\n"));
    assert!(!out.contains(",false,"));
}

#[test]
fn json_round_trips_byte_for_byte() {
    let cases: &[&[&str]] = &[
        &["kron", "--mu", "4,3,1", "--nu", "4,4"],
        &["kron", "--mu", "4,3,1", "--nu", "4,4", "--theta", "3,2,2,1"],
        &["count", "sigma", "-k", "4", "--range", "0..6"],
        &["count", "rho", "-k", "1", "-i", "2", "-n", "5"],
        &["verify", "theorems", "--n-max", "3"],
        &["stats", "7,5,5"],
    ];
    for args in cases {
        let mut full = args.to_vec();
        full.extend(["--format", "json"]);
        let text = stdout(&full);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(format!("{value}\n"), text, "{args:?}");
    }
}

#[test]
fn json_schema() {
    let text = stdout(&["kron", "--mu", "4,3,1", "--nu", "4,4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["command"], "kron");
    assert_eq!(v["meta"]["degree"], 8);
    assert_eq!(v["meta"]["family"]["kind"], "one-box-row");
    let terms = v["result"]["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 15);
    assert_eq!(terms[0]["partition"], serde_json::json!([7, 1]));
    assert_eq!(terms[0]["coeff"], "1");
    assert!(v["meta"].get("elapsed_us").is_none());
}

#[test]
fn timing_is_reported_unless_disabled() {
    let out = Command::new(env!("CARGO_BIN_EXE_nearrect"))
        .args(["count", "tau", "-k", "2", "-n", "4", "--format", "json"])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["meta"]["elapsed_us"].is_u64());
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["kron", "--mu", "3,3,1", "--nu", "3,3,1", "--format", "json"][..],
        &["verify", "identities", "--n-max", "3"][..],
    ] {
        assert_eq!(stdout(args), stdout(args));
    }
}

use std::process::{Command, Output};

use serde_json::Value;

fn sadic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sadic"))
        .args(args)
        .env_remove("SADIC_DEPTH")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = sadic(&all);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn summary(v: &Value, key: &str) -> String {
    v["summary"]
        .as_array()
        .unwrap()
        .iter()
        .find(|row| row[0] == key)
        .unwrap_or_else(|| panic!("no summary row {key}"))[1]
        .as_str()
        .unwrap()
        .to_string()
}

#[test]
fn reports_carry_the_schema() {
    let v = json(&["catalog"]);
    assert_eq!(v["schema"], "sadic-report/1");
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(v["command"][0], "catalog");
    assert!(v["timing_ms"].is_u64());
}

#[test]
fn info_shows_rules_and_matrices() {
    let out = sadic(&["info", "chacon", "--alpha", "period (0 1 2)"]);
    let text = String::from_utf8(out.stdout).unwrap();
    for needle in [
        "a -> aabba, b -> b",
        "a -> aab, b -> bba",
        "a -> a, b -> bbaab",
        "[3 0; 2 1]",
        "[2 1; 1 2]",
        "[1 2; 0 3]",
    ] {
        assert!(text.contains(needle), "missing {needle} in\n{text}");
    }
    let fib = String::from_utf8(sadic(&["info", "fibonacci"]).stdout).unwrap();
    assert!(fib.contains("a -> b, b -> ba"));
}

#[test]
fn languages() {
    let v = json(&["language", "chacon"]);
    assert_eq!(summary(&v, "words"), "aa ab ba bb");
    assert!(summary(&v, "status").starts_with("exact"));
    let v = json(&["language", "thue-morse-fibonacci", "--level", "1"]);
    assert_eq!(summary(&v, "words"), "ab ba bb");
}

#[test]
fn complexes() {
    let v = json(&["complex", "chacon"]);
    assert_eq!(
        (summary(&v, "V"), summary(&v, "E")),
        ("4".into(), "6".into())
    );
    assert_eq!(summary(&v, "S components"), "1");
    let v = json(&["complex", "barge-diamond-4letter"]);
    assert_eq!(summary(&v, "S components"), "2");
    let v = json(&["complex", "arnoux-rauzy", "--d", "3", "--universal"]);
    assert_eq!(
        (summary(&v, "V"), summary(&v, "E")),
        ("6".into(), "12".into())
    );
}

#[test]
fn cohomology_examples() {
    let v = json(&[
        "cohomology",
        "chacon",
        "--alpha",
        "padic 5/7",
        "--depth",
        "20",
    ]);
    assert_eq!(summary(&v, "H1"), "G_α ⊕ Z");
    assert_eq!(summary(&v, "semantics"), "exact");
    let v = json(&[
        "cohomology",
        "arnoux-rauzy",
        "--d",
        "3",
        "--directive",
        "period (0 1 2)",
    ]);
    assert_eq!(summary(&v, "H1"), "Z^3");
    let v = json(&["cohomology", "fibonacci"]);
    assert_eq!(summary(&v, "H1"), "Z^2");
}

#[test]
fn padic_commands() {
    let v = json(&["padic", "digits", "1/2", "--n", "6"]);
    assert_eq!(
        v["payload"]["value"]["digits"],
        serde_json::json!([2, 1, 1, 1, 1, 1])
    );
    let out = sadic(&["padic", "check-chacon"]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout)
            .unwrap()
            .matches("(holds)")
            .count(),
        3
    );
    let v = json(&["padic", "candidates", "0", "--bound", "2", "--n", "8"]);
    assert!(summary(&v, "list")
        .lines()
        .any(|l| l.ends_with("-> (0,0,0,0,0,0,0,0,…)@N=8")));
}

#[test]
fn malformed_file_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.sys");
    std::fs::write(&path, "alphabet = a b\nmember 0\na -> ab\nb - a\n").unwrap();
    let out = sadic(&["info", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 4, column"), "{err}");
    assert_eq!(sadic(&["info", "no-such-system"]).status.code(), Some(1));
}

#[test]
fn strict_mode_flags_lower_bounds() {
    let args = [
        "language",
        "chacon",
        "--directive",
        "seeded 7",
        "--depth",
        "2",
    ];
    let lax = sadic(&args);
    assert_eq!(lax.status.code(), Some(0));
    assert!(String::from_utf8(lax.stdout)
        .unwrap()
        .contains("lower-bound"));
    let mut strict = vec!["--strict"];
    strict.extend_from_slice(&args);
    assert_eq!(sadic(&strict).status.code(), Some(2));
    assert_eq!(
        sadic(&["--strict", "language", "chacon"]).status.code(),
        Some(0)
    );
}

#[test]
fn files_round_trip_through_the_cli() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fib.sys");
    std::fs::write(
        &path,
        "# Fibonacci\nalphabet = a b\nmember 0\nb -> ba\na -> b\ndirective = period (0)\n",
    )
    .unwrap();
    let v = json(&["cohomology", path.to_str().unwrap()]);
    assert_eq!(summary(&v, "H1"), "Z^2");
}

#[test]
fn dot_and_report_files() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("k.dot");
    let report = dir.path().join("r.json");
    let out = sadic(&[
        "--report",
        report.to_str().unwrap(),
        "complex",
        "chacon",
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("digraph") && text.contains("dashed"));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["schema"], "sadic-report/1");
}

#[test]
fn payloads_are_deterministic() {
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("timing_ms");
        v
    };
    for args in [
        &["cohomology", "chacon", "--depth", "8"][..],
        &["complex", "thue-morse-fibonacci", "--level", "1"],
    ] {
        assert_eq!(strip(json(args)), strip(json(args)));
    }
}

#[test]
fn depth_defaults_from_the_environment() {
    let run = |depth: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_sadic"));
        cmd.args(["--json", "language", "chacon", "--directive", "seeded 3"]);
        match depth {
            Some(d) => cmd.env("SADIC_DEPTH", d),
            None => cmd.env_remove("SADIC_DEPTH"),
        };
        let v: Value = serde_json::from_slice(&cmd.output().unwrap().stdout).unwrap();
        summary(&v, "status")
    };
    assert!(run(Some("3")).contains("depth 3"), "{}", run(Some("3")));
    assert!(!run(None).contains("depth 3"));
}

use std::path::PathBuf;
use std::process::{Command, Output};

fn kleingeo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kleingeo"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("kleingeo-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn fano_collinearity_reports_full_agreement() {
    let out = kleingeo(&["lemma1", "2", "1", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("agreement 35/35"), "{}", stdout(&out));
}

#[test]
fn normalizer_run_writes_stable_json() {
    let a = scratch("t1a.json");
    let b = scratch("t1b.json");
    for path in [&a, &b] {
        let out = kleingeo(&["theorem1", "2", "2", "1", "--out", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
    }
    let (a, b) = (std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["orders"]["normalizer"], 120);
    assert_eq!(v["orders"]["structural"], 60);
    assert_eq!(v["passed"], true);
    assert!(v.get("duration_ms").is_none());
}

#[test]
fn timings_flag_keeps_durations() {
    let path = scratch("timed.json");
    let out = kleingeo(&[
        "lemma1",
        "5",
        "1",
        "1",
        "--timings",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(path).unwrap()).unwrap();
    assert!(v["duration_ms"].is_u64());
}

#[test]
fn jobs_do_not_change_the_report() {
    let one = scratch("jobs1.json");
    let four = scratch("jobs4.json");
    for (path, jobs) in [(&one, "1"), (&four, "4")] {
        let out = kleingeo(&[
            "theorem1",
            "5",
            "1",
            "1",
            "--jobs",
            jobs,
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(std::fs::read(one).unwrap(), std::fs::read(four).unwrap());
}

#[test]
fn invalid_input_exits_with_two() {
    assert_eq!(kleingeo(&["field", "6", "1"]).status.code(), Some(2));
    assert_eq!(kleingeo(&["space", "2", "7", "1"]).status.code(), Some(2));
    assert_eq!(kleingeo(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn factorial_cap_exits_with_two() {
    let out = kleingeo(&["theorem1", "2", "3", "1", "--max-factorial", "1000"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("factorial cap"));
}

#[test]
fn excluded_affine_case_is_not_a_failure() {
    let out = kleingeo(&["affine", "2", "1", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("excluded"));
}

#[test]
fn s6_outer_reports_triple_transposition() {
    let path = scratch("s6.json");
    let out = kleingeo(&["s6-outer", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(path).unwrap()).unwrap();
    assert_eq!(v["flags"]["is_outer"], true);
    assert_eq!(v["conjugates"].as_array().unwrap().len(), 6);
    assert_eq!(v["table"].as_array().unwrap().len(), 720);
}

#[test]
fn sampled_strategy_is_seed_deterministic() {
    let a = scratch("s1.json");
    let b = scratch("s2.json");
    for path in [&a, &b] {
        let out = kleingeo(&[
            "theorem1",
            "2",
            "1",
            "3",
            "--strategy",
            "sampled",
            "--samples",
            "200",
            "--seed",
            "11",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    let (a, b) = (std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["sampling"]["seed"], 11);
    assert_eq!(v["sampling"]["normalizing"], 0);
}

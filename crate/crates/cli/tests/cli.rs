//! The binary end to end: outputs, exit codes, files.

use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arguesia")).args(args).env_remove("ARGUESIA_SEED").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("arguesia-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn harmonic_construction_prints_the_conjugate() {
    let o = run(&["construct", "harmonic", "--b", "0", "--c", "2", "--d", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "3/2\n");
    // midpoint goes to infinity
    let o = run(&["construct", "harmonic", "--b", "-1", "--c", "1", "--d", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "inf\n");
}

#[test]
fn coincident_harmonic_data_is_a_config_error() {
    let o = run(&["construct", "harmonic", "--b", "1", "--c", "1", "--d", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_single_seed_json() {
    let o = run(&["verify", "ramee", "--seed", "1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], true);
    assert_eq!(v["seed"], 1);
}

#[test]
fn verify_sweep_summary() {
    let o = run(&["verify", "quadrangle", "--seed", "5", "--trials", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("quadrangle: 6 of 6 verified, 0 false, 0 errors\n"), "{}", stdout(&o));
}

#[test]
fn seed_from_environment() {
    let with_env = Command::new(env!("CARGO_BIN_EXE_arguesia"))
        .args(["verify", "pascal", "--json"])
        .env("ARGUESIA_SEED", "7")
        .output()
        .unwrap();
    assert_eq!(with_env.stdout, run(&["verify", "pascal", "--seed", "7", "--json"]).stdout);
}

#[test]
fn replay_json_has_eleven_steps() {
    let o = run(&["replay", "ramee", "--seed", "1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["steps"].as_array().unwrap().len(), 11);
}

#[test]
fn replay_of_a_kind_without_a_trace_fails_cleanly() {
    assert_eq!(run(&["replay", "harmonic", "--seed", "1"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["verify", "bogus"]).status.code(), Some(2));
    assert_eq!(run(&["verify"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "ramee", "--trials", "0"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "ramee", "--bounds", "0"]).status.code(), Some(2));
}

#[test]
fn retry_exhaustion_exits_two() {
    let o = run(&["verify", "pascal", "--bounds", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("arguesia:"));
}

#[test]
fn config_file_round_trip_and_false_verdict() {
    let ok = scratch("ok.json");
    std::fs::write(&ok, r#"{"kind":"beaugrand","seed":3}"#).unwrap();
    let a = run(&["verify", "--config", ok.to_str().unwrap(), "--json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, run(&["verify", "beaugrand", "--seed", "3", "--json"]).stdout);

    // V pulled off the conic: the Apollonius steps must fail
    let bad = scratch("bad.json");
    std::fs::write(&bad, r#"{"kind":"beaugrand","seed":3,"overrides":{"V":["100/1","37/1","1/1"]}}"#).unwrap();
    let o = run(&["verify", "--config", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("verdict: ✗"));

    assert_eq!(run(&["verify", "pascal", "--config", bad.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn report_written_to_file() {
    let path = scratch("report.json");
    let o = run(&["verify", "harmonic", "--seed", "2", "--json", "-o", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["verdict"], true);
}

#[test]
fn figure_is_deterministic_svg() {
    let (a, b) = (scratch("a.svg"), scratch("b.svg"));
    for p in [&a, &b] {
        assert_eq!(run(&["figure", "pascal", "--seed", "4", "-o", p.to_str().unwrap()]).status.code(), Some(0));
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert!(text.starts_with("<svg") || text.starts_with("<?xml"));
    assert!(text.trim_end().ends_with("</svg>"));
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
}

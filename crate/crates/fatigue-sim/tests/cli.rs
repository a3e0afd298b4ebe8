//! End-to-end checks of the `fatigue-sim` binary: flag handling, artifact
//! contents, and error reporting.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fatigue-sim"))
}

fn run_ok(args: &[&str]) -> Output {
    let output = bin().args(args).output().expect("binary should spawn");
    assert!(
        output.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    output
}

fn run_err(args: &[&str]) -> String {
    let output = bin().args(args).output().expect("binary should spawn");
    assert!(!output.status.success(), "{args:?} unexpectedly succeeded");
    String::from_utf8(output.stderr).expect("stderr is UTF-8")
}

fn read(dir: &Path, name: &str) -> String {
    std::fs::read_to_string(dir.join(name)).unwrap_or_else(|e| panic!("reading {name}: {e}"))
}

#[test]
fn dump_config_round_trips() {
    let dumped = run_ok(&["simulate", "--dump-config"]).stdout;
    let text = String::from_utf8(dumped.clone()).unwrap();
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["subject"]["height_m"], 1.88);
    assert_eq!(value["motion"]["theta_high_deg"], 75.0);
    assert_eq!(value["paths"]["measurements"], serde_json::Value::Null);

    // Feeding the dump back as --config must resolve to the same config.
    let dir = tempfile::tempdir().unwrap();
    let config_path = dir.path().join("config.json");
    std::fs::write(&config_path, &dumped).unwrap();
    let redumped = run_ok(&[
        "simulate",
        "--dump-config",
        "--config",
        config_path.to_str().unwrap(),
    ])
    .stdout;
    assert_eq!(dumped, redumped);

    // Flags override config fields, with unit conversion where the flag
    // and the config disagree on units.
    let overridden = run_ok(&[
        "estimate",
        "--dump-config",
        "--height-cm",
        "170",
        "--mass-kg",
        "61.5",
    ])
    .stdout;
    let value: serde_json::Value = serde_json::from_slice(&overridden).unwrap();
    assert_eq!(value["subject"]["height_m"], 1.7);
    assert_eq!(value["subject"]["mass_kg"], 61.5);
}

#[test]
fn simulate_writes_the_motion_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let stdout = String::from_utf8(run_ok(&["simulate", "--out", out]).stdout).unwrap();

    for name in [
        "trajectory.csv",
        "trajectory.svg",
        "torque.csv",
        "torque.svg",
        "momentum.csv",
        "momentum.svg",
    ] {
        assert!(stdout.contains(name), "stdout missing {name}: {stdout}");
        assert!(dir.path().join(name).exists(), "{name} not written");
    }

    let torque = read(dir.path(), "torque.csv");
    let mut lines = torque.lines();
    assert_eq!(
        lines.next(),
        Some("time_s,angle_rad,velocity_rad_s,acceleration_rad_s2,torque_Nm")
    );
    let first: Vec<f64> = lines
        .next()
        .unwrap()
        .split(',')
        .map(|f| f.parse().unwrap())
        .collect();
    assert_eq!(first[0], 0.0);
    assert_eq!(first[2], 0.0);
    assert!(
        (first[4] - 13.5429).abs() < 1e-3,
        "torque at rest: {}",
        first[4]
    );
    assert_eq!(torque.lines().count(), 2002); // header + 2001 samples

    for name in ["trajectory.svg", "torque.svg", "momentum.svg"] {
        let svg = read(dir.path(), name);
        assert!(svg.starts_with("<svg"), "{name} is not an SVG");
        assert!(svg.contains("polyline"), "{name} draws nothing");
    }
}

#[test]
fn repeated_runs_are_byte_identical() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    run_ok(&["simulate", "--out", a.path().to_str().unwrap()]);
    run_ok(&["simulate", "--out", b.path().to_str().unwrap()]);
    for name in ["trajectory.csv", "torque.csv", "momentum.csv", "torque.svg"] {
        assert_eq!(
            std::fs::read(a.path().join(name)).unwrap(),
            std::fs::read(b.path().join(name)).unwrap(),
            "{name} differs between identical runs"
        );
    }
}

#[test]
fn estimate_reports_case_study_rates() {
    let dir = tempfile::tempdir().unwrap();
    run_ok(&["estimate", "--out", dir.path().to_str().unwrap()]);
    let report: serde_json::Value = serde_json::from_str(&read(dir.path(), "report.json")).unwrap();

    let agonist = report["k_agonist"].as_array().unwrap();
    assert_eq!(agonist.len(), 5);
    for k in agonist {
        let k = k.as_f64().unwrap();
        assert!((0.05..=0.25).contains(&k), "k_agonist {k} out of range");
    }

    let antagonist = report["k_antagonist"].as_array().unwrap();
    assert_eq!(antagonist.len(), 5);
    assert!(antagonist.iter().all(|k| k.is_null()));

    assert!(report["summary"]["agonist"]["mean"].is_f64());
    assert!(report["summary"].get("antagonist").is_none());
    assert!(!report["flags"].as_array().unwrap().is_empty());
    assert_eq!(report["spec"]["half_period"], 1.0);
}

#[test]
fn predict_writes_the_envelope() {
    let dir = tempfile::tempdir().unwrap();
    run_ok(&["predict", "--out", dir.path().to_str().unwrap()]);

    let csv = read(dir.path(), "envelope_agonist.csv");
    let mut lines = csv.lines();
    assert_eq!(
        lines.next(),
        Some("time_min,cem_min_k,cem_avg_k,cem_max_k,measured_Nm")
    );
    assert_eq!(lines.next(), Some("0,31.46,31.46,31.46,31.46"));
    // 5 min horizon at the 0.05 min grid, measurement times merged in.
    assert!(csv.lines().count() >= 102);

    let svg = read(dir.path(), "envelope_agonist.svg");
    assert!(svg.starts_with("<svg") && svg.contains("circle"));
}

#[test]
fn predict_antagonist_fails_cleanly() {
    let dir = tempfile::tempdir().unwrap();
    let stderr = run_err(&[
        "predict",
        "--channel",
        "antagonist",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(
        stderr.lines().count(),
        1,
        "expected one error line: {stderr}"
    );
    assert!(stderr.starts_with("error: "), "stderr: {stderr}");
    assert!(stderr.contains("antagonist"), "stderr: {stderr}");
}

#[test]
fn motion_flags_reshape_the_profile() {
    let dir = tempfile::tempdir().unwrap();
    run_ok(&[
        "simulate",
        "--theta-high-deg",
        "0",
        "--out",
        dir.path().to_str().unwrap(),
    ]);

    // Degenerate motion: a static hold, so every sample is the standing
    // gravity moment.
    let torque = read(dir.path(), "torque.csv");
    let mut rows = 0;
    for line in torque.lines().skip(1) {
        let fields: Vec<f64> = line.split(',').map(|f| f.parse().unwrap()).collect();
        assert_eq!(fields[1], 0.0);
        assert_eq!(fields[2], 0.0);
        assert!((fields[4] - 13.542916896).abs() < 1e-9);
        rows += 1;
    }
    assert_eq!(rows, 2001);
}

#[test]
fn missing_measurements_file_is_reported() {
    let stderr = run_err(&[
        "estimate",
        "--measurements",
        "/no/such/series.csv",
        "--out",
        "/tmp",
    ]);
    assert!(stderr.contains("/no/such/series.csv"), "stderr: {stderr}");
}

#[test]
fn broken_config_is_reported_with_its_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        "{\n  \"subject\": {\n    \"height_m\": \"tall\"\n  }\n}\n",
    )
    .unwrap();
    let stderr = run_err(&["simulate", "--config", path.to_str().unwrap()]);
    assert!(stderr.contains("bad.json:3"), "stderr: {stderr}");
}

#[test]
fn flat_measurements_yield_zero_rates() {
    let dir = tempfile::tempdir().unwrap();
    let series = dir.path().join("flat.csv");
    std::fs::write(
        &series,
        "time_min,push_Nm,pull_Nm\n0,30,30\n1,30,30\n2,30,30\n3,30,30\n",
    )
    .unwrap();
    run_ok(&[
        "estimate",
        "--measurements",
        series.to_str().unwrap(),
        "--out",
        dir.path().to_str().unwrap(),
    ]);

    let report: serde_json::Value = serde_json::from_str(&read(dir.path(), "report.json")).unwrap();
    let agonist = report["k_agonist"].as_array().unwrap();
    assert_eq!(agonist.len(), 3);
    assert!(agonist.iter().all(|k| k.as_f64() == Some(0.0)));
    // Warm-up rows carry no decay information, so there is no summary.
    assert!(report["summary"].get("agonist").is_none());
    let flags = report["flags"].as_array().unwrap();
    assert!(flags
        .iter()
        .any(|f| f.as_str().unwrap().contains("warm-up")));
}

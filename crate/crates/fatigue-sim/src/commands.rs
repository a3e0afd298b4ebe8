//! The batch commands behind the CLI binary. Each takes a resolved
//! [`RunConfig`], writes its artifacts into the configured output
//! directory, and returns the written paths in a fixed order so runs are
//! reproducible byte for byte.

use std::fs;
use std::path::{Path, PathBuf};

use crate::chart::{envelope_csv, momentum_csv, trajectory_csv, LinePlot, Series};
use crate::config::RunConfig;
use crate::dynamics::{momentum_series, torque_profile, TorqueProfile};
use crate::error::{Error, Result};
use crate::experiment::{prediction_envelope, run_estimation, Channel, PredictionEnvelope};

/// Grid spacing of the prediction envelope, in minutes.
pub const ENVELOPE_STEP_MIN: f64 = 0.05;

fn ensure_dir(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir)
        .map_err(|e| Error::io(format!("creating output directory {}", dir.display()), e))
}

fn write_file(dir: &Path, name: &str, contents: &str) -> Result<PathBuf> {
    let path = dir.join(name);
    fs::write(&path, contents).map_err(|e| Error::io(format!("writing {}", path.display()), e))?;
    Ok(path)
}

fn trajectory_chart(profile: &TorqueProfile) -> LinePlot {
    LinePlot {
        title: "Joint trajectory over one cycle".into(),
        x_label: "time (s)".into(),
        y_label: "angle (rad), velocity (rad/s)".into(),
        series: vec![
            Series::line(
                "angle (rad)",
                profile.samples.iter().map(|s| (s.time, s.angle)).collect(),
            ),
            Series::line(
                "velocity (rad/s)",
                profile
                    .samples
                    .iter()
                    .map(|s| (s.time, s.velocity))
                    .collect(),
            ),
        ],
    }
}

fn torque_chart(profile: &TorqueProfile) -> LinePlot {
    LinePlot {
        title: "Joint torque over one cycle".into(),
        x_label: "time (s)".into(),
        y_label: "torque (N m)".into(),
        series: vec![Series::line(
            "joint torque",
            profile.samples.iter().map(|s| (s.time, s.torque)).collect(),
        )],
    }
}

fn momentum_chart(profile: &TorqueProfile) -> LinePlot {
    let series = momentum_series(profile);
    let pick = |f: fn(&crate::dynamics::MomentumSplit) -> f64| -> Vec<(f64, f64)> {
        series.iter().map(|(t, s)| (*t, f(s))).collect()
    };
    LinePlot {
        title: "Cumulative momentum split over one cycle".into(),
        x_label: "time (s)".into(),
        y_label: "momentum (N m s)".into(),
        series: vec![
            Series::line("agonist", pick(|s| s.agonist)),
            Series::line("antagonist", pick(|s| s.antagonist)),
            Series::line("net", pick(|s| s.net())),
        ],
    }
}

fn envelope_chart(env: &PredictionEnvelope) -> LinePlot {
    let curve = |c: &crate::fatigue::CapacityCurve| -> Vec<(f64, f64)> {
        c.samples.iter().map(|s| (s.time_min, s.cem)).collect()
    };
    LinePlot {
        title: format!("Capacity envelope, {} channel", env.channel),
        x_label: "time (min)".into(),
        y_label: "capacity (N m)".into(),
        series: vec![
            Series::line(
                &format!("k = {:.4} (min)", env.k_min),
                curve(&env.min_k_curve),
            ),
            Series::line(
                &format!("k = {:.4} (mean)", env.k_avg),
                curve(&env.avg_k_curve),
            ),
            Series::line(
                &format!("k = {:.4} (max)", env.k_max),
                curve(&env.max_k_curve),
            ),
            Series::markers("measured", env.measured.clone()),
        ],
    }
}

/// Sample one motion cycle and write kinematics, torque, and momentum as
/// CSV plus one SVG chart each.
pub fn cmd_simulate(config: &RunConfig) -> Result<Vec<PathBuf>> {
    let spec = config.motion_spec()?;
    let profile = torque_profile(&spec)?;
    let out = Path::new(&config.paths.out_dir);
    ensure_dir(out)?;
    Ok(vec![
        write_file(out, "trajectory.csv", &trajectory_csv(&profile))?,
        write_file(out, "trajectory.svg", &trajectory_chart(&profile).to_svg())?,
        write_file(out, "torque.csv", &profile.to_csv_string())?,
        write_file(out, "torque.svg", &torque_chart(&profile).to_svg())?,
        write_file(out, "momentum.csv", &momentum_csv(&profile))?,
        write_file(out, "momentum.svg", &momentum_chart(&profile).to_svg())?,
    ])
}

/// Estimate fatigue rates from the configured measurements and write
/// `report.json`.
pub fn cmd_estimate(config: &RunConfig) -> Result<Vec<PathBuf>> {
    let measurements = config.measurement_set()?;
    let spec = config.motion_spec()?;
    let report = run_estimation(&measurements, &spec)?;
    let out = Path::new(&config.paths.out_dir);
    ensure_dir(out)?;
    Ok(vec![write_file(out, "report.json", &report.to_json())?])
}

/// Predict one channel's capacity envelope and write it as CSV and SVG.
pub fn cmd_predict(config: &RunConfig, channel: Channel, horizon_min: f64) -> Result<Vec<PathBuf>> {
    let measurements = config.measurement_set()?;
    let spec = config.motion_spec()?;
    let report = run_estimation(&measurements, &spec)?;
    let env = prediction_envelope(&report, channel, horizon_min, ENVELOPE_STEP_MIN)?;
    let out = Path::new(&config.paths.out_dir);
    ensure_dir(out)?;
    Ok(vec![
        write_file(out, &format!("envelope_{channel}.csv"), &envelope_csv(&env))?,
        write_file(
            out,
            &format!("envelope_{channel}.svg"),
            &envelope_chart(&env).to_svg(),
        )?,
    ])
}

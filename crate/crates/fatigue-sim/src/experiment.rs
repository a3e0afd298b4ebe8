//! The bundled case study end-to-end: strength measurements in, per-group
//! fatigue rates and capacity envelopes out.
//!
//! A subject repeats a cyclic elbow motion; at set times the session pauses
//! and the maximum voluntary torque is re-measured in both directions. The
//! push column tracks the muscle group producing positive joint torque (the
//! agonist of the modeled motion), the pull column the opposing group. Each
//! row after the baseline yields one rate estimate per group, from the
//! measured capacity drop and the demand the dynamics say that group
//! accumulated by then. A group the motion never loads cannot be estimated
//! and is reported as such rather than guessed.

use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde_json::json;

use crate::anthropometry::{derive_body_params, Subject};
use crate::dynamics::{
    cumulative_from_profile, momentum_split, torque_profile, MomentumSplit, MotionSpec,
};
use crate::error::{Error, Result};
use crate::fatigue::{
    capacity_closed_form, estimate_k, fit_k_least_squares, CapacityCurve, CapacitySample,
    FatigueParams, RateEstimate,
};

/// The two opposing muscle groups of one joint, keyed by torque sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Channel {
    /// Carries positive joint torque; measured by the push column.
    Agonist,
    /// Carries negative joint torque; measured by the pull column.
    Antagonist,
}

impl Channel {
    pub const ALL: [Channel; 2] = [Channel::Agonist, Channel::Antagonist];

    /// Measurement column holding this group's strength readings.
    pub fn column(self) -> &'static str {
        match self {
            Channel::Agonist => "push",
            Channel::Antagonist => "pull",
        }
    }

    fn demand(self, split: &MomentumSplit) -> f64 {
        match self {
            Channel::Agonist => split.agonist,
            Channel::Antagonist => split.antagonist,
        }
    }

    fn measured(self, row: &Measurement) -> f64 {
        match self {
            Channel::Agonist => row.push,
            Channel::Antagonist => row.pull,
        }
    }
}

impl fmt::Display for Channel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Channel::Agonist => "agonist",
            Channel::Antagonist => "antagonist",
        })
    }
}

impl FromStr for Channel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "agonist" => Ok(Channel::Agonist),
            "antagonist" => Ok(Channel::Antagonist),
            other => Err(Error::Domain(format!(
                "unknown channel {other:?}, expected \"agonist\" or \"antagonist\""
            ))),
        }
    }
}

/// One timed pair of residual maximum-torque readings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Measurement {
    pub time_min: f64,
    pub push: f64, // N*m
    pub pull: f64, // N*m
}

/// A strength-measurement series; the row at time 0 is the fresh baseline
/// and defines each group's mvc.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementSet {
    pub rows: Vec<Measurement>,
}

impl MeasurementSet {
    pub const CSV_HEADER: &'static str = "time_min,push_Nm,pull_Nm";

    /// Parse a measurement CSV, naming `source_name` in any error.
    pub fn parse_csv(text: &str, source_name: &str) -> Result<Self> {
        let err = |line: usize, message: String| Error::Parse {
            source_name: source_name.to_string(),
            line,
            message,
        };
        let mut lines = text.lines().enumerate();
        let header = loop {
            match lines.next() {
                Some((i, l)) if l.trim().is_empty() => {
                    return Err(err(i + 1, "blank line before header".into()))
                }
                Some((i, l)) => break (i, l.trim_end_matches('\r')),
                None => return Err(err(1, "empty input, expected a header row".into())),
            }
        };
        if header.1 != Self::CSV_HEADER {
            return Err(err(
                header.0 + 1,
                format!("expected header {:?}, got {:?}", Self::CSV_HEADER, header.1),
            ));
        }
        let mut rows = Vec::new();
        for (i, raw) in lines {
            let line = raw.trim_end_matches('\r');
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 3 {
                return Err(err(
                    i + 1,
                    format!("expected 3 fields, got {}", fields.len()),
                ));
            }
            let mut values = [0.0_f64; 3];
            for (v, field) in values.iter_mut().zip(&fields) {
                *v = field
                    .trim()
                    .parse()
                    .map_err(|_| err(i + 1, format!("field {field:?} is not a number")))?;
            }
            rows.push(Measurement {
                time_min: values[0],
                push: values[1],
                pull: values[2],
            });
        }
        let set = MeasurementSet { rows };
        set.validate().map_err(|e| match e {
            Error::Domain(message) => err(1, message),
            other => other,
        })?;
        Ok(set)
    }

    pub fn read_csv(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::io(format!("reading measurements from {}", path.display()), e))?;
        Self::parse_csv(&text, &path.display().to_string())
    }

    /// The strength series shipped with the crate, from the case study this
    /// toolkit reproduces: a 1.88 m, 80 kg subject, 3 kg bar, readings at
    /// minutes 0 through 5.
    pub fn bundled() -> Self {
        Self::parse_csv(
            include_str!("../data/table2.csv"),
            "bundled measurement table",
        )
        .expect("bundled table parses")
    }

    pub fn validate(&self) -> Result<()> {
        if self.rows.is_empty() {
            return Err(Error::Domain("no measurement rows".into()));
        }
        if self.rows[0].time_min.abs() > 1e-9 {
            return Err(Error::Domain(format!(
                "first row must hold the baseline at time 0, got t={}",
                self.rows[0].time_min
            )));
        }
        for pair in self.rows.windows(2) {
            if !(pair[1].time_min > pair[0].time_min) {
                return Err(Error::Domain(format!(
                    "measurement times must be strictly increasing, got {} then {}",
                    pair[0].time_min, pair[1].time_min
                )));
            }
        }
        for row in &self.rows {
            for (name, v) in [
                ("time_min", row.time_min),
                ("push", row.push),
                ("pull", row.pull),
            ] {
                if !v.is_finite() || (name != "time_min" && v <= 0.0) {
                    return Err(Error::Domain(format!(
                        "{name}={v} at t={} is not a valid reading",
                        row.time_min
                    )));
                }
            }
        }
        Ok(())
    }

    /// Fresh maximum voluntary torque of one group, from the time-0 row.
    pub fn baseline(&self, channel: Channel) -> f64 {
        channel.measured(&self.rows[0])
    }
}

/// The motion protocol of the bundled case study: 1.88 m / 80 kg subject,
/// 3 kg bar, elbow cycling 0 to 75 degrees and back every 2 s.
pub fn default_motion_spec() -> MotionSpec {
    MotionSpec {
        body: derive_body_params(&Subject {
            height: 1.88,
            mass: 80.0,
        })
        .expect("case-study subject is valid"),
        load_mass: 3.0,
        theta_low: 0.0,
        theta_high: 75.0_f64.to_radians(),
        half_period: 1.0,
        time_step: 1e-3,
        gravity: 9.81,
    }
}

/// Estimate for one post-baseline measurement row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RowEstimate {
    pub time_min: f64,
    pub measured: f64, // N*m
    /// Demand this channel accumulated by `time_min`, in N*m*min.
    pub momentum: f64,
    /// `None` when no demand had accumulated, so no rate is attributable.
    pub estimate: Option<RateEstimate>,
}

/// Min, mean, and max over the usable per-row rates of one channel.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct ChannelSummary {
    pub min: f64,
    pub mean: f64,
    pub max: f64,
}

/// All per-row results for one muscle group.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelReport {
    pub channel: Channel,
    pub mvc: f64,
    pub rows: Vec<RowEstimate>,
}

impl ChannelReport {
    /// Per-row rates in measurement order; `None` marks non-estimable rows
    /// and 0 marks warm-up readings.
    pub fn k_values(&self) -> Vec<Option<f64>> {
        self.rows.iter().map(|r| r.estimate.map(|e| e.k)).collect()
    }

    /// Rates that carry information: estimable and not warm-up.
    pub fn usable_rates(&self) -> Vec<f64> {
        self.rows
            .iter()
            .filter_map(|r| r.estimate.filter(|e| !e.warm_up).map(|e| e.k))
            .collect()
    }

    pub fn summary(&self) -> Option<ChannelSummary> {
        let ks = self.usable_rates();
        if ks.is_empty() {
            return None;
        }
        Some(ChannelSummary {
            min: ks.iter().copied().fold(f64::INFINITY, f64::min),
            mean: ks.iter().sum::<f64>() / ks.len() as f64,
            max: ks.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        })
    }

    /// Secondary summary: one rate fitted jointly to every estimable row,
    /// warm-up readings included.
    pub fn least_squares_k(&self) -> Option<f64> {
        let rows: Vec<(f64, f64)> = self
            .rows
            .iter()
            .filter(|r| r.estimate.is_some())
            .map(|r| (r.momentum, r.measured))
            .collect();
        if rows.is_empty() {
            return None;
        }
        fit_k_least_squares(self.mvc, &rows).ok()
    }
}

/// Outcome of one estimation run over a measurement series.
#[derive(Debug, Clone, PartialEq)]
pub struct EstimationReport {
    pub spec: MotionSpec,
    pub agonist: ChannelReport,
    pub antagonist: ChannelReport,
    pub flags: Vec<String>,
}

impl EstimationReport {
    pub fn channel(&self, channel: Channel) -> &ChannelReport {
        match channel {
            Channel::Agonist => &self.agonist,
            Channel::Antagonist => &self.antagonist,
        }
    }

    /// Render the report as JSON: per-row `k_agonist`/`k_antagonist` arrays
    /// (`null` = non-estimable, 0 = warm-up), `summary` per estimable
    /// channel, `flags`, and the `spec` the rates were computed under.
    pub fn to_json(&self) -> String {
        let mut summary = serde_json::Map::new();
        for channel in Channel::ALL {
            if let Some(s) = self.channel(channel).summary() {
                summary.insert(
                    channel.to_string(),
                    serde_json::to_value(s).expect("summary serializes"),
                );
            }
        }
        let value = json!({
            "k_agonist": self.agonist.k_values(),
            "k_antagonist": self.antagonist.k_values(),
            "summary": summary,
            "flags": self.flags,
            "spec": self.spec,
        });
        let mut out = serde_json::to_string_pretty(&value).expect("report serializes");
        out.push('\n');
        out
    }
}

/// Estimate both channels' fatigue rates from a measurement series under
/// one motion spec.
pub fn run_estimation(
    measurements: &MeasurementSet,
    spec: &MotionSpec,
) -> Result<EstimationReport> {
    measurements.validate()?;
    spec.validate()?;
    let profile = torque_profile(spec)?;
    let per_cycle = momentum_split(&profile);

    let mut reports = Vec::new();
    let mut flags = Vec::new();
    for channel in Channel::ALL {
        let mvc = measurements.baseline(channel);
        let mut rows = Vec::new();
        for m in &measurements.rows[1..] {
            let split = cumulative_from_profile(spec, &profile, per_cycle, m.time_min * 60.0)?;
            // Dynamics integrate in seconds; the fatigue model runs in
            // minutes.
            let momentum = channel.demand(&split) / 60.0;
            let measured = channel.measured(m);
            let estimate = if momentum > 0.0 {
                Some(estimate_k(mvc, measured, momentum)?)
            } else {
                None
            };
            rows.push(RowEstimate {
                time_min: m.time_min,
                measured,
                momentum,
                estimate,
            });
        }

        let blank = rows.iter().filter(|r| r.estimate.is_none()).count();
        if blank == rows.len() && !rows.is_empty() {
            flags.push(format!(
                "{channel} channel ({} readings) non-estimable: the motion accumulates no {channel} momentum"
            , channel.column()));
        } else {
            for r in rows.iter().filter(|r| r.estimate.is_none()) {
                flags.push(format!(
                    "{channel} k at t={} min non-estimable: no {channel} momentum accumulated yet",
                    r.time_min
                ));
            }
        }
        for r in &rows {
            if r.estimate.is_some_and(|e| e.warm_up) {
                flags.push(format!(
                    "{channel} reading at t={} min is at or above baseline; k set to 0 (warm-up)",
                    r.time_min
                ));
            }
        }
        reports.push(ChannelReport { channel, mvc, rows });
    }

    let agonist = reports.remove(0);
    let antagonist = reports.remove(0);
    Ok(EstimationReport {
        spec: *spec,
        agonist,
        antagonist,
        flags,
    })
}

/// Capacity curves under the smallest, mean, and largest usable rate of one
/// channel, with the measured readings for overlay.
#[derive(Debug, Clone, PartialEq)]
pub struct PredictionEnvelope {
    pub channel: Channel,
    pub mvc: f64,
    pub k_min: f64,
    pub k_avg: f64,
    pub k_max: f64,
    /// Curve under `k_min`: the slowest decay, the top of the envelope.
    pub min_k_curve: CapacityCurve,
    pub avg_k_curve: CapacityCurve,
    /// Curve under `k_max`: the fastest decay, the bottom of the envelope.
    pub max_k_curve: CapacityCurve,
    /// `(time_min, torque)` readings inside the horizon, baseline included.
    pub measured: Vec<(f64, f64)>,
}

/// Predict the capacity envelope of one channel over `[0, horizon_min]`.
///
/// The sampling grid is `step_min`-spaced with every measurement time
/// inside the horizon merged in, so predicted and measured values can be
/// compared row by row. Errors if the channel has no usable rate estimate.
pub fn prediction_envelope(
    report: &EstimationReport,
    channel: Channel,
    horizon_min: f64,
    step_min: f64,
) -> Result<PredictionEnvelope> {
    if !horizon_min.is_finite() || horizon_min < 0.0 {
        return Err(Error::Domain(format!(
            "horizon must be non-negative, got {horizon_min}"
        )));
    }
    if !step_min.is_finite() || step_min <= 0.0 {
        return Err(Error::Domain(format!(
            "grid step must be positive, got {step_min}"
        )));
    }
    let chan = report.channel(channel);
    let summary = chan.summary().ok_or_else(|| Error::NonEstimable {
        channel,
        reason: "no usable rate estimate (no demand accumulated or all readings warm-up)".into(),
    })?;

    let mut grid = Vec::new();
    let n = ((horizon_min / step_min) - 1e-9).ceil().max(0.0) as usize;
    for i in 0..=n {
        grid.push(if i == n {
            horizon_min
        } else {
            i as f64 * step_min
        });
    }
    let mut measured = vec![(0.0, chan.mvc)];
    for r in &chan.rows {
        if r.time_min <= horizon_min + 1e-9 {
            measured.push((r.time_min, r.measured));
        }
    }
    grid.extend(measured.iter().map(|&(t, _)| t));
    grid.sort_by(|a, b| a.partial_cmp(b).expect("grid times are finite"));
    grid.dedup_by(|a, b| (*a - *b).abs() <= 1e-9);

    let profile = torque_profile(&report.spec)?;
    let per_cycle = momentum_split(&profile);
    let ks = [summary.min, summary.mean, summary.max];
    let mut curves: Vec<CapacityCurve> = Vec::with_capacity(3);
    for k in ks {
        let params = FatigueParams { mvc: chan.mvc, k };
        let mut samples = Vec::with_capacity(grid.len());
        for &t in &grid {
            let split = cumulative_from_profile(&report.spec, &profile, per_cycle, t * 60.0)?;
            let momentum = channel.demand(&split) / 60.0;
            samples.push(CapacitySample {
                time_min: t,
                cem: capacity_closed_form(&params, momentum)?,
            });
        }
        curves.push(CapacityCurve { samples });
    }
    let max_k_curve = curves.pop().expect("three curves");
    let avg_k_curve = curves.pop().expect("three curves");
    let min_k_curve = curves.pop().expect("three curves");
    Ok(PredictionEnvelope {
        channel,
        mvc: chan.mvc,
        k_min: summary.min,
        k_avg: summary.mean,
        k_max: summary.max,
        min_k_curve,
        avg_k_curve,
        max_k_curve,
        measured,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fatigue::FatigueParams;

    const CASE_K_AGONIST: [f64; 5] = [
        0.1489202832664685,
        0.1892619803062062,
        0.07758244752009705,
        0.1480589238793097,
        0.1059517232530134,
    ];

    fn fast_spec() -> MotionSpec {
        // Half-second half-period: the only bundled-style motion whose
        // torque goes negative, giving the antagonist real demand.
        let mut spec = default_motion_spec();
        spec.half_period = 0.5;
        spec.time_step = 5e-4;
        spec
    }

    #[test]
    fn bundled_table_parses() {
        let set = MeasurementSet::bundled();
        assert_eq!(set.rows.len(), 6);
        assert_eq!(set.rows[0].time_min, 0.0);
        assert_eq!(set.baseline(Channel::Agonist), 31.46);
        assert_eq!(set.baseline(Channel::Antagonist), 31.71);
        assert_eq!(set.rows[5].time_min, 5.0);
        assert_eq!(set.rows[5].push, 26.82);
        assert_eq!(set.rows[5].pull, 18.67);
    }

    #[test]
    fn parse_rejects_malformed_input() {
        let parse = |text: &str| MeasurementSet::parse_csv(text, "test.csv");

        let e = parse("").unwrap_err().to_string();
        assert!(e.contains("test.csv:1"), "{e}");

        let e = parse("time,push,pull\n0,1,2\n").unwrap_err().to_string();
        assert!(e.contains("header"), "{e}");

        let header = MeasurementSet::CSV_HEADER;
        let e = parse(&format!("{header}\n0,31.46,abc\n"))
            .unwrap_err()
            .to_string();
        assert!(e.contains("test.csv:2") && e.contains("abc"), "{e}");

        let e = parse(&format!("{header}\n0,31,32\n2,30,31\n1,29,30\n"))
            .unwrap_err()
            .to_string();
        assert!(e.contains("strictly increasing"), "{e}");

        let e = parse(&format!("{header}\n0.5,31,32\n"))
            .unwrap_err()
            .to_string();
        assert!(e.contains("baseline"), "{e}");

        let e = parse(&format!("{header}\n0,31\n")).unwrap_err().to_string();
        assert!(e.contains("3 fields"), "{e}");

        let e = parse(&format!("{header}\n0,-31,32\n"))
            .unwrap_err()
            .to_string();
        assert!(e.contains("not a valid reading"), "{e}");

        // Windows line endings and trailing blank lines are tolerated.
        let ok = parse(&format!("{header}\r\n0,31.46,31.71\r\n1,30,31\r\n\n"));
        assert_eq!(ok.unwrap().rows.len(), 2);
    }

    #[test]
    fn default_spec_matches_the_protocol() {
        let spec = default_motion_spec();
        spec.validate().unwrap();
        assert_eq!(spec.cycle_period(), 2.0);
        assert!((spec.total_inertia() - 0.4708775868513332).abs() < 1e-12);
        assert!((spec.static_moment() - 13.542916896).abs() < 1e-9);
        assert!((spec.theta_high - 5.0 * std::f64::consts::PI / 12.0).abs() < 1e-12);
    }

    #[test]
    fn case_study_agonist_rates() {
        let report = run_estimation(&MeasurementSet::bundled(), &default_motion_spec()).unwrap();
        let ks = report.agonist.k_values();
        assert_eq!(ks.len(), 5);
        for (got, want) in ks.iter().zip(CASE_K_AGONIST) {
            let got = got.expect("agonist rows estimable");
            assert!((got - want).abs() < 1e-9, "got {got}, want {want}");
            assert!((0.05..=0.25).contains(&got));
        }

        let s = report.agonist.summary().unwrap();
        assert!((s.min - 0.07758244752009705).abs() < 1e-9);
        assert!((s.mean - 0.13395507164501894).abs() < 1e-9);
        assert!((s.max - 0.1892619803062062).abs() < 1e-9);
        assert!(s.min <= s.mean && s.mean <= s.max);

        // The joint fit weights rows by demand squared; check against that
        // identity on the per-row rates, then loosely against magnitude.
        let ls = report.agonist.least_squares_k().unwrap();
        let (mut num, mut den) = (0.0, 0.0);
        for r in &report.agonist.rows {
            num += r.estimate.unwrap().k * r.momentum * r.momentum;
            den += r.momentum * r.momentum;
        }
        assert!((ls - num / den).abs() < 1e-12);
        assert!((0.10..=0.15).contains(&ls));

        // Demand bookkeeping: one minute of the task accumulates the same
        // agonist momentum that row 1 was estimated against.
        assert!((report.agonist.rows[0].momentum - 9.476091955925856).abs() < 1e-6);
    }

    #[test]
    fn case_study_antagonist_is_non_estimable() {
        let report = run_estimation(&MeasurementSet::bundled(), &default_motion_spec()).unwrap();
        assert_eq!(report.antagonist.k_values(), vec![None; 5]);
        assert!(report.antagonist.summary().is_none());
        assert!(report.antagonist.least_squares_k().is_none());
        for r in &report.antagonist.rows {
            assert_eq!(r.momentum, 0.0);
        }
        let antagonist_flags: Vec<&String> = report
            .flags
            .iter()
            .filter(|f| f.contains("antagonist"))
            .collect();
        assert_eq!(antagonist_flags.len(), 1);
        assert!(antagonist_flags[0].contains("non-estimable"));
    }

    #[test]
    fn flat_measurements_give_zero_rates() {
        let set = MeasurementSet {
            rows: (0..4)
                .map(|i| Measurement {
                    time_min: i as f64,
                    push: 31.46,
                    pull: 31.71,
                })
                .collect(),
        };
        let report = run_estimation(&set, &default_motion_spec()).unwrap();
        assert_eq!(report.agonist.k_values(), vec![Some(0.0); 3]);
        // All readings warm-up: nothing usable to summarize.
        assert!(report.agonist.summary().is_none());
        assert_eq!(
            report
                .flags
                .iter()
                .filter(|f| f.contains("warm-up"))
                .count(),
            3
        );
    }

    #[test]
    fn synthetic_measurements_round_trip_both_channels() {
        let spec = fast_spec();
        let profile = torque_profile(&spec).unwrap();
        let per_cycle = momentum_split(&profile);
        let (mvc_push, mvc_pull) = (31.46, 31.71);
        let (k_ag, k_ant) = (0.21, 0.09);

        let mut rows = vec![Measurement {
            time_min: 0.0,
            push: mvc_push,
            pull: mvc_pull,
        }];
        for t in 1..=4 {
            let t = t as f64;
            let split = cumulative_from_profile(&spec, &profile, per_cycle, t * 60.0).unwrap();
            let push = capacity_closed_form(
                &FatigueParams {
                    mvc: mvc_push,
                    k: k_ag,
                },
                split.agonist / 60.0,
            )
            .unwrap();
            let pull = capacity_closed_form(
                &FatigueParams {
                    mvc: mvc_pull,
                    k: k_ant,
                },
                split.antagonist / 60.0,
            )
            .unwrap();
            rows.push(Measurement {
                time_min: t,
                push,
                pull,
            });
        }

        let report = run_estimation(&MeasurementSet { rows }, &spec).unwrap();
        for k in report.agonist.k_values() {
            assert!((k.unwrap() - k_ag).abs() / k_ag < 1e-9);
        }
        for k in report.antagonist.k_values() {
            assert!((k.unwrap() - k_ant).abs() / k_ant < 1e-9);
        }
        assert!(report.flags.is_empty());
    }

    #[test]
    fn report_json_has_the_pinned_shape() {
        let report = run_estimation(&MeasurementSet::bundled(), &default_motion_spec()).unwrap();
        let text = report.to_json();
        assert!(text.ends_with('\n'));
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        let obj = value.as_object().unwrap();
        let mut keys: Vec<&str> = obj.keys().map(|k| k.as_str()).collect();
        keys.sort_unstable();
        assert_eq!(
            keys,
            vec!["flags", "k_agonist", "k_antagonist", "spec", "summary"]
        );

        assert_eq!(obj["k_agonist"].as_array().unwrap().len(), 5);
        assert!(obj["k_agonist"][0].is_number());
        assert!(obj["k_antagonist"]
            .as_array()
            .unwrap()
            .iter()
            .all(|v| v.is_null()));
        assert!(obj["summary"].get("agonist").is_some());
        assert!(obj["summary"].get("antagonist").is_none());
        let s = &obj["summary"]["agonist"];
        assert!(s["min"].is_number() && s["mean"].is_number() && s["max"].is_number());
        assert!(!obj["flags"].as_array().unwrap().is_empty());
        assert!((obj["spec"]["load_mass"].as_f64().unwrap() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn envelope_brackets_the_later_measurements() {
        let report = run_estimation(&MeasurementSet::bundled(), &default_motion_spec()).unwrap();
        let env = prediction_envelope(&report, Channel::Agonist, 5.0, 0.05).unwrap();
        assert_eq!(env.mvc, 31.46);
        assert!(env.k_min < env.k_avg && env.k_avg < env.k_max);

        // All three curves start fresh and stay pointwise ordered.
        assert!((env.min_k_curve.samples[0].cem - 31.46).abs() < 1e-12);
        assert!((env.max_k_curve.samples[0].cem - 31.46).abs() < 1e-12);
        for ((lo, mid), hi) in env
            .max_k_curve
            .samples
            .iter()
            .zip(&env.avg_k_curve.samples)
            .zip(&env.min_k_curve.samples)
        {
            assert_eq!(lo.time_min, hi.time_min);
            assert!(lo.cem <= mid.cem + 1e-12);
            assert!(mid.cem <= hi.cem + 1e-12);
        }

        assert_eq!(env.measured.len(), 6);
        let tol = 1e-9 * env.mvc;
        for &(t, measured) in env.measured.iter().filter(|&&(t, _)| t >= 3.0) {
            let at = |curve: &CapacityCurve| {
                curve
                    .samples
                    .iter()
                    .find(|s| (s.time_min - t).abs() < 1e-9)
                    .expect("measurement time on the grid")
                    .cem
            };
            assert!(at(&env.max_k_curve) - tol <= measured, "t={t}");
            assert!(measured <= at(&env.min_k_curve) + tol, "t={t}");
        }
    }

    #[test]
    fn envelope_handles_degenerate_requests() {
        let report = run_estimation(&MeasurementSet::bundled(), &default_motion_spec()).unwrap();
        assert!(matches!(
            prediction_envelope(&report, Channel::Antagonist, 5.0, 0.05),
            Err(Error::NonEstimable {
                channel: Channel::Antagonist,
                ..
            })
        ));
        assert!(prediction_envelope(&report, Channel::Agonist, -1.0, 0.05).is_err());
        assert!(prediction_envelope(&report, Channel::Agonist, 5.0, 0.0).is_err());

        // Horizon 0: a single grid point at the fresh baseline.
        let env = prediction_envelope(&report, Channel::Agonist, 0.0, 0.05).unwrap();
        assert_eq!(env.min_k_curve.samples.len(), 1);
        assert_eq!(env.min_k_curve.samples[0].time_min, 0.0);
        assert_eq!(env.min_k_curve.samples[0].cem, 31.46);
        assert_eq!(env.measured, vec![(0.0, 31.46)]);

        // One estimable row: min = mean = max, three identical curves.
        let set = MeasurementSet::bundled();
        let short = MeasurementSet {
            rows: set.rows[..2].to_vec(),
        };
        let report = run_estimation(&short, &default_motion_spec()).unwrap();
        let env = prediction_envelope(&report, Channel::Agonist, 2.0, 0.1).unwrap();
        assert_eq!(env.k_min, env.k_max);
        assert_eq!(env.min_k_curve, env.avg_k_curve);
        assert_eq!(env.avg_k_curve, env.max_k_curve);
    }

    #[test]
    fn channel_labels_round_trip() {
        for channel in Channel::ALL {
            let parsed: Channel = channel.to_string().parse().unwrap();
            assert_eq!(parsed, channel);
        }
        assert!("flexor".parse::<Channel>().is_err());
        assert_eq!(Channel::Agonist.column(), "push");
        assert_eq!(Channel::Antagonist.column(), "pull");
    }
}

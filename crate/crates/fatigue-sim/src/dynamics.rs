//! Inverse dynamics of a loaded forearm rotating about the elbow.
//!
//! The forearm is a uniform solid cylinder hinged at one end, the load a
//! point mass held in the hand. With the joint angle `theta` measured from
//! the horizontal (positive flexion raises the hand), the Lagrangian of the
//! system reduces to the joint torque
//!
//! ```text
//! torque = I_total * theta_ddot + g * cos(theta) * (m_f l_f / 2 + m_obj d_obj)
//! ```
//!
//! where `I_total = m_f (l_f^2/3 + r_f^2/4) + m_obj d_obj^2`. Measuring from
//! the horizontal puts the largest gravity moment at `theta = 0`, which is
//! where the cyclic lifting motion modeled here starts.
//!
//! Positive torque is carried by the muscle group driving flexion, negative
//! torque by its opponent. [`momentum_split`] accumulates the two signs
//! separately so each group's load can be tracked on its own.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::anthropometry::BodyParams;
use crate::error::{Error, Result};
use crate::trajectory::{make_cycle, Cycle, KinematicSample};

/// Everything needed to generate one cycle of loaded joint motion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MotionSpec {
    pub body: BodyParams,
    pub load_mass: f64,   // kg
    pub theta_low: f64,   // rad
    pub theta_high: f64,  // rad
    pub half_period: f64, // s per half-motion
    pub time_step: f64,   // s
    pub gravity: f64,     // m/s^2
}

impl MotionSpec {
    pub fn validate(&self) -> Result<()> {
        let b = &self.body;
        for (name, v) in [
            ("forearm_length", b.forearm_length),
            ("forearm_radius", b.forearm_radius),
            ("hand_length", b.hand_length),
            ("forearm_mass", b.forearm_mass),
        ] {
            if !v.is_finite() || v <= 0.0 {
                return Err(Error::Config(format!(
                    "body.{name} must be positive and finite, got {v}"
                )));
            }
        }
        if !self.load_mass.is_finite() || self.load_mass < 0.0 {
            return Err(Error::Config(format!(
                "load_mass must be non-negative, got {}",
                self.load_mass
            )));
        }
        if !self.theta_low.is_finite() || !self.theta_high.is_finite() {
            return Err(Error::Config("theta range must be finite".into()));
        }
        if !self.half_period.is_finite() || self.half_period <= 0.0 {
            return Err(Error::Config(format!(
                "half_period must be positive, got {}",
                self.half_period
            )));
        }
        if !self.gravity.is_finite() || self.gravity <= 0.0 {
            return Err(Error::Config(format!(
                "gravity must be positive, got {}",
                self.gravity
            )));
        }
        // The grid must resolve the motion and close the cycle exactly.
        if !self.time_step.is_finite() || self.time_step <= 0.0 {
            return Err(Error::Config(format!(
                "time_step must be positive, got {}",
                self.time_step
            )));
        }
        if self.time_step > self.half_period / 100.0 {
            return Err(Error::Config(format!(
                "time_step {} too coarse for half_period {}; need at most half_period/100",
                self.time_step, self.half_period
            )));
        }
        let steps = self.cycle_period() / self.time_step;
        if (steps - steps.round()).abs() > 1e-6 {
            return Err(Error::Config(format!(
                "time_step {} does not divide the cycle period {}",
                self.time_step,
                self.cycle_period()
            )));
        }
        Ok(())
    }

    pub fn cycle_period(&self) -> f64 {
        2.0 * self.half_period
    }

    pub fn cycle(&self) -> Result<Cycle> {
        make_cycle(self.theta_low, self.theta_high, self.half_period)
    }

    /// Moment of inertia about the elbow axis: forearm cylinder about its
    /// end plus the hand-held point load.
    pub fn total_inertia(&self) -> f64 {
        let b = &self.body;
        let d = b.load_distance();
        b.forearm_mass * (b.forearm_length.powi(2) / 3.0 + b.forearm_radius.powi(2) / 4.0)
            + self.load_mass * d * d
    }

    /// Gravity moment at `theta = 0`, the maximum over the motion.
    pub fn static_moment(&self) -> f64 {
        let b = &self.body;
        self.gravity
            * (b.forearm_mass * b.forearm_length / 2.0 + self.load_mass * b.load_distance())
    }
}

/// Joint torque for one kinematic state under `spec`.
pub fn joint_torque(spec: &MotionSpec, sample: &KinematicSample) -> f64 {
    spec.total_inertia() * sample.acceleration + spec.static_moment() * sample.angle.cos()
}

/// One sampled instant of the torque profile.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorqueSample {
    pub time: f64,         // s
    pub angle: f64,        // rad
    pub velocity: f64,     // rad/s
    pub acceleration: f64, // rad/s^2
    pub torque: f64,       // N*m
}

/// Torque over exactly one cycle, sampled on the uniform grid.
#[derive(Debug, Clone, PartialEq)]
pub struct TorqueProfile {
    pub samples: Vec<TorqueSample>,
    pub time_step: f64,    // s
    pub cycle_period: f64, // s
}

impl TorqueProfile {
    pub const CSV_HEADER: &'static str =
        "time_s,angle_rad,velocity_rad_s,acceleration_rad_s2,torque_Nm";

    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "{}", Self::CSV_HEADER)?;
        for s in &self.samples {
            writeln!(
                w,
                "{},{},{},{},{}",
                s.time, s.angle, s.velocity, s.acceleration, s.torque
            )?;
        }
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("CSV output is UTF-8")
    }

    pub fn min_torque(&self) -> f64 {
        self.samples
            .iter()
            .map(|s| s.torque)
            .fold(f64::INFINITY, f64::min)
    }

    pub fn max_torque(&self) -> f64 {
        self.samples
            .iter()
            .map(|s| s.torque)
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Sample one closed cycle of `spec` on its uniform grid, first and last
/// samples both at the low angle.
pub fn torque_profile(spec: &MotionSpec) -> Result<TorqueProfile> {
    spec.validate()?;
    let cycle = spec.cycle()?;
    let period = spec.cycle_period();
    let n = (period / spec.time_step).round() as usize;
    let mut samples = Vec::with_capacity(n + 1);
    for i in 0..=n {
        // Land the final sample exactly on the period so the cycle closes.
        let t = if i == n {
            period
        } else {
            i as f64 * spec.time_step
        };
        let kin = cycle.evaluate(t)?;
        samples.push(TorqueSample {
            time: t,
            angle: kin.angle,
            velocity: kin.velocity,
            acceleration: kin.acceleration,
            torque: joint_torque(spec, &kin),
        });
    }
    Ok(TorqueProfile {
        samples,
        time_step: spec.time_step,
        cycle_period: period,
    })
}

/// Time integrals of the positive and negative torque parts, both reported
/// as non-negative numbers in N*m*s.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct MomentumSplit {
    pub agonist: f64,    // integral of max(torque, 0)
    pub antagonist: f64, // integral of max(-torque, 0)
}

impl MomentumSplit {
    /// Signed integral of the torque; equals `agonist - antagonist` exactly.
    pub fn net(&self) -> f64 {
        self.agonist - self.antagonist
    }

    fn scaled(&self, factor: f64) -> Self {
        Self {
            agonist: self.agonist * factor,
            antagonist: self.antagonist * factor,
        }
    }

    fn add(&mut self, other: MomentumSplit) {
        self.agonist += other.agonist;
        self.antagonist += other.antagonist;
    }
}

/// Trapezoid contribution of one grid interval, split by sign. When the
/// linear interpolant crosses zero inside the interval the crossing time is
/// solved exactly, so the two triangle areas sum to the plain trapezoid.
fn split_interval(a: f64, b: f64, width: f64, acc: &mut MomentumSplit) {
    if a >= 0.0 && b >= 0.0 {
        acc.agonist += width * (a + b) / 2.0;
    } else if a <= 0.0 && b <= 0.0 {
        acc.antagonist += width * (-a - b) / 2.0;
    } else {
        let crossing = width * a / (a - b);
        if a > 0.0 {
            acc.agonist += crossing * a / 2.0;
            acc.antagonist += (width - crossing) * (-b) / 2.0;
        } else {
            acc.antagonist += crossing * (-a) / 2.0;
            acc.agonist += (width - crossing) * b / 2.0;
        }
    }
}

/// Integrate the positive and negative torque parts over a sampled profile.
pub fn momentum_split(profile: &TorqueProfile) -> MomentumSplit {
    let mut acc = MomentumSplit::default();
    for pair in profile.samples.windows(2) {
        split_interval(
            pair[0].torque,
            pair[1].torque,
            pair[1].time - pair[0].time,
            &mut acc,
        );
    }
    acc
}

/// Running cumulative split at every grid sample of a profile. The first
/// entry is zero at the first sample time; the last equals
/// [`momentum_split`] of the whole profile.
pub fn momentum_series(profile: &TorqueProfile) -> Vec<(f64, MomentumSplit)> {
    let Some(first) = profile.samples.first() else {
        return Vec::new();
    };
    let mut acc = MomentumSplit::default();
    let mut out = Vec::with_capacity(profile.samples.len());
    out.push((first.time, acc));
    for pair in profile.samples.windows(2) {
        split_interval(
            pair[0].torque,
            pair[1].torque,
            pair[1].time - pair[0].time,
            &mut acc,
        );
        out.push((pair[1].time, acc));
    }
    out
}

/// Momentum split accumulated over `duration` seconds of repeated cycles.
///
/// Whole cycles contribute exact multiples of the per-cycle split; a
/// trailing partial cycle is integrated on the same grid. For
/// `duration = n * cycle_period` the result is exactly `n` times the
/// per-cycle split.
pub fn cumulative_momentum(spec: &MotionSpec, duration: f64) -> Result<MomentumSplit> {
    let profile = torque_profile(spec)?;
    let per_cycle = momentum_split(&profile);
    cumulative_from_profile(spec, &profile, per_cycle, duration)
}

/// Same as [`cumulative_momentum`] but reusing an already-sampled profile.
pub(crate) fn cumulative_from_profile(
    spec: &MotionSpec,
    profile: &TorqueProfile,
    per_cycle: MomentumSplit,
    duration: f64,
) -> Result<MomentumSplit> {
    if !duration.is_finite() || duration < 0.0 {
        return Err(Error::Domain(format!(
            "duration must be non-negative, got {duration}"
        )));
    }
    let period = profile.cycle_period;
    let ratio = duration / period;
    let mut whole = ratio.floor();
    let mut remainder = duration - whole * period;
    // Snap floating-point near-misses onto whole cycles.
    if remainder > period * (1.0 - 1e-9) {
        whole += 1.0;
        remainder = 0.0;
    } else if remainder < period * 1e-12 {
        remainder = 0.0;
    }

    let mut acc = per_cycle.scaled(whole);
    if remainder > 0.0 {
        let cycle = spec.cycle()?;
        let mut tail = MomentumSplit::default();
        let mut prev = &profile.samples[0];
        for s in &profile.samples[1..] {
            if s.time <= remainder {
                split_interval(prev.torque, s.torque, s.time - prev.time, &mut tail);
                prev = s;
            } else {
                break;
            }
        }
        if remainder > prev.time {
            // Partial final interval, endpoint torque evaluated exactly.
            let kin = cycle.evaluate(remainder)?;
            let torque = joint_torque(spec, &kin);
            split_interval(prev.torque, torque, remainder - prev.time, &mut tail);
        }
        acc.add(tail);
    }
    Ok(acc)
}

//! Rest-to-rest quintic interpolation for cyclic single-joint motion.
//!
//! A motion segment follows the fifth-order interpolation ratio
//!
//! ```text
//! r(t) = 10 (t/t_f)^3 - 15 (t/t_f)^4 + 6 (t/t_f)^5
//! ```
//!
//! which rises monotonically from 0 to 1 over the segment duration `t_f`
//! with zero velocity and zero acceleration at both ends. It is the unique
//! quintic satisfying those six boundary conditions, so a joint angle
//! interpolated as `theta_initial + r(t) * (theta_end - theta_initial)`
//! starts and stops at rest. Chaining an ascending and a descending segment
//! of equal duration gives one closed cycle of a cyclic motion.

use crate::error::{Error, Result};

fn check_duration(t_f: f64) -> Result<()> {
    if !t_f.is_finite() || t_f <= 0.0 {
        return Err(Error::Domain(format!(
            "segment duration must be positive and finite, got {t_f}"
        )));
    }
    Ok(())
}

fn check_time(t: f64, t_f: f64) -> Result<f64> {
    check_duration(t_f)?;
    if !t.is_finite() || t < 0.0 || t > t_f {
        return Err(Error::Domain(format!(
            "time {t} outside segment [0, {t_f}]"
        )));
    }
    Ok(t / t_f)
}

/// Interpolation ratio `r(t)`, dimensionless in `[0, 1]`.
///
/// # Examples
///
/// ```
/// use fatigue_sim::trajectory::interpolation_ratio;
///
/// assert_eq!(interpolation_ratio(0.0, 2.0).unwrap(), 0.0);
/// assert_eq!(interpolation_ratio(2.0, 2.0).unwrap(), 1.0);
/// assert!((interpolation_ratio(0.25, 1.0).unwrap() - 0.103515625).abs() < 1e-15);
/// ```
pub fn interpolation_ratio(t: f64, t_f: f64) -> Result<f64> {
    let s = check_time(t, t_f)?;
    Ok(s * s * s * (10.0 + s * (-15.0 + 6.0 * s)))
}

/// First time derivative of the interpolation ratio, in 1/s.
///
/// Zero at both segment ends; peaks at `15 / (8 t_f)` mid-segment.
pub fn interpolation_ratio_rate(t: f64, t_f: f64) -> Result<f64> {
    let s = check_time(t, t_f)?;
    Ok(s * s * (30.0 + s * (-60.0 + 30.0 * s)) / t_f)
}

/// Second time derivative of the interpolation ratio, in 1/s^2.
///
/// Zero at both segment ends.
pub fn interpolation_ratio_accel(t: f64, t_f: f64) -> Result<f64> {
    let s = check_time(t, t_f)?;
    Ok(s * (60.0 + s * (-180.0 + 120.0 * s)) / (t_f * t_f))
}

/// Joint state at one instant of a trajectory.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KinematicSample {
    pub time: f64,         // s
    pub angle: f64,        // rad
    pub velocity: f64,     // rad/s
    pub acceleration: f64, // rad/s^2
}

/// One rest-to-rest motion from `theta_initial` to `theta_end` over
/// `duration` seconds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectorySegment {
    theta_initial: f64, // rad
    theta_end: f64,     // rad
    duration: f64,      // s
}

impl TrajectorySegment {
    /// The angles may be equal (a dwell segment) or in either order; only the
    /// duration is constrained to be positive and finite.
    pub fn new(theta_initial: f64, theta_end: f64, duration: f64) -> Result<Self> {
        check_duration(duration)?;
        if !theta_initial.is_finite() || !theta_end.is_finite() {
            return Err(Error::Domain(format!(
                "segment angles must be finite, got {theta_initial} and {theta_end}"
            )));
        }
        Ok(Self {
            theta_initial,
            theta_end,
            duration,
        })
    }

    pub fn theta_initial(&self) -> f64 {
        self.theta_initial
    }

    pub fn theta_end(&self) -> f64 {
        self.theta_end
    }

    pub fn duration(&self) -> f64 {
        self.duration
    }

    /// Angle, velocity and acceleration at time `t` in `[0, duration]`.
    pub fn evaluate(&self, t: f64) -> Result<KinematicSample> {
        let delta = self.theta_end - self.theta_initial;
        Ok(KinematicSample {
            time: t,
            angle: self.theta_initial + delta * interpolation_ratio(t, self.duration)?,
            velocity: delta * interpolation_ratio_rate(t, self.duration)?,
            acceleration: delta * interpolation_ratio_accel(t, self.duration)?,
        })
    }
}

/// One closed cycle: an ascending segment followed by its mirror descent.
///
/// Evaluated over `[0, period]`, the cycle starts and ends at the low angle
/// with zero velocity and acceleration, and is symmetric under time
/// reversal about the turnaround. There is no dwell at the turnaround.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cycle {
    pub up: TrajectorySegment,
    pub down: TrajectorySegment,
}

/// Build the cycle `theta_low -> theta_high -> theta_low` with each
/// half-motion lasting `half_period` seconds.
pub fn make_cycle(theta_low: f64, theta_high: f64, half_period: f64) -> Result<Cycle> {
    Ok(Cycle {
        up: TrajectorySegment::new(theta_low, theta_high, half_period)?,
        down: TrajectorySegment::new(theta_high, theta_low, half_period)?,
    })
}

impl Cycle {
    pub fn period(&self) -> f64 {
        2.0 * self.up.duration()
    }

    /// Kinematics at time `t` in `[0, period]`.
    pub fn evaluate(&self, t: f64) -> Result<KinematicSample> {
        let half = self.up.duration();
        let mut sample = if t <= half {
            self.up.evaluate(t)?
        } else {
            self.down.evaluate(t - half)?
        };
        sample.time = t;
        Ok(sample)
    }
}

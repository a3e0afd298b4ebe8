//! Torque capacity decay and recovery of the fatigue rate from
//! measurements.
//!
//! The current effective maximum torque `cem` of a muscle group decays in
//! proportion to both its remaining level and the external torque it is
//! asked to produce:
//!
//! ```text
//! d(cem)/dt = -k * (cem / mvc) * torque(t)
//! ```
//!
//! with `k` in 1/min and time in minutes. Because the right side is linear
//! in `cem`, the equation integrates in closed form to
//!
//! ```text
//! cem(t) = mvc * exp(-(k / mvc) * M(t))
//! ```
//!
//! where `M(t)` is the accumulated torque-time integral in N*m*min of the
//! demand placed on that group. Holding `torque = mvc` recovers the bare
//! exponential `mvc * exp(-k t)`.
//!
//! Inverting the closed form on one measurement gives the estimator
//! `k = -mvc * ln(cem / mvc) / M`, which is what [`estimate_k`] computes;
//! [`fit_k_least_squares`] fits the same log-linear relation jointly to a
//! whole measurement series. All capacities are joint-level torques in N*m;
//! the demand integral must already be clipped to the sign the muscle group
//! actually carries.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Baseline strength and fatigue rate of one muscle group.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FatigueParams {
    pub mvc: f64, // N*m, maximum voluntary torque when fresh
    pub k: f64,   // 1/min
}

impl FatigueParams {
    pub fn validate(&self) -> Result<()> {
        if !self.mvc.is_finite() || self.mvc <= 0.0 {
            return Err(Error::Config(format!(
                "mvc must be positive, got {}",
                self.mvc
            )));
        }
        if !self.k.is_finite() || self.k < 0.0 {
            return Err(Error::Config(format!(
                "fatigue rate k must be non-negative, got {}",
                self.k
            )));
        }
        Ok(())
    }
}

/// One point of a capacity-over-time curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapacitySample {
    pub time_min: f64,
    pub cem: f64, // N*m
}

/// Remaining capacity sampled over time.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CapacityCurve {
    pub samples: Vec<CapacitySample>,
}

impl CapacityCurve {
    pub const CSV_HEADER: &'static str = "time_min,cem_torque_Nm";

    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "{}", Self::CSV_HEADER)?;
        for s in &self.samples {
            writeln!(w, "{},{}", s.time_min, s.cem)?;
        }
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("CSV output is UTF-8")
    }

    pub fn final_capacity(&self) -> Option<f64> {
        self.samples.last().map(|s| s.cem)
    }
}

/// Remaining capacity after accumulating `momentum` N*m*min of demand.
pub fn capacity_closed_form(params: &FatigueParams, momentum: f64) -> Result<f64> {
    params.validate()?;
    if !momentum.is_finite() || momentum < 0.0 {
        return Err(Error::Domain(format!(
            "accumulated momentum must be non-negative, got {momentum}"
        )));
    }
    Ok(params.mvc * (-(params.k / params.mvc) * momentum).exp())
}

/// Capacity over `[0, duration_min]` under the instantaneous demand
/// `torque(t_min)` in N*m, by fixed-step fourth-order Runge-Kutta.
///
/// The step is shrunk slightly if needed so a whole number of steps lands
/// exactly on `duration_min`; the curve holds one sample per step boundary.
/// Exists to cross-check the closed form; for anything downstream prefer
/// [`capacity_closed_form`] on the accumulated momentum.
pub fn capacity_ode<F>(
    params: &FatigueParams,
    torque: F,
    duration_min: f64,
    step_min: f64,
) -> Result<CapacityCurve>
where
    F: Fn(f64) -> f64,
{
    params.validate()?;
    if !duration_min.is_finite() || duration_min < 0.0 {
        return Err(Error::Domain(format!(
            "duration must be non-negative, got {duration_min}"
        )));
    }
    if !step_min.is_finite() || step_min <= 0.0 {
        return Err(Error::Domain(format!(
            "step must be positive, got {step_min}"
        )));
    }
    let mut curve = CapacityCurve {
        samples: vec![CapacitySample {
            time_min: 0.0,
            cem: params.mvc,
        }],
    };
    if duration_min == 0.0 {
        return Ok(curve);
    }
    let n = (duration_min / step_min - 1e-9).ceil().max(1.0) as usize;
    let h = duration_min / n as f64;
    let rate = |t: f64, cem: f64| -params.k * (cem / params.mvc) * torque(t);

    let mut cem = params.mvc;
    for i in 0..n {
        let t = i as f64 * h;
        let k1 = rate(t, cem);
        let k2 = rate(t + h / 2.0, cem + h / 2.0 * k1);
        let k3 = rate(t + h / 2.0, cem + h / 2.0 * k2);
        let k4 = rate(t + h, cem + h * k3);
        cem += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        let time_min = if i + 1 == n {
            duration_min
        } else {
            (i + 1) as f64 * h
        };
        curve.samples.push(CapacitySample { time_min, cem });
    }
    Ok(curve)
}

/// Fatigue rate recovered from one capacity measurement.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RateEstimate {
    pub k: f64, // 1/min
    /// Measurement at or above baseline, so no decay is attributable yet.
    pub warm_up: bool,
}

/// Invert the closed form on a single measured capacity.
///
/// A measurement at or above `mvc` would give a non-positive rate; those
/// are flagged as warm-up readings and pinned to `k = 0`.
pub fn estimate_k(mvc: f64, measured: f64, momentum: f64) -> Result<RateEstimate> {
    if !mvc.is_finite() || mvc <= 0.0 {
        return Err(Error::Domain(format!("mvc must be positive, got {mvc}")));
    }
    if !measured.is_finite() || measured <= 0.0 {
        return Err(Error::Domain(format!(
            "measured capacity must be positive, got {measured}"
        )));
    }
    if !momentum.is_finite() || momentum <= 0.0 {
        return Err(Error::Domain(format!(
            "accumulated momentum must be positive, got {momentum}"
        )));
    }
    if measured >= mvc {
        return Ok(RateEstimate {
            k: 0.0,
            warm_up: true,
        });
    }
    Ok(RateEstimate {
        k: -mvc * (measured / mvc).ln() / momentum,
        warm_up: false,
    })
}

/// One rate fitted jointly to a whole series of `(momentum, measured)`
/// rows, as a secondary summary next to the per-row estimates.
///
/// Least squares on the log-linear form `ln(measured/mvc) = -(k/mvc) * M`
/// through the origin. Rows above baseline pull the slope toward zero and
/// the result is clamped at zero, matching the warm-up treatment of
/// [`estimate_k`].
pub fn fit_k_least_squares(mvc: f64, rows: &[(f64, f64)]) -> Result<f64> {
    if !mvc.is_finite() || mvc <= 0.0 {
        return Err(Error::Domain(format!("mvc must be positive, got {mvc}")));
    }
    if rows.is_empty() {
        return Err(Error::Domain(
            "least-squares fit needs at least one row".into(),
        ));
    }
    let mut xy = 0.0;
    let mut xx = 0.0;
    for &(momentum, measured) in rows {
        if !momentum.is_finite() || momentum <= 0.0 {
            return Err(Error::Domain(format!(
                "accumulated momentum must be positive, got {momentum}"
            )));
        }
        if !measured.is_finite() || measured <= 0.0 {
            return Err(Error::Domain(format!(
                "measured capacity must be positive, got {measured}"
            )));
        }
        xy += momentum * (measured / mvc).ln();
        xx += momentum * momentum;
    }
    Ok((-mvc * xy / xx).max(0.0))
}

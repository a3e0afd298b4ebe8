//! Run configuration for batch use: a small JSON schema mapping onto the
//! library's motion spec, with boundary-friendly units (degrees for angles,
//! meters and kilograms for the subject). Angles are converted to radians
//! on the way in; heights arrive in meters here, the CLI converts its
//! centimeter flag before it reaches this type.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::anthropometry::{derive_body_params, Subject};
use crate::dynamics::MotionSpec;
use crate::error::{Error, Result};
use crate::experiment::MeasurementSet;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SubjectConfig {
    pub height_m: f64,
    pub mass_kg: f64,
}

impl Default for SubjectConfig {
    fn default() -> Self {
        SubjectConfig {
            height_m: 1.88,
            mass_kg: 80.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct MotionConfig {
    pub theta_low_deg: f64,
    pub theta_high_deg: f64,
    pub half_period_s: f64,
    pub bar_mass_kg: f64,
    pub dt_s: f64,
    pub gravity_m_s2: f64,
}

impl Default for MotionConfig {
    fn default() -> Self {
        MotionConfig {
            theta_low_deg: 0.0,
            theta_high_deg: 75.0,
            half_period_s: 1.0,
            bar_mass_kg: 3.0,
            dt_s: 1e-3,
            gravity_m_s2: 9.81,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PathsConfig {
    /// Measurements CSV; the bundled series is used when absent.
    pub measurements: Option<String>,
    pub out_dir: String,
}

impl Default for PathsConfig {
    fn default() -> Self {
        PathsConfig {
            measurements: None,
            out_dir: "out".to_string(),
        }
    }
}

/// Everything one command run needs. Defaults reproduce the bundled case
/// study.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub subject: SubjectConfig,
    pub motion: MotionConfig,
    pub paths: PathsConfig,
}

impl RunConfig {
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("config serializes");
        out.push('\n');
        out
    }

    pub fn from_json_str(text: &str, source_name: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            source_name: source_name.to_string(),
            line: e.line(),
            message: e.to_string(),
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::io(format!("reading config from {}", path.display()), e))?;
        Self::from_json_str(&text, &path.display().to_string())
    }

    /// Convert to the internal motion spec (radians, SI) and validate it.
    pub fn motion_spec(&self) -> Result<MotionSpec> {
        let body = derive_body_params(&Subject {
            height: self.subject.height_m,
            mass: self.subject.mass_kg,
        })?;
        let spec = MotionSpec {
            body,
            load_mass: self.motion.bar_mass_kg,
            theta_low: self.motion.theta_low_deg.to_radians(),
            theta_high: self.motion.theta_high_deg.to_radians(),
            half_period: self.motion.half_period_s,
            time_step: self.motion.dt_s,
            gravity: self.motion.gravity_m_s2,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// The configured measurement series, or the bundled one.
    pub fn measurement_set(&self) -> Result<MeasurementSet> {
        match &self.paths.measurements {
            Some(path) => MeasurementSet::read_csv(Path::new(path)),
            None => Ok(MeasurementSet::bundled()),
        }
    }
}

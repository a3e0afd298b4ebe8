//! Body segment parameters scaled from subject height and mass.
//!
//! Segment lengths scale with stature and segment mass with whole-body mass,
//! following standard anthropometric proportionality tables. Only the
//! forearm and hand are modeled; that is all the elbow dynamics need.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Forearm length as a fraction of stature.
pub const FOREARM_LENGTH_RATIO: f64 = 0.146;
/// Forearm radius as a fraction of forearm length (uniform cylinder model).
pub const FOREARM_RADIUS_RATIO: f64 = 0.125;
/// Hand length as a fraction of stature.
pub const HAND_LENGTH_RATIO: f64 = 0.108;
/// Forearm mass as a fraction of whole-body mass.
pub const FOREARM_MASS_RATIO: f64 = 0.023;

/// Whole-body inputs: stature and mass.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Subject {
    pub height: f64, // m
    pub mass: f64,   // kg
}

/// Forearm and hand segment parameters derived from a [`Subject`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BodyParams {
    pub forearm_length: f64, // m
    pub forearm_radius: f64, // m
    pub hand_length: f64,    // m
    pub forearm_mass: f64,   // kg
}

impl BodyParams {
    /// Distance from the elbow axis to a hand-held load.
    ///
    /// The grip is assumed to center the load at the middle of the hand,
    /// which is the least-biased placement when the true grip point is
    /// unknown. Kept as a single method so the assumption is auditable.
    pub fn load_distance(&self) -> f64 {
        self.forearm_length + self.hand_length / 2.0
    }
}

/// Scale segment parameters from stature and body mass.
///
/// Returns a domain error when either input is non-positive or non-finite.
///
/// # Examples
///
/// ```
/// use fatigue_sim::anthropometry::{derive_body_params, Subject};
///
/// let body = derive_body_params(&Subject { height: 1.88, mass: 80.0 }).unwrap();
/// assert!((body.forearm_length - 0.27448).abs() < 1e-12);
/// assert!((body.forearm_mass - 1.84).abs() < 1e-12);
/// ```
pub fn derive_body_params(subject: &Subject) -> Result<BodyParams> {
    if !subject.height.is_finite() || subject.height <= 0.0 {
        return Err(Error::Domain(format!(
            "subject height must be positive and finite, got {}",
            subject.height
        )));
    }
    if !subject.mass.is_finite() || subject.mass <= 0.0 {
        return Err(Error::Domain(format!(
            "subject mass must be positive and finite, got {}",
            subject.mass
        )));
    }
    let forearm_length = FOREARM_LENGTH_RATIO * subject.height;
    Ok(BodyParams {
        forearm_length,
        forearm_radius: FOREARM_RADIUS_RATIO * forearm_length,
        hand_length: HAND_LENGTH_RATIO * subject.height,
        forearm_mass: FOREARM_MASS_RATIO * subject.mass,
    })
}

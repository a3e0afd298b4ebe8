//! Joint-level dynamic muscle fatigue for cyclic single-joint motion.
//!
//! The pipeline, end to end: [`anthropometry`] scales a subject's height
//! and mass into forearm segment geometry; [`trajectory`] generates the
//! rest-to-rest quintic motion cycle; [`dynamics`] turns the cycle into a
//! joint torque profile and splits its time integral by sign into agonist
//! and antagonist demand; [`fatigue`] decays each group's torque capacity
//! under that demand and inverts the decay law to estimate fatigue rates
//! from strength measurements; [`experiment`] runs the bundled case study
//! (a 1.88 m, 80 kg subject cycling a 3 kg bar at the elbow) and builds
//! min/mean/max prediction envelopes; [`chart`] renders the results as CSV
//! and standalone SVG.
//!
//! Each capability has a runnable example:
//!
//! - `body_params`: segment geometry derived from height and mass
//! - `trajectory_cycle`: the quintic cycle and its kinematic guarantees
//! - `torque_profile`: inverse dynamics over one cycle
//! - `momentum_split`: sign-split demand accumulation, slow vs fast pace
//! - `capacity_decay`: closed-form capacity decay against the ODE solver
//! - `estimate_rates`: the bundled case study, rates and flags
//! - `prediction_envelope`: measured strength against the predicted band
//! - `export_charts`: every CSV/SVG artifact written to a directory
//!
//! The `fatigue-sim` binary exposes the same pipeline as three batch
//! commands: `simulate`, `estimate`, and `predict`.

pub mod anthropometry;
pub mod chart;
pub mod commands;
pub mod config;
pub mod dynamics;
pub mod error;
pub mod experiment;
pub mod fatigue;
pub mod trajectory;

pub use anthropometry::{derive_body_params, BodyParams, Subject};
pub use dynamics::{
    cumulative_momentum, joint_torque, momentum_series, momentum_split, torque_profile,
    MomentumSplit, MotionSpec, TorqueProfile, TorqueSample,
};
pub use error::{Error, Result};
pub use experiment::{
    default_motion_spec, prediction_envelope, run_estimation, Channel, EstimationReport,
    MeasurementSet, PredictionEnvelope,
};
pub use fatigue::{
    capacity_closed_form, capacity_ode, estimate_k, fit_k_least_squares, CapacityCurve,
    FatigueParams, RateEstimate,
};
pub use trajectory::{make_cycle, Cycle, KinematicSample, TrajectorySegment};

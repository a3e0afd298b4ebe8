//! Bracket measured strength with capacity curves from the estimated rates.
//!
//! The smallest usable rate bounds the decay from above, the largest from
//! below; readings from later in the session should fall inside that band.
//!
//! Run with: cargo run --example prediction_envelope

use fatigue_sim::{
    default_motion_spec, prediction_envelope, run_estimation, Channel, MeasurementSet,
};

fn main() -> fatigue_sim::Result<()> {
    let measurements = MeasurementSet::bundled();
    let spec = default_motion_spec();
    let report = run_estimation(&measurements, &spec)?;
    let env = prediction_envelope(&report, Channel::Agonist, 5.0, 0.5)?;

    println!(
        "agonist envelope: k_min {:.6}, k_avg {:.6}, k_max {:.6} per min",
        env.k_min, env.k_avg, env.k_max
    );
    println!();
    println!(
        "{:>9} {:>12} {:>12} {:>12} {:>12} {:>8}",
        "time_min", "fast_k_Nm", "avg_k_Nm", "slow_k_Nm", "measured", "in band"
    );
    for (i, s) in env.avg_k_curve.samples.iter().enumerate() {
        let lower = env.max_k_curve.samples[i].cem;
        let upper = env.min_k_curve.samples[i].cem;
        let measured = env
            .measured
            .iter()
            .find(|(t, _)| (t - s.time_min).abs() <= 1e-9)
            .map(|&(_, v)| v);
        let (shown, verdict) = match measured {
            Some(v) => {
                let inside = lower - 1e-9 <= v && v <= upper + 1e-9;
                (format!("{v:.2}"), if inside { "yes" } else { "NO" })
            }
            None => ("-".to_string(), ""),
        };
        println!(
            "{:>9.2} {:>12.4} {:>12.4} {:>12.4} {:>12} {:>8}",
            s.time_min, lower, s.cem, upper, shown, verdict
        );
    }

    println!();
    println!("readings the rates were fitted on land inside the band by");
    println!("construction; only data past the fitting window tests it.");
    Ok(())
}

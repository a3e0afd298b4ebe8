//! Estimate fatigue rates from the bundled strength measurements.
//!
//! Run with: cargo run --example estimate_rates

use fatigue_sim::{
    default_motion_spec, fit_k_least_squares, run_estimation, Channel, MeasurementSet,
};

fn main() -> fatigue_sim::Result<()> {
    let measurements = MeasurementSet::bundled();
    let spec = default_motion_spec();
    let report = run_estimation(&measurements, &spec)?;

    for channel in Channel::ALL {
        let ch = report.channel(channel);
        println!(
            "{channel} ({} readings), baseline {} N*m",
            channel.column(),
            ch.mvc
        );
        println!(
            "  {:>9} {:>12} {:>16} {:>12}",
            "time_min", "measured_Nm", "momentum_Nm_min", "k_per_min"
        );
        for row in &ch.rows {
            let k = match row.estimate {
                Some(e) if e.warm_up => "warm-up".to_string(),
                Some(e) => format!("{:.6}", e.k),
                None => "-".to_string(),
            };
            println!(
                "  {:>9.1} {:>12.2} {:>16.6} {:>12}",
                row.time_min, row.measured, row.momentum, k
            );
        }
        match ch.summary() {
            Some(s) => println!(
                "  summary: min {:.6}  mean {:.6}  max {:.6}",
                s.min, s.mean, s.max
            ),
            None => println!("  summary: no usable rates"),
        }
        // A single pooled rate, for when one number has to stand in for the
        // whole series: least squares over all post-baseline readings.
        if let Some(k) = ch.least_squares_k() {
            println!("  pooled least-squares rate: {k:.6} per min");
        }
        println!();
    }

    if report.flags.is_empty() {
        println!("no flags");
    } else {
        println!("flags:");
        for flag in &report.flags {
            println!("  - {flag}");
        }
    }

    // The same pooled fit is available standalone, straight from
    // (momentum, measured) pairs.
    let ch = report.channel(Channel::Agonist);
    let rows: Vec<(f64, f64)> = ch.rows.iter().map(|r| (r.momentum, r.measured)).collect();
    let pooled = fit_k_least_squares(ch.mvc, &rows)?;
    println!();
    println!("standalone pooled fit on the agonist rows: {pooled:.6} per min");
    Ok(())
}

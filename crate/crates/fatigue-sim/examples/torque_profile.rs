//! Inverse dynamics over one cycle of the bundled elbow protocol.
//!
//! Run with: cargo run --example torque_profile

use fatigue_sim::{default_motion_spec, torque_profile};

fn main() -> fatigue_sim::Result<()> {
    let spec = default_motion_spec();
    let profile = torque_profile(&spec)?;

    println!(
        "one cycle: {} samples over {} s at dt = {} s",
        profile.samples.len(),
        profile.cycle_period,
        profile.time_step
    );
    println!(
        "torque range: [{:.4}, {:.4}] N*m",
        profile.min_torque(),
        profile.max_torque()
    );
    println!();

    // Every 100th row; the full grid is what the CSV export carries.
    println!(
        "{:>7} {:>11} {:>12} {:>12} {:>11}",
        "time_s", "angle_deg", "vel_rad_s", "acc_rad_s2", "torque_Nm"
    );
    for s in profile.samples.iter().step_by(100) {
        println!(
            "{:>7.2} {:>11.3} {:>12.5} {:>12.5} {:>11.4}",
            s.time,
            s.angle.to_degrees(),
            s.velocity,
            s.acceleration,
            s.torque
        );
    }

    // At this pace gravity dominates inertia, so the elbow pushes against
    // the bar the whole cycle and the profile never goes negative.
    println!();
    if profile.min_torque() > 0.0 {
        println!("profile stays positive: flexors carry the entire cycle");
    } else {
        println!("profile changes sign: extensors are loaded on part of the cycle");
    }
    Ok(())
}

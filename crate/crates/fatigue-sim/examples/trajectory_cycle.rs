//! Sample one quintic raise/lower cycle and check its rest guarantees.
//!
//! Run with: cargo run --example trajectory_cycle

use fatigue_sim::make_cycle;

fn main() -> fatigue_sim::Result<()> {
    let theta_high = 75.0_f64.to_radians();
    let cycle = make_cycle(0.0, theta_high, 1.0)?;
    let period = cycle.period();

    println!(
        "{:>7} {:>12} {:>14} {:>14}",
        "time_s", "angle_deg", "vel_rad_s", "acc_rad_s2"
    );
    for i in 0..=20 {
        let t = period * f64::from(i) / 20.0;
        let s = cycle.evaluate(t)?;
        println!(
            "{:>7.2} {:>12.4} {:>14.6} {:>14.6}",
            s.time,
            s.angle.to_degrees(),
            s.velocity,
            s.acceleration
        );
    }

    // Rest-to-rest: velocity and acceleration vanish exactly at both ends of
    // each half, so cycles chain without jerk spikes.
    for t in [0.0, period / 2.0, period] {
        let s = cycle.evaluate(t)?;
        assert_eq!(s.velocity, 0.0);
        assert_eq!(s.acceleration, 0.0);
    }
    let mid_up = cycle.evaluate(period / 4.0)?;
    println!();
    println!(
        "midpoint of the raise: angle = {:.6} deg (half of 75)",
        mid_up.angle.to_degrees()
    );
    println!(
        "peak velocity there:   {:.6} rad/s (15/8 * range / half-period)",
        mid_up.velocity
    );
    Ok(())
}

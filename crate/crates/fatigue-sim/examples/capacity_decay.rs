//! Decay torque capacity under the case-study demand, two ways.
//!
//! The closed form gives capacity directly from accumulated momentum; the
//! fixed-step integrator solves the underlying rate equation against the
//! instantaneous torque. Both see the same cyclic demand, so they must
//! agree to integration accuracy.
//!
//! Run with: cargo run --example capacity_decay

use fatigue_sim::{
    capacity_closed_form, capacity_ode, cumulative_momentum, default_motion_spec, joint_torque,
    FatigueParams,
};

fn main() -> fatigue_sim::Result<()> {
    let spec = default_motion_spec();
    let params = FatigueParams {
        mvc: 31.46,
        k: 0.13,
    };
    let duration_min = 5.0;

    // The integrator wants torque as a function of time in minutes; wrap
    // time into the cycle and clip to the agonist's share of the load.
    let cycle = spec.cycle()?;
    let period = spec.cycle_period();
    let torque = |t_min: f64| {
        let t = (t_min * 60.0).rem_euclid(period);
        let s = cycle.evaluate(t).expect("time is wrapped into the cycle");
        joint_torque(&spec, &s).max(0.0)
    };

    // 2 s cycles need sub-cycle steps: 1e-3 min is 33 steps per cycle.
    let curve = capacity_ode(&params, torque, duration_min, 1e-3)?;

    println!(
        "{:>9} {:>14} {:>14} {:>11}",
        "time_min", "ode_Nm", "closed_Nm", "rel_err"
    );
    let mut worst: f64 = 0.0;
    for s in curve.samples.iter().step_by(500) {
        let momentum = cumulative_momentum(&spec, s.time_min * 60.0)?.agonist / 60.0;
        let reference = capacity_closed_form(&params, momentum)?;
        let rel = (s.cem - reference).abs() / reference;
        worst = worst.max(rel);
        println!(
            "{:>9.2} {:>14.8} {:>14.8} {:>11.2e}",
            s.time_min, s.cem, reference, rel
        );
    }

    println!();
    println!("worst relative disagreement on the printed rows: {worst:.2e}");
    println!(
        "final capacity after {duration_min} min: {:.6} N*m of {} N*m baseline",
        curve.final_capacity().unwrap(),
        params.mvc
    );
    Ok(())
}

//! Split the torque-time integral by sign and watch the split react to pace.
//!
//! The positive part of the torque integral is demand on the agonist group,
//! the negative part (negated) demand on the antagonist. Slow cycles load
//! only the agonist; fast cycles need braking torque, so both groups work.
//!
//! Run with: cargo run --example momentum_split

use fatigue_sim::{cumulative_momentum, default_motion_spec, momentum_split, torque_profile};

fn main() -> fatigue_sim::Result<()> {
    let slow = default_motion_spec();
    let mut fast = slow;
    fast.half_period = 0.5;
    fast.time_step = 5e-4;

    println!(
        "{:<18} {:>14} {:>16} {:>12}",
        "pace", "agonist_Nms", "antagonist_Nms", "net_Nms"
    );
    for (label, spec) in [("2 s cycle (slow)", slow), ("1 s cycle (fast)", fast)] {
        let profile = torque_profile(&spec)?;
        let split = momentum_split(&profile);
        println!(
            "{:<18} {:>14.6} {:>16.6} {:>12.6}",
            label,
            split.agonist,
            split.antagonist,
            split.net()
        );
    }

    // Accumulation over a session is per-cycle momentum times cycle count,
    // plus an analytic partial tail for durations off the cycle grid.
    println!();
    println!("slow pace, accumulated agonist demand:");
    for minutes in [1.0, 2.5, 5.0] {
        let split = cumulative_momentum(&slow, minutes * 60.0)?;
        println!(
            "  {:>4.1} min -> {:>10.4} N*m*s  ({:.6} N*m*min)",
            minutes,
            split.agonist,
            split.agonist / 60.0
        );
    }
    Ok(())
}

//! Derive forearm segment geometry from subject height and mass.
//!
//! Run with: cargo run --example body_params

use fatigue_sim::{derive_body_params, MotionSpec, Subject};

fn main() -> fatigue_sim::Result<()> {
    let subjects = [
        (
            "case study",
            Subject {
                height: 1.88,
                mass: 80.0,
            },
        ),
        (
            "short/light",
            Subject {
                height: 1.60,
                mass: 55.0,
            },
        ),
        (
            "tall/heavy",
            Subject {
                height: 2.00,
                mass: 95.0,
            },
        ),
    ];

    println!(
        "{:<12} {:>9} {:>8} {:>13} {:>12} {:>11} {:>12}",
        "subject",
        "height_m",
        "mass_kg",
        "forearm_len_m",
        "hand_len_m",
        "forearm_kg",
        "load_dist_m"
    );
    for (label, subject) in subjects {
        let body = derive_body_params(&subject)?;
        println!(
            "{:<12} {:>9.2} {:>8.1} {:>13.5} {:>12.5} {:>11.3} {:>12.5}",
            label,
            subject.height,
            subject.mass,
            body.forearm_length,
            body.hand_length,
            body.forearm_mass,
            body.load_distance(),
        );
    }

    // The derived geometry feeds straight into the joint model: with a load
    // on the palm, it fixes the inertia and the gravity moment arm.
    let body = derive_body_params(&subjects[0].1)?;
    let spec = MotionSpec {
        body,
        load_mass: 3.0,
        theta_low: 0.0,
        theta_high: 75.0_f64.to_radians(),
        half_period: 1.0,
        time_step: 1e-3,
        gravity: 9.81,
    };
    println!();
    println!("case-study joint, 3 kg bar in hand:");
    println!("  total inertia  {:.6} kg*m^2", spec.total_inertia());
    println!(
        "  static moment  {:.6} N*m (gravity torque at theta = 0)",
        spec.static_moment()
    );
    Ok(())
}

//! Write every CSV and SVG artifact of the pipeline to a directory.
//!
//! Runs the three batch commands back to back on the bundled case study,
//! like the `fatigue-sim` binary would, and prints where everything went.
//!
//! Run with: cargo run --example export_charts

use fatigue_sim::commands::{cmd_estimate, cmd_predict, cmd_simulate};
use fatigue_sim::config::RunConfig;
use fatigue_sim::Channel;

fn main() -> fatigue_sim::Result<()> {
    let out_dir = std::env::temp_dir().join("fatigue-sim-charts");
    let mut config = RunConfig::default();
    config.paths.out_dir = out_dir.display().to_string();

    let mut written = Vec::new();
    written.extend(cmd_simulate(&config)?);
    written.extend(cmd_estimate(&config)?);
    written.extend(cmd_predict(&config, Channel::Agonist, 5.0)?);

    println!("wrote {} files:", written.len());
    for path in &written {
        println!("  {}", path.display());
    }
    println!();
    println!("open the SVGs in a browser; the CSVs load anywhere.");
    Ok(())
}

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use fatigue_sim::commands::{cmd_estimate, cmd_predict, cmd_simulate};
use fatigue_sim::config::RunConfig;
use fatigue_sim::experiment::Channel;

/// Joint-level muscle fatigue toolkit for cyclic single-joint motion.
#[derive(Parser)]
#[command(name = "fatigue-sim", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample one motion cycle: trajectory, torque, and momentum artifacts.
    Simulate(CommonArgs),
    /// Estimate per-group fatigue rates from strength measurements.
    Estimate(CommonArgs),
    /// Predict a muscle group's capacity envelope.
    Predict(PredictArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// JSON config file; individual flags override its fields.
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Output directory.
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,
    /// Print the resolved config as JSON and exit without running.
    #[arg(long)]
    dump_config: bool,
    /// Measurements CSV (time_min,push_Nm,pull_Nm); bundled series if omitted.
    #[arg(long, value_name = "PATH")]
    measurements: Option<PathBuf>,
    /// Subject height in centimeters.
    #[arg(long, value_name = "CM")]
    height_cm: Option<f64>,
    /// Subject mass in kilograms.
    #[arg(long, value_name = "KG")]
    mass_kg: Option<f64>,
    /// Held load in kilograms.
    #[arg(long, value_name = "KG")]
    bar_mass_kg: Option<f64>,
    /// Low end of the motion in degrees.
    #[arg(long, value_name = "DEG")]
    theta_low_deg: Option<f64>,
    /// High end of the motion in degrees.
    #[arg(long, value_name = "DEG")]
    theta_high_deg: Option<f64>,
    /// Seconds per half motion (low to high, or back).
    #[arg(long, value_name = "S")]
    half_period_s: Option<f64>,
    /// Sampling time step in seconds.
    #[arg(long, value_name = "S")]
    dt_s: Option<f64>,
    /// Gravitational acceleration in m/s^2.
    #[arg(long, value_name = "M_S2")]
    gravity_m_s2: Option<f64>,
}

#[derive(Args)]
struct PredictArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Muscle group to predict.
    #[arg(long, value_enum, default_value_t = ChannelArg::Agonist)]
    channel: ChannelArg,
    /// Prediction horizon in minutes.
    #[arg(long, value_name = "MIN", default_value_t = 5.0)]
    horizon_min: f64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ChannelArg {
    Agonist,
    Antagonist,
}

impl From<ChannelArg> for Channel {
    fn from(arg: ChannelArg) -> Channel {
        match arg {
            ChannelArg::Agonist => Channel::Agonist,
            ChannelArg::Antagonist => Channel::Antagonist,
        }
    }
}

fn resolve(common: &CommonArgs) -> fatigue_sim::Result<RunConfig> {
    let mut cfg = match &common.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default(),
    };
    if let Some(cm) = common.height_cm {
        cfg.subject.height_m = cm / 100.0;
    }
    if let Some(kg) = common.mass_kg {
        cfg.subject.mass_kg = kg;
    }
    if let Some(kg) = common.bar_mass_kg {
        cfg.motion.bar_mass_kg = kg;
    }
    if let Some(deg) = common.theta_low_deg {
        cfg.motion.theta_low_deg = deg;
    }
    if let Some(deg) = common.theta_high_deg {
        cfg.motion.theta_high_deg = deg;
    }
    if let Some(s) = common.half_period_s {
        cfg.motion.half_period_s = s;
    }
    if let Some(s) = common.dt_s {
        cfg.motion.dt_s = s;
    }
    if let Some(g) = common.gravity_m_s2 {
        cfg.motion.gravity_m_s2 = g;
    }
    if let Some(out) = &common.out {
        cfg.paths.out_dir = out.display().to_string();
    }
    if let Some(m) = &common.measurements {
        cfg.paths.measurements = Some(m.display().to_string());
    }
    Ok(cfg)
}

fn run() -> fatigue_sim::Result<()> {
    let cli = Cli::parse();
    let (common, action): (
        &CommonArgs,
        Box<dyn Fn(&RunConfig) -> fatigue_sim::Result<Vec<PathBuf>>>,
    ) = match &cli.command {
        Command::Simulate(args) => (args, Box::new(cmd_simulate)),
        Command::Estimate(args) => (args, Box::new(cmd_estimate)),
        Command::Predict(args) => {
            let channel: Channel = args.channel.into();
            let horizon = args.horizon_min;
            (
                &args.common,
                Box::new(move |cfg| cmd_predict(cfg, channel, horizon)),
            )
        }
    };
    let cfg = resolve(common)?;
    if common.dump_config {
        print!("{}", cfg.to_json());
        return Ok(());
    }
    for path in action(&cfg)? {
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

//! Plot-ready artifacts: CSV writers for the sampled series the pipeline
//! produces, and a small standalone SVG line plotter so the case study's
//! figures can be reproduced with no graphics dependency.

use std::fmt::Write;

use crate::dynamics::{momentum_series, TorqueProfile};
use crate::experiment::PredictionEnvelope;

pub const TRAJECTORY_CSV_HEADER: &str = "time_s,angle_rad,velocity_rad_s,acceleration_rad_s2";
pub const MOMENTUM_CSV_HEADER: &str = "time_s,agonist_Nms,antagonist_Nms,net_Nms";
pub const ENVELOPE_CSV_HEADER: &str = "time_min,cem_min_k,cem_avg_k,cem_max_k,measured_Nm";

/// Kinematic columns of a sampled profile, without the torque.
pub fn trajectory_csv(profile: &TorqueProfile) -> String {
    let mut out = String::new();
    writeln!(out, "{TRAJECTORY_CSV_HEADER}").unwrap();
    for s in &profile.samples {
        writeln!(
            out,
            "{},{},{},{}",
            s.time, s.angle, s.velocity, s.acceleration
        )
        .unwrap();
    }
    out
}

/// Running cumulative momentum split over the profile's grid.
pub fn momentum_csv(profile: &TorqueProfile) -> String {
    let mut out = String::new();
    writeln!(out, "{MOMENTUM_CSV_HEADER}").unwrap();
    for (t, split) in momentum_series(profile) {
        writeln!(
            out,
            "{},{},{},{}",
            t,
            split.agonist,
            split.antagonist,
            split.net()
        )
        .unwrap();
    }
    out
}

/// Envelope curves with the measured readings merged in; the measured
/// column is blank except on rows whose time carries a measurement.
pub fn envelope_csv(env: &PredictionEnvelope) -> String {
    let mut out = String::new();
    writeln!(out, "{ENVELOPE_CSV_HEADER}").unwrap();
    for ((lo, mid), hi) in env
        .max_k_curve
        .samples
        .iter()
        .zip(&env.avg_k_curve.samples)
        .zip(&env.min_k_curve.samples)
    {
        let t = hi.time_min;
        let measured = env
            .measured
            .iter()
            .find(|&&(mt, _)| (mt - t).abs() <= 1e-9)
            .map(|&(_, v)| v.to_string())
            .unwrap_or_default();
        writeln!(out, "{},{},{},{},{}", t, hi.cem, mid.cem, lo.cem, measured).unwrap();
    }
    out
}

/// How one series is drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesStyle {
    Line,
    Markers,
}

/// One named data series of a plot.
#[derive(Debug, Clone)]
pub struct Series {
    pub name: String,
    pub points: Vec<(f64, f64)>,
    pub style: SeriesStyle,
}

impl Series {
    pub fn line(name: &str, points: Vec<(f64, f64)>) -> Self {
        Series {
            name: name.to_string(),
            points,
            style: SeriesStyle::Line,
        }
    }

    pub fn markers(name: &str, points: Vec<(f64, f64)>) -> Self {
        Series {
            name: name.to_string(),
            points,
            style: SeriesStyle::Markers,
        }
    }
}

/// A minimal standalone line chart rendered to SVG 1.1: axes, ticks,
/// legend, no external assets.
#[derive(Debug, Clone)]
pub struct LinePlot {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub series: Vec<Series>,
}

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 480.0;
const MARGIN_LEFT: f64 = 64.0;
const MARGIN_RIGHT: f64 = 16.0;
const MARGIN_TOP: f64 = 40.0;
const MARGIN_BOTTOM: f64 = 48.0;
const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
];

/// Largest "nice" number (1, 2, or 5 times a power of ten) not above `x`,
/// or the nearest one when `round` is set.
fn nice_num(x: f64, round: bool) -> f64 {
    let e = x.log10().floor();
    let f = x / 10f64.powf(e);
    let nf = if round {
        match f {
            f if f < 1.5 => 1.0,
            f if f < 3.0 => 2.0,
            f if f < 7.0 => 5.0,
            _ => 10.0,
        }
    } else {
        match f {
            f if f <= 1.0 => 1.0,
            f if f <= 2.0 => 2.0,
            f if f <= 5.0 => 5.0,
            _ => 10.0,
        }
    };
    nf * 10f64.powf(e)
}

/// Loose tick placement: nice bounds covering [lo, hi], a nice step, and
/// the decimal precision that renders the ticks exactly.
fn axis_ticks(lo: f64, hi: f64) -> (f64, f64, f64, usize) {
    let (mut lo, mut hi) = (lo, hi);
    let span = hi - lo;
    if !(span > 1e-12 * lo.abs().max(hi.abs()).max(1.0)) {
        let pad = lo.abs().max(1.0) * 0.5;
        lo -= pad;
        hi += pad;
    }
    let step = nice_num(nice_num(hi - lo, false) / 5.0, true);
    let nice_lo = (lo / step).floor() * step;
    let nice_hi = (hi / step).ceil() * step;
    let prec = (-step.log10().floor()).max(0.0) as usize;
    (nice_lo, nice_hi, step, prec)
}

fn tick_values(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let n = ((hi - lo) / step).round() as usize;
    (0..=n)
        .map(|i| {
            let t = lo + i as f64 * step;
            if t == 0.0 {
                0.0 // normalize -0.0 so labels stay clean
            } else {
                t
            }
        })
        .collect()
}

fn esc(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

impl LinePlot {
    pub fn to_svg(&self) -> String {
        let points: Vec<(f64, f64)> = self
            .series
            .iter()
            .flat_map(|s| s.points.iter().copied())
            .filter(|(x, y)| x.is_finite() && y.is_finite())
            .collect();
        let (x_min, x_max) = points
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &(x, _)| {
                (lo.min(x), hi.max(x))
            });
        let (y_min, y_max) = points
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &(_, y)| {
                (lo.min(y), hi.max(y))
            });
        let (x_min, x_max) = if points.is_empty() {
            (0.0, 1.0)
        } else {
            (x_min, x_max)
        };
        let (y_min, y_max) = if points.is_empty() {
            (0.0, 1.0)
        } else {
            (y_min, y_max)
        };

        let (x_lo, x_hi, x_step, x_prec) = axis_ticks(x_min, x_max);
        let (y_lo, y_hi, y_step, y_prec) = axis_ticks(y_min, y_max);

        let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
        let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
        let px = |x: f64| MARGIN_LEFT + (x - x_lo) / (x_hi - x_lo) * plot_w;
        let py = |y: f64| HEIGHT - MARGIN_BOTTOM - (y - y_lo) / (y_hi - y_lo) * plot_h;

        let mut svg = String::new();
        writeln!(
            svg,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">"
        )
        .unwrap();
        writeln!(
            svg,
            "<rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>"
        )
        .unwrap();
        writeln!(
            svg,
            "<text x=\"{:.2}\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">{}</text>",
            WIDTH / 2.0,
            esc(&self.title)
        )
        .unwrap();

        // Grid, ticks, and tick labels.
        for t in tick_values(x_lo, x_hi, x_step) {
            let x = px(t);
            writeln!(
                svg,
                "<line x1=\"{x:.2}\" y1=\"{:.2}\" x2=\"{x:.2}\" y2=\"{:.2}\" stroke=\"#dddddd\" stroke-width=\"1\"/>",
                MARGIN_TOP,
                HEIGHT - MARGIN_BOTTOM
            )
            .unwrap();
            writeln!(
                svg,
                "<text x=\"{x:.2}\" y=\"{:.2}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">{:.*}</text>",
                HEIGHT - MARGIN_BOTTOM + 16.0,
                x_prec,
                t
            )
            .unwrap();
        }
        for t in tick_values(y_lo, y_hi, y_step) {
            let y = py(t);
            writeln!(
                svg,
                "<line x1=\"{:.2}\" y1=\"{y:.2}\" x2=\"{:.2}\" y2=\"{y:.2}\" stroke=\"#dddddd\" stroke-width=\"1\"/>",
                MARGIN_LEFT,
                WIDTH - MARGIN_RIGHT
            )
            .unwrap();
            writeln!(
                svg,
                "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">{:.*}</text>",
                MARGIN_LEFT - 6.0,
                y + 4.0,
                y_prec,
                t
            )
            .unwrap();
        }

        // Axis lines and labels.
        writeln!(
            svg,
            "<line x1=\"{MARGIN_LEFT}\" y1=\"{MARGIN_TOP}\" x2=\"{MARGIN_LEFT}\" y2=\"{:.2}\" stroke=\"black\" stroke-width=\"1\"/>",
            HEIGHT - MARGIN_BOTTOM
        )
        .unwrap();
        writeln!(
            svg,
            "<line x1=\"{MARGIN_LEFT}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"black\" stroke-width=\"1\"/>",
            HEIGHT - MARGIN_BOTTOM,
            WIDTH - MARGIN_RIGHT,
            HEIGHT - MARGIN_BOTTOM
        )
        .unwrap();
        writeln!(
            svg,
            "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">{}</text>",
            MARGIN_LEFT + plot_w / 2.0,
            HEIGHT - 10.0,
            esc(&self.x_label)
        )
        .unwrap();
        writeln!(
            svg,
            "<text x=\"16\" y=\"{:.2}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" transform=\"rotate(-90 16 {:.2})\">{}</text>",
            MARGIN_TOP + plot_h / 2.0,
            MARGIN_TOP + plot_h / 2.0,
            esc(&self.y_label)
        )
        .unwrap();

        for (i, series) in self.series.iter().enumerate() {
            let color = PALETTE[i % PALETTE.len()];
            match series.style {
                SeriesStyle::Line => {
                    let mut coords = String::new();
                    for &(x, y) in series
                        .points
                        .iter()
                        .filter(|(x, y)| x.is_finite() && y.is_finite())
                    {
                        write!(coords, "{:.2},{:.2} ", px(x), py(y)).unwrap();
                    }
                    writeln!(
                        svg,
                        "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\" points=\"{}\"/>",
                        coords.trim_end()
                    )
                    .unwrap();
                }
                SeriesStyle::Markers => {
                    for &(x, y) in series
                        .points
                        .iter()
                        .filter(|(x, y)| x.is_finite() && y.is_finite())
                    {
                        writeln!(
                            svg,
                            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"3.5\" fill=\"{color}\"/>",
                            px(x),
                            py(y)
                        )
                        .unwrap();
                    }
                }
            }
        }

        if self.series.len() > 1 {
            let lx = WIDTH - MARGIN_RIGHT - 180.0;
            for (i, series) in self.series.iter().enumerate() {
                let color = PALETTE[i % PALETTE.len()];
                let ly = MARGIN_TOP + 14.0 + 18.0 * i as f64;
                match series.style {
                    SeriesStyle::Line => writeln!(
                        svg,
                        "<line x1=\"{lx:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"{color}\" stroke-width=\"1.5\"/>",
                        ly - 4.0,
                        lx + 22.0,
                        ly - 4.0
                    )
                    .unwrap(),
                    SeriesStyle::Markers => writeln!(
                        svg,
                        "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"3.5\" fill=\"{color}\"/>",
                        lx + 11.0,
                        ly - 4.0
                    )
                    .unwrap(),
                }
                writeln!(
                    svg,
                    "<text x=\"{:.2}\" y=\"{ly:.2}\" font-family=\"sans-serif\" font-size=\"12\">{}</text>",
                    lx + 28.0,
                    esc(&series.name)
                )
                .unwrap();
            }
        }

        svg.push_str("</svg>\n");
        svg
    }
}

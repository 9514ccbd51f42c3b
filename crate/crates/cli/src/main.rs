//! `focus`: generate scenes, simulate defocus, measure and search for focus.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use focus_core::MetricKind;

#[derive(Parser, Debug)]
#[command(
    name = "focus",
    version,
    about = "Focus measurement and autofocus simulator"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

/// Options shared by every subcommand.
#[derive(Args, Debug, Clone)]
struct GlobalOpts {
    /// Object distance A, mm
    #[arg(
        long,
        global = true,
        allow_negative_numbers = true,
        default_value_t = 1000.0
    )]
    a_mm: f64,
    /// Focal length F, mm
    #[arg(
        long,
        global = true,
        allow_negative_numbers = true,
        default_value_t = 50.0
    )]
    f_mm: f64,
    /// Relative aperture parameter G
    #[arg(
        long,
        global = true,
        allow_negative_numbers = true,
        default_value_t = 2.0
    )]
    g: f64,
    /// Sensor pixel pitch, mm
    #[arg(
        long,
        global = true,
        allow_negative_numbers = true,
        default_value_t = 0.01
    )]
    pixel_pitch_mm: f64,
    /// Resolution ceiling near focus, 1/mm
    #[arg(
        long,
        global = true,
        allow_negative_numbers = true,
        default_value_t = 100.0
    )]
    d_max: f64,
    /// Noise standard deviation in gray levels [default: 0, or 2 for stability]
    #[arg(long, global = true, allow_negative_numbers = true)]
    sigma: Option<f64>,
    /// Seed for textures and noise
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Window center column [default: image center]
    #[arg(long, global = true)]
    cx: Option<usize>,
    /// Window center row [default: image center]
    #[arg(long, global = true)]
    cy: Option<usize>,
    /// Window side length
    #[arg(long, global = true, default_value_t = 31)]
    n: usize,
    /// Resolution function variant
    #[arg(long, global = true, value_enum, default_value_t = Metric::Squared)]
    metric: Metric,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Metric {
    Squared,
    Absolute,
}

impl From<Metric> for MetricKind {
    fn from(m: Metric) -> Self {
        match m {
            Metric::Squared => MetricKind::Squared,
            Metric::Absolute => MetricKind::Absolute,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a synthetic scene as PGM
    Gen {
        #[command(subcommand)]
        scene: GenScene,
    },
    /// Capture an image through the defocused lens
    Blur {
        input: PathBuf,
        /// Lens displacement, mm
        #[arg(long, allow_negative_numbers = true)]
        z: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the resolution function of one window
    Measure { input: PathBuf },
    /// Resolution function against lens displacement, as CSV
    Sweep {
        scene: PathBuf,
        #[command(flatten)]
        range: ZRange,
        /// Captures averaged per displacement
        #[arg(long, default_value_t = 1)]
        trials: usize,
        /// CSV destination [default: stdout]
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for the sharpest lens position
    Autofocus {
        scene: PathBuf,
        #[arg(long, default_value_t = -5.0, allow_negative_numbers = true)]
        z_min: f64,
        #[arg(long, default_value_t = 5.0, allow_negative_numbers = true)]
        z_max: f64,
        #[arg(long, default_value_t = 11)]
        coarse_steps: usize,
        #[arg(long, default_value_t = 12)]
        refine_iterations: usize,
        /// Captures averaged per evaluated position
        #[arg(long, default_value_t = 1)]
        trials: usize,
        /// Write the evaluation trace as CSV
        #[arg(long)]
        trace_out: Option<PathBuf>,
    },
    /// Dispersion of repeated measurements for several window sizes
    Stability {
        scene: PathBuf,
        #[arg(long, value_delimiter = ',', default_values_t = [5, 9, 17, 31])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
        /// Lens displacement, mm
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        z: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time both resolution variants and compare their focus peaks
    Compare {
        scene: PathBuf,
        #[command(flatten)]
        range: ZRange,
        /// Window sizes to time
        #[arg(long, value_delimiter = ',', default_values_t = [5, 9, 17, 31])]
        sizes: Vec<usize>,
        /// Timed evaluations per variant and size
        #[arg(long, default_value_t = 200)]
        repeats: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug, Clone, Copy)]
struct ZRange {
    #[arg(long, default_value_t = -1.0, allow_negative_numbers = true)]
    z_min: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    z_max: f64,
    /// Number of evenly spaced displacements, ends included
    #[arg(long, default_value_t = 21)]
    z_steps: usize,
}

#[derive(Subcommand, Debug)]
enum GenScene {
    /// Vertical step edge
    Step {
        #[arg(long, default_value_t = 64)]
        width: usize,
        #[arg(long, default_value_t = 64)]
        height: usize,
        /// First column of the bright side [default: width / 2]
        #[arg(long)]
        edge_x: Option<usize>,
        #[arg(long, default_value_t = 0)]
        low: u8,
        #[arg(long, default_value_t = 255)]
        high: u8,
        #[arg(long)]
        out: PathBuf,
    },
    /// Scale-invariant random texture (uses --seed)
    Texture {
        #[arg(long, default_value_t = 256)]
        width: usize,
        #[arg(long, default_value_t = 256)]
        height: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Radial chirp whose detail grows away from the center
    Zoneplate {
        #[arg(long, default_value_t = 128)]
        width: usize,
        #[arg(long, default_value_t = 128)]
        height: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("focus: error: {e}");
            ExitCode::FAILURE
        }
    }
}

//! Focus measurement toolkit.
//!
//! The crate models a defocused camera as a uniform-disc (pillbox) blur whose
//! radius grows linearly with lens displacement, measures image detail with a
//! Roberts-cross gradient-energy sum over a square window, and searches lens
//! displacement for the sharpest capture.
//!
//! Module map:
//! - [`image_core`]: 8-bit grayscale rasters, PGM I/O, synthetic scenes, noise.
//! - [`optics_sim`]: blur radius, pillbox kernel, convolution, edge response,
//!   the theoretical resolution curve and the virtual camera.
//! - [`focus_metric`]: the squared and absolute resolution functions and z-sweeps.
//! - [`autofocus`]: coarse scan plus golden-section lens search.
//! - [`stability`]: window-size dispersion study and metric comparison.

pub mod autofocus;
mod error;
pub mod focus_metric;
pub mod image_core;
pub mod optics_sim;
mod seed;
pub mod stability;

pub use autofocus::{autofocus, AutofocusResult, Phase, SearchParams, TracePoint};
pub use error::{Error, PgmError, Result};
pub use focus_metric::{resolution, sweep, FocusCurve, FocusPoint, MetricKind};
pub use image_core::{
    add_noise, load_pgm, make_step_edge, make_texture, make_zone_plate, save_pgm, Image, NoiseSpec,
    WindowSpec,
};
pub use optics_sim::{
    blur_radius, capture, convolve, edge_response, line_spread, make_pillbox_psf,
    theoretical_resolution, BlurRadius, EdgeResponse, LensState, OpticalConfig, PsfKernel,
};
pub use seed::derive_seed;
pub use stability::{
    compare_metrics, stability_study, MetricBenchReport, StabilityReport, StabilityRow,
};

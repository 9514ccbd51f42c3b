//! Window-size stability study and squared-vs-absolute comparison.

use std::fmt::Write as _;
use std::hint::black_box;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::focus_metric::{resolution, resolution_full, sweep_kinds, MetricKind};
use crate::image_core::{Image, NoiseSpec, WindowSpec};
use crate::optics_sim::{capture_window, LensState, OpticalConfig};
use crate::seed::derive_seed;

/// Repeated measurements at one nucleus size.
#[derive(Clone, Debug, PartialEq)]
pub struct StabilityRow {
    pub n: usize,
    pub measurements: Vec<u64>,
    pub mean: f64,
    /// `100 * (d - mean) / mean` per measurement; all zero when the mean is zero.
    pub deviations_pct: Vec<f64>,
    pub max_abs_deviation_pct: f64,
}

impl StabilityRow {
    pub fn from_measurements(n: usize, measurements: Vec<u64>) -> Self {
        let mean = measurements.iter().map(|&d| d as f64).sum::<f64>() / measurements.len() as f64;
        let deviations_pct: Vec<f64> = measurements
            .iter()
            .map(|&d| {
                if mean == 0.0 {
                    0.0
                } else {
                    100.0 * (d as f64 - mean) / mean
                }
            })
            .collect();
        let max_abs_deviation_pct = deviations_pct.iter().fold(0.0f64, |m, d| m.max(d.abs()));
        Self {
            n,
            measurements,
            mean,
            deviations_pct,
            max_abs_deviation_pct,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct StabilityReport {
    pub rows: Vec<StabilityRow>,
}

impl StabilityReport {
    pub const CSV_HEADER: &'static str = "n,measurement_index,d,mean,deviation_pct";

    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for row in &self.rows {
            for (i, (d, dev)) in row.measurements.iter().zip(&row.deviations_pct).enumerate() {
                writeln!(out, "{},{i},{d},{:.3},{:.6}", row.n, row.mean, dev).unwrap();
            }
        }
        out
    }

    /// True when the worst-case dispersion falls strictly with every row.
    pub fn strictly_decreasing(&self) -> bool {
        self.rows
            .windows(2)
            .all(|w| w[1].max_abs_deviation_pct < w[0].max_abs_deviation_pct)
    }
}

/// Measures the squared metric on `repeats` noisy captures for each nucleus
/// size, all centered on `center`.
///
/// Repeat `r` uses noise seed `derive_seed(noise.seed, 0, r)` for every
/// size, so each row evaluates the same `repeats` frames through a different
/// nucleus.
#[allow(clippy::too_many_arguments)]
pub fn stability_study(
    scene: &Image,
    cfg: &OpticalConfig,
    lens: LensState,
    center: (usize, usize),
    sizes: &[usize],
    noise: NoiseSpec,
    repeats: usize,
) -> Result<StabilityReport> {
    if repeats < 3 {
        return Err(Error::InvalidParameter("repeats must be >= 3".into()));
    }
    if sizes.is_empty() {
        return Err(Error::InvalidParameter("no nucleus sizes given".into()));
    }
    cfg.validate()?;
    let windows = sizes
        .iter()
        .map(|&n| {
            let w = WindowSpec::new(center.0, center.1, n)?;
            w.origin_in(scene)?;
            Ok(w)
        })
        .collect::<Result<Vec<_>>>()?;

    let mut rows = Vec::with_capacity(sizes.len());
    for window in windows {
        let mut measurements = Vec::with_capacity(repeats);
        for r in 0..repeats {
            let shot_noise = noise.with_seed(derive_seed(noise.seed, 0, r as u64));
            let shot = capture_window(scene, cfg, lens, shot_noise, window)?;
            measurements.push(resolution_full(&shot, MetricKind::Squared)?);
        }
        rows.push(StabilityRow::from_measurements(window.n, measurements));
    }
    Ok(StabilityReport { rows })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MetricTiming {
    pub kind: MetricKind,
    pub n: usize,
    pub mean_ns_per_eval: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MetricBenchReport {
    pub timings: Vec<MetricTiming>,
    /// Lens displacement maximizing each metric over the shared sweep.
    pub argmax_z: Vec<(MetricKind, f64)>,
}

impl MetricBenchReport {
    pub const CSV_HEADER: &'static str = "kind,n,mean_ns_per_eval,argmax_z_mm";

    pub fn argmax_for(&self, kind: MetricKind) -> Option<f64> {
        self.argmax_z
            .iter()
            .find(|(k, _)| *k == kind)
            .map(|&(_, z)| z)
    }

    pub fn timing(&self, kind: MetricKind, n: usize) -> Option<f64> {
        self.timings
            .iter()
            .find(|t| t.kind == kind && t.n == n)
            .map(|t| t.mean_ns_per_eval)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for t in &self.timings {
            let z = self.argmax_for(t.kind).unwrap_or(f64::NAN);
            writeln!(out, "{},{},{:.1},{:.6}", t.kind, t.n, t.mean_ns_per_eval, z).unwrap();
        }
        out
    }
}

/// Times both metric kinds at each size in `timing_sizes` and records where
/// each peaks on a noiseless sweep over `z_values`.
///
/// Timings run sequentially on the focused scene around the window center.
pub fn compare_metrics(
    scene: &Image,
    cfg: &OpticalConfig,
    window: WindowSpec,
    z_values: &[f64],
    timing_sizes: &[usize],
    repeats_for_timing: usize,
) -> Result<MetricBenchReport> {
    if repeats_for_timing < 10 {
        return Err(Error::InvalidParameter(
            "repeats_for_timing must be >= 10".into(),
        ));
    }
    let curves = sweep_kinds(
        scene,
        cfg,
        window,
        &MetricKind::ALL,
        z_values,
        NoiseSpec::none(),
        1,
    )?;
    let argmax_z = MetricKind::ALL
        .iter()
        .zip(&curves)
        .map(|(&kind, curve)| {
            (
                kind,
                curve.entries[curve.argmax().expect("nonempty sweep")].z_mm,
            )
        })
        .collect();

    let mut timings = Vec::new();
    for kind in MetricKind::ALL {
        for &n in timing_sizes {
            let w = WindowSpec::new(window.center_x, window.center_y, n)?;
            w.origin_in(scene)?;
            let start = Instant::now();
            for _ in 0..repeats_for_timing {
                black_box(resolution(black_box(scene), w, kind)?);
            }
            let elapsed = start.elapsed();
            timings.push(MetricTiming {
                kind,
                n,
                mean_ns_per_eval: elapsed.as_secs_f64() * 1e9 / repeats_for_timing as f64,
            });
        }
    }
    Ok(MetricBenchReport { timings, argmax_z })
}

//! Roberts-cross resolution functions and focus sweeps.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::image_core::{Image, NoiseSpec, WindowSpec};
use crate::optics_sim::{capture_window, LensState, OpticalConfig};
use crate::seed::derive_seed;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MetricKind {
    /// Sum of squared diagonal differences.
    Squared,
    /// Sum of absolute diagonal differences.
    Absolute,
}

impl MetricKind {
    pub const ALL: [MetricKind; 2] = [MetricKind::Squared, MetricKind::Absolute];

    pub fn as_str(self) -> &'static str {
        match self {
            MetricKind::Squared => "squared",
            MetricKind::Absolute => "absolute",
        }
    }
}

impl fmt::Display for MetricKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MetricKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "squared" | "sq" => Ok(MetricKind::Squared),
            "absolute" | "abs" => Ok(MetricKind::Absolute),
            other => Err(Error::InvalidParameter(format!(
                "unknown metric {other:?} (expected squared or absolute)"
            ))),
        }
    }
}

/// Resolution value of the N×N window.
///
/// Sums, over every 2×2 cell of the window, the two Roberts-cross diagonal
/// differences `e[i][j] - e[i+1][j+1]` and `e[i+1][j] - e[i][j+1]`, either
/// squared or in absolute value. Integer arithmetic throughout; a window of
/// any size that fits in memory cannot overflow `u64`.
pub fn resolution(image: &Image, window: WindowSpec, kind: MetricKind) -> Result<u64> {
    let (x0, y0) = window.origin_in(image)?;
    let n = window.n;
    let mut total = 0u64;
    for i in 0..n - 1 {
        let top = &image.row(y0 + i)[x0..x0 + n];
        let bottom = &image.row(y0 + i + 1)[x0..x0 + n];
        total += match kind {
            MetricKind::Squared => row_pair::<true>(top, bottom),
            MetricKind::Absolute => row_pair::<false>(top, bottom),
        };
    }
    Ok(total)
}

#[inline]
fn row_pair<const SQUARED: bool>(top: &[u8], bottom: &[u8]) -> u64 {
    let mut sum = 0u64;
    for j in 0..top.len() - 1 {
        let d1 = top[j] as i32 - bottom[j + 1] as i32;
        let d2 = bottom[j] as i32 - top[j + 1] as i32;
        sum += if SQUARED {
            (d1 * d1 + d2 * d2) as u64
        } else {
            (d1.abs() + d2.abs()) as u64
        };
    }
    sum
}

/// Metric over a whole (square) image, used on window-sized captures.
pub(crate) fn resolution_full(image: &Image, kind: MetricKind) -> Result<u64> {
    resolution(image, WindowSpec::centered(image, image.width())?, kind)
}

/// One sampled point of a focus curve.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FocusPoint {
    pub z_mm: f64,
    pub d_mean: f64,
    pub d_stddev: f64,
    pub n_trials: usize,
}

/// Measured metric as a function of lens displacement.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct FocusCurve {
    pub entries: Vec<FocusPoint>,
}

impl FocusCurve {
    pub const CSV_HEADER: &'static str = "z_mm,d_mean,d_stddev,n_trials";

    /// Index of the largest mean; ties go to the smaller `|z|`.
    pub fn argmax(&self) -> Option<usize> {
        argmax_by_z(self.entries.iter().map(|e| (e.z_mm, e.d_mean)))
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for e in &self.entries {
            writeln!(
                out,
                "{:.6},{:.3},{:.3},{}",
                e.z_mm, e.d_mean, e.d_stddev, e.n_trials
            )
            .unwrap();
        }
        out
    }
}

/// Position of the maximum value, preferring smaller `|z|` then smaller `z`
/// among ties.
pub(crate) fn argmax_by_z(points: impl Iterator<Item = (f64, f64)>) -> Option<usize> {
    let mut best: Option<(usize, f64, f64)> = None;
    for (i, (z, d)) in points.enumerate() {
        let better = match best {
            None => true,
            Some((_, bz, bd)) => d > bd || (d == bd && (z.abs(), z) < (bz.abs(), bz)),
        };
        if better {
            best = Some((i, z, d));
        }
    }
    best.map(|(i, _, _)| i)
}

/// Mean and sample standard deviation (zero for a single value).
pub(crate) fn mean_stddev(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

/// Captures the scene at every `z` and records the metric statistics.
///
/// Trial `t` at z-index `k` uses noise seed `derive_seed(noise.seed, k, t)`,
/// so each curve point is independent of evaluation order.
pub fn sweep(
    scene: &Image,
    cfg: &OpticalConfig,
    window: WindowSpec,
    kind: MetricKind,
    z_values: &[f64],
    noise: NoiseSpec,
    trials: usize,
) -> Result<FocusCurve> {
    let mut curves = sweep_kinds(scene, cfg, window, &[kind], z_values, noise, trials)?;
    Ok(curves.remove(0))
}

/// [`sweep`] evaluating several metric kinds on the same captures.
pub fn sweep_kinds(
    scene: &Image,
    cfg: &OpticalConfig,
    window: WindowSpec,
    kinds: &[MetricKind],
    z_values: &[f64],
    noise: NoiseSpec,
    trials: usize,
) -> Result<Vec<FocusCurve>> {
    check_z_values(z_values)?;
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be >= 1".into()));
    }
    cfg.validate()?;
    window.origin_in(scene)?;

    let mut curves = vec![FocusCurve::default(); kinds.len()];
    let mut values = vec![Vec::with_capacity(trials); kinds.len()];
    for (k, &z) in z_values.iter().enumerate() {
        let lens = LensState::new(z)?;
        values.iter_mut().for_each(Vec::clear);
        for t in 0..trials {
            let trial_noise = noise.with_seed(derive_seed(noise.seed, k as u64, t as u64));
            let shot = capture_window(scene, cfg, lens, trial_noise, window)?;
            for (kind, v) in kinds.iter().zip(values.iter_mut()) {
                v.push(resolution_full(&shot, *kind)? as f64);
            }
        }
        for (curve, v) in curves.iter_mut().zip(&values) {
            let (d_mean, d_stddev) = mean_stddev(v);
            curve.entries.push(FocusPoint {
                z_mm: z,
                d_mean,
                d_stddev,
                n_trials: trials,
            });
        }
    }
    Ok(curves)
}

pub(crate) fn check_z_values(z_values: &[f64]) -> Result<()> {
    if z_values.is_empty() {
        return Err(Error::InvalidParameter("z range is empty".into()));
    }
    if z_values.iter().any(|z| !z.is_finite()) {
        return Err(Error::InvalidParameter("z values must be finite".into()));
    }
    if z_values.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidParameter(
            "z values must be strictly increasing".into(),
        ));
    }
    Ok(())
}

/// `count` evenly spaced values from `lo` to `hi` inclusive. Symmetric
/// ranges produce exactly mirrored values.
pub fn linspace(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let last = (count - 1) as f64;
            (0..count)
                .map(|i| {
                    let i = i as f64;
                    ((last - i) * lo + i * hi) / last
                })
                .collect()
        }
    }
}

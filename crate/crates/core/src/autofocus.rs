//! Closed-loop lens search against the virtual camera.
//!
//! A coarse scan locates the sharpest of `coarse_steps` evenly spaced lens
//! positions; golden-section search then refines inside the bracket formed
//! by its two neighbors. Every probe is the mean metric of
//! `trials_per_eval` noisy captures.

use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::focus_metric::{argmax_by_z, linspace, resolution_full, MetricKind};
use crate::image_core::{Image, NoiseSpec, WindowSpec};
use crate::optics_sim::{capture_window, LensState, OpticalConfig};
use crate::seed::derive_seed;

const INV_PHI: f64 = 0.618_033_988_749_894_8;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SearchParams {
    pub z_min: f64,
    pub z_max: f64,
    pub coarse_steps: usize,
    pub refine_iterations: usize,
    pub trials_per_eval: usize,
    pub metric: MetricKind,
}

impl Default for SearchParams {
    fn default() -> Self {
        Self {
            z_min: -5.0,
            z_max: 5.0,
            coarse_steps: 11,
            refine_iterations: 12,
            trials_per_eval: 1,
            metric: MetricKind::Squared,
        }
    }
}

impl SearchParams {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidParameter(m.to_string()));
        if !self.z_min.is_finite() || !self.z_max.is_finite() || self.z_min >= self.z_max {
            return bad("search interval needs finite z_min < z_max");
        }
        if self.coarse_steps < 5 {
            return bad("coarse_steps must be >= 5");
        }
        if self.trials_per_eval == 0 {
            return bad("trials_per_eval must be >= 1");
        }
        Ok(())
    }

    /// Captures consumed by one search that does not stop at the boundary.
    pub fn max_evaluations(&self) -> usize {
        let refine = if self.refine_iterations > 0 {
            self.refine_iterations + 2
        } else {
            0
        };
        self.trials_per_eval * (self.coarse_steps + refine)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Phase {
    Coarse,
    Refine,
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Phase::Coarse => "coarse",
            Phase::Refine => "refine",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TracePoint {
    pub z_mm: f64,
    pub d_mean: f64,
    pub phase: Phase,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AutofocusResult {
    pub z_star: f64,
    pub d_star: f64,
    /// Captures consumed: `trials_per_eval` per trace entry.
    pub evaluations: usize,
    pub trace: Vec<TracePoint>,
    /// Golden-section bracket after initialization and after each iteration.
    pub brackets: Vec<(f64, f64)>,
    /// The coarse winner sat on the interval boundary; the true focus may
    /// lie outside `[z_min, z_max]` and no refinement was attempted.
    pub at_boundary: bool,
}

impl AutofocusResult {
    pub const TRACE_CSV_HEADER: &'static str = "step,z_mm,d_mean,phase";

    pub fn status(&self) -> &'static str {
        if self.at_boundary {
            "boundary"
        } else {
            "ok"
        }
    }

    /// Width of the last refinement bracket, if refinement ran.
    pub fn final_bracket_width(&self) -> Option<f64> {
        self.brackets.last().map(|(a, b)| b - a)
    }

    pub fn trace_csv(&self) -> String {
        let mut out = String::from(Self::TRACE_CSV_HEADER);
        out.push('\n');
        for (step, p) in self.trace.iter().enumerate() {
            writeln!(out, "{step},{:.6},{:.3},{}", p.z_mm, p.d_mean, p.phase).unwrap();
        }
        out
    }
}

struct Probe<'a> {
    scene: &'a Image,
    cfg: &'a OpticalConfig,
    window: WindowSpec,
    noise: NoiseSpec,
    params: &'a SearchParams,
    trace: Vec<TracePoint>,
}

impl Probe<'_> {
    fn eval(&mut self, z: f64, phase: Phase) -> Result<f64> {
        let step = self.trace.len() as u64;
        let lens = LensState::new(z)?;
        let mut sum = 0.0;
        for t in 0..self.params.trials_per_eval {
            let noise = self
                .noise
                .with_seed(derive_seed(self.noise.seed, step, t as u64));
            let shot = capture_window(self.scene, self.cfg, lens, noise, self.window)?;
            sum += resolution_full(&shot, self.params.metric)? as f64;
        }
        let d_mean = sum / self.params.trials_per_eval as f64;
        self.trace.push(TracePoint {
            z_mm: z,
            d_mean,
            phase,
        });
        Ok(d_mean)
    }
}

/// Searches `[z_min, z_max]` for the lens displacement maximizing the metric.
pub fn autofocus(
    scene: &Image,
    cfg: &OpticalConfig,
    window: WindowSpec,
    noise: NoiseSpec,
    params: &SearchParams,
) -> Result<AutofocusResult> {
    params.validate()?;
    cfg.validate()?;
    window.origin_in(scene)?;

    let mut probe = Probe {
        scene,
        cfg,
        window,
        noise,
        params,
        trace: Vec::new(),
    };

    let coarse = linspace(params.z_min, params.z_max, params.coarse_steps);
    for &z in &coarse {
        probe.eval(z, Phase::Coarse)?;
    }
    let best = argmax_by_z(probe.trace.iter().map(|p| (p.z_mm, p.d_mean))).expect("nonempty scan");
    let at_boundary = best == 0 || best == coarse.len() - 1;

    let mut brackets = Vec::new();
    if !at_boundary && params.refine_iterations > 0 {
        let (mut a, mut b) = (coarse[best - 1], coarse[best + 1]);
        let mut c = b - INV_PHI * (b - a);
        let mut d = a + INV_PHI * (b - a);
        let mut fc = probe.eval(c, Phase::Refine)?;
        let mut fd = probe.eval(d, Phase::Refine)?;
        brackets.push((a, b));
        for _ in 0..params.refine_iterations {
            // on ties keep the half nearer the unshifted lens
            if fc > fd || (fc == fd && c.abs() <= d.abs()) {
                b = d;
                d = c;
                fd = fc;
                c = b - INV_PHI * (b - a);
                fc = probe.eval(c, Phase::Refine)?;
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + INV_PHI * (b - a);
                fd = probe.eval(d, Phase::Refine)?;
            }
            brackets.push((a, b));
        }
    }

    let trace = probe.trace;
    let star = if at_boundary {
        best
    } else {
        argmax_by_z(trace.iter().map(|p| (p.z_mm, p.d_mean))).expect("nonempty trace")
    };
    Ok(AutofocusResult {
        z_star: trace[star].z_mm,
        d_star: trace[star].d_mean,
        evaluations: trace.len() * params.trials_per_eval,
        trace,
        brackets,
        at_boundary,
    })
}

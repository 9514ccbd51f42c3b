//! Thin-lens defocus model and the virtual camera.
//!
//! A lens displaced by `z` from perfect focus spreads a point into a uniform
//! disc of radius `R = (A - F) / (2 A G) * |z|`. Captures are produced by
//! convolving the scene with a rasterized disc, rounding back to 8 bits and
//! optionally adding sensor noise.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::image_core::{add_noise, Image, NoiseSpec, WindowSpec};

/// Subsamples per pixel side used when rasterizing the blur disc.
pub const DEFAULT_SUPERSAMPLE: u32 = 8;

/// Physical camera parameters.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OpticalConfig {
    /// Distance to the object, mm.
    pub a_mm: f64,
    /// Focal length, mm.
    pub f_mm: f64,
    /// Relative-aperture ("light intensity") parameter, dimensionless.
    pub g: f64,
    /// Sensor pixel size, mm per pixel.
    pub pixel_pitch_mm: f64,
    /// Resolution ceiling near focus, per mm.
    pub d_max: f64,
}

impl Default for OpticalConfig {
    /// 50 mm lens, object at 1 m, G = 2, 10 µm pixels: 23.75 px of blur
    /// radius per mm of displacement.
    fn default() -> Self {
        Self {
            a_mm: 1000.0,
            f_mm: 50.0,
            g: 2.0,
            pixel_pitch_mm: 0.01,
            d_max: 100.0,
        }
    }
}

impl OpticalConfig {
    pub fn new(a_mm: f64, f_mm: f64, g: f64, pixel_pitch_mm: f64, d_max: f64) -> Result<Self> {
        let cfg = Self {
            a_mm,
            f_mm,
            g,
            pixel_pitch_mm,
            d_max,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidOptics(msg));
        let all = [
            self.a_mm,
            self.f_mm,
            self.g,
            self.pixel_pitch_mm,
            self.d_max,
        ];
        if all.iter().any(|v| !v.is_finite()) {
            return bad(format!("non-finite parameter in {self:?}"));
        }
        if self.f_mm <= 0.0 {
            return bad(format!("focal length must be > 0, got {}", self.f_mm));
        }
        if self.a_mm <= self.f_mm {
            return bad(format!(
                "object distance {} must exceed focal length {}",
                self.a_mm, self.f_mm
            ));
        }
        if self.g <= 0.0 {
            return bad(format!("g must be > 0, got {}", self.g));
        }
        if self.pixel_pitch_mm <= 0.0 {
            return bad(format!(
                "pixel pitch must be > 0, got {}",
                self.pixel_pitch_mm
            ));
        }
        if self.d_max <= 0.0 {
            return bad(format!("d_max must be > 0, got {}", self.d_max));
        }
        Ok(())
    }

    /// Blur radius in mm per mm of lens displacement.
    pub fn radius_per_mm(&self) -> f64 {
        (self.a_mm - self.f_mm) / (2.0 * self.a_mm * self.g)
    }

    /// Displacement that produces a blur radius of `radius_px` pixels.
    pub fn z_for_radius_px(&self, radius_px: f64) -> f64 {
        radius_px * self.pixel_pitch_mm / self.radius_per_mm()
    }
}

/// Signed lens displacement from the focused position, mm.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct LensState {
    pub z_mm: f64,
}

impl LensState {
    pub fn new(z_mm: f64) -> Result<Self> {
        if !z_mm.is_finite() {
            return Err(Error::InvalidLens(z_mm));
        }
        Ok(Self { z_mm })
    }

    pub fn focused() -> Self {
        Self { z_mm: 0.0 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlurRadius {
    pub mm: f64,
    pub px: f64,
}

/// Disc radius for a lens displacement; even in `z`.
pub fn blur_radius(cfg: &OpticalConfig, lens: LensState) -> BlurRadius {
    let mm = cfg.radius_per_mm() * lens.z_mm.abs();
    BlurRadius {
        mm,
        px: mm / cfg.pixel_pitch_mm,
    }
}

/// Rasterized uniform-disc point spread function.
#[derive(Clone, Debug, PartialEq)]
pub struct PsfKernel {
    size: usize,
    weights: Vec<f64>,
    radius_px: f64,
}

impl PsfKernel {
    pub fn identity() -> Self {
        Self {
            size: 1,
            weights: vec![1.0],
            radius_px: 0.0,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Kernel half-width: the center sits at `(half, half)`.
    pub fn half(&self) -> usize {
        self.size / 2
    }

    pub fn radius_px(&self) -> f64 {
        self.radius_px
    }

    /// Row-major weights, `size * size` entries.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    #[inline]
    pub fn weight(&self, row: usize, col: usize) -> f64 {
        self.weights[row * self.size + col]
    }
}

/// Rasterizes a disc of radius `radius_px` by area coverage.
///
/// Each pixel is split into `supersample²` cells and weighted by how many
/// cell centers fall strictly inside the disc; the kernel is then normalized
/// to unit sum. Radii below half a pixel give the 1×1 identity kernel.
///
/// Cell centers are placed on an integer lattice (units of `1 / (2 ss)` px),
/// so the coverage counts, and therefore the weights, are exactly invariant
/// under 90° rotation.
pub fn make_pillbox_psf(radius_px: f64, supersample: u32) -> Result<PsfKernel> {
    if !radius_px.is_finite() || radius_px < 0.0 {
        return Err(Error::NegativeRadius(radius_px));
    }
    if supersample == 0 {
        return Err(Error::InvalidSupersample);
    }
    if radius_px < 0.5 {
        return Ok(PsfKernel::identity());
    }
    let half = radius_px.ceil() as usize;
    let size = 2 * half + 1;
    let ss = supersample as i64;
    let limit = (2.0 * ss as f64 * radius_px).powi(2);
    // offsets of cell centers within a pixel, in lattice units
    let offsets: Vec<i64> = (0..ss).map(|k| 2 * k + 1 - ss).collect();

    let mut counts = vec![0u64; size * size];
    for row in 0..size {
        let dy = row as i64 - half as i64;
        for col in 0..size {
            let dx = col as i64 - half as i64;
            let mut n = 0;
            for &oy in &offsets {
                let y = 2 * ss * dy + oy;
                for &ox in &offsets {
                    let x = 2 * ss * dx + ox;
                    if ((x * x + y * y) as f64) < limit {
                        n += 1;
                    }
                }
            }
            counts[row * size + col] = n;
        }
    }
    let total: u64 = counts.iter().sum();
    let weights = counts.iter().map(|&c| c as f64 / total as f64).collect();
    Ok(PsfKernel {
        size,
        weights,
        radius_px,
    })
}

/// Maximal horizontal stretch of equal nonzero weights within one kernel row.
#[derive(Clone, Copy, Debug)]
struct Run {
    row: usize,
    first: usize,
    last: usize,
    weight: f64,
}

fn kernel_runs(psf: &PsfKernel) -> Vec<Run> {
    let mut runs = Vec::new();
    for row in 0..psf.size {
        let mut col = 0;
        while col < psf.size {
            let w = psf.weight(row, col);
            let start = col;
            while col + 1 < psf.size && psf.weight(row, col + 1) == w {
                col += 1;
            }
            if w != 0.0 {
                runs.push(Run {
                    row,
                    first: start,
                    last: col,
                    weight: w,
                });
            }
            col += 1;
        }
    }
    runs
}

/// Convolves `scene` with `psf` using replicate (clamp-to-edge) borders.
///
/// Sums are accumulated in `f64` and rounded to the nearest integer.
pub fn convolve(scene: &Image, psf: &PsfKernel) -> Result<Image> {
    let samples = convolve_region(scene, psf, 0, 0, scene.width(), scene.height())?;
    Image::new(scene.width(), scene.height(), samples)
}

/// Convolution evaluated only on the `w`×`h` block at `(x0, y0)`; equals
/// the corresponding crop of [`convolve`].
///
/// Every kernel row is decomposed into runs of equal weight, and each run is
/// summed in O(1) from integer prefix sums of the replicate-padded scene row.
pub(crate) fn convolve_region(
    scene: &Image,
    psf: &PsfKernel,
    x0: usize,
    y0: usize,
    w: usize,
    h: usize,
) -> Result<Vec<u8>> {
    let (width, height) = (scene.width(), scene.height());
    if psf.size > width || psf.size > height {
        return Err(Error::KernelTooLarge {
            size: psf.size,
            width,
            height,
        });
    }
    debug_assert!(x0 + w <= width && y0 + h <= height);
    if psf.size == 1 {
        let scale = psf.weights[0];
        let mut out = Vec::with_capacity(w * h);
        for y in y0..y0 + h {
            out.extend(
                scene.row(y)[x0..x0 + w]
                    .iter()
                    .map(|&v| (v as f64 * scale).round().clamp(0.0, 255.0) as u8),
            );
        }
        return Ok(out);
    }

    let r = psf.half();
    let runs = kernel_runs(psf);
    let clamp_row = |y: isize| y.clamp(0, height as isize - 1) as usize;

    // prefix sums of the padded rows that can be touched
    let row_lo = clamp_row(y0 as isize - r as isize);
    let row_hi = clamp_row((y0 + h - 1 + r) as isize);
    let padded_len = width + 2 * r;
    let prefix: Vec<Vec<u32>> = (row_lo..=row_hi)
        .map(|y| {
            let row = scene.row(y);
            let mut p = Vec::with_capacity(padded_len + 1);
            p.push(0u32);
            let mut acc = 0u32;
            for i in 0..padded_len {
                let src = (i as isize - r as isize).clamp(0, width as isize - 1) as usize;
                acc += row[src] as u32;
                p.push(acc);
            }
            p
        })
        .collect();

    let mut out = Vec::with_capacity(w * h);
    let mut acc = vec![0f64; w];
    for y in y0..y0 + h {
        acc.iter_mut().for_each(|a| *a = 0.0);
        for run in &runs {
            // out(x, y) += w * in(x - (kx - r), y - (ky - r))
            let src_y = clamp_row(y as isize + r as isize - run.row as isize);
            let p = &prefix[src_y - row_lo];
            // padded index of source column for kernel column kx: x - kx + 2r
            let hi = x0 + 2 * r - run.first + 1;
            let lo = x0 + 2 * r - run.last;
            for (i, a) in acc.iter_mut().enumerate() {
                *a += run.weight * (p[hi + i] - p[lo + i]) as f64;
            }
        }
        out.extend(acc.iter().map(|v| v.round().clamp(0.0, 255.0) as u8));
    }
    Ok(out)
}

/// Line-spread function: the kernel integrated along y, one value per column.
pub fn line_spread(psf: &PsfKernel) -> Vec<f64> {
    (0..psf.size)
        .map(|col| (0..psf.size).map(|row| psf.weight(row, col)).sum())
        .collect()
}

/// Blurred profile of an ideal unit step, sampled at integer offsets.
#[derive(Clone, Debug, PartialEq)]
pub struct EdgeResponse {
    /// Pixel offsets relative to the first bright column of the step.
    pub positions: Vec<i64>,
    /// Normalized luminance in `[0, 1]`.
    pub values: Vec<f64>,
}

impl EdgeResponse {
    /// Backward differences `U(x) - U(x - 1)`, keyed by `x`.
    pub fn derivative(&self) -> Vec<(i64, f64)> {
        self.positions
            .iter()
            .skip(1)
            .zip(self.values.windows(2))
            .map(|(&x, v)| (x, v[1] - v[0]))
            .collect()
    }

    /// Largest backward difference and its position; ties go to the
    /// position closest to the edge.
    pub fn peak_derivative(&self) -> Option<(i64, f64)> {
        self.derivative()
            .into_iter()
            .fold(None, |best, (x, d)| match best {
                Some((bx, bd)) if bd > d || (bd == d && bx.abs() <= x.abs()) => Some((bx, bd)),
                _ => Some((x, d)),
            })
    }
}

/// Step response of the defocused lens over `-half_span_px..=half_span_px`.
pub fn edge_response(
    cfg: &OpticalConfig,
    lens: LensState,
    half_span_px: usize,
) -> Result<EdgeResponse> {
    let radius = blur_radius(cfg, lens).px;
    if (half_span_px as f64) < 3.0 * radius || half_span_px == 0 {
        return Err(Error::SpanTooSmall {
            half_span: half_span_px,
            radius_px: radius,
        });
    }
    let psf = make_pillbox_psf(radius, DEFAULT_SUPERSAMPLE)?;
    let lsf = line_spread(&psf);
    let total: f64 = lsf.iter().sum();
    let r = psf.half() as i64;
    let span = half_span_px as i64;

    let mut positions = Vec::with_capacity(2 * half_span_px + 1);
    let mut values = Vec::with_capacity(2 * half_span_px + 1);
    let mut acc = 0.0;
    for x in -span..=span {
        if (-r..=r).contains(&x) {
            acc += lsf[(x + r) as usize];
        }
        positions.push(x);
        values.push((acc / total).min(1.0));
    }
    Ok(EdgeResponse { positions, values })
}

/// Theoretical resolution `D(z) = min(d_max, 4AG / (π (A - F) |z|))`, per mm.
pub fn theoretical_resolution(cfg: &OpticalConfig, lens: LensState) -> f64 {
    let z = lens.z_mm.abs();
    if z == 0.0 {
        return cfg.d_max;
    }
    let d = 4.0 * cfg.a_mm * cfg.g / (PI * (cfg.a_mm - cfg.f_mm) * z);
    d.min(cfg.d_max)
}

/// [`theoretical_resolution`] tabulated over `z_values`.
pub fn theoretical_curve(cfg: &OpticalConfig, z_values: &[f64]) -> Vec<(f64, f64)> {
    z_values
        .iter()
        .map(|&z| (z, theoretical_resolution(cfg, LensState { z_mm: z })))
        .collect()
}

/// Virtual camera: blur `scene` for the lens state, then add noise.
pub fn capture(
    scene: &Image,
    cfg: &OpticalConfig,
    lens: LensState,
    noise: NoiseSpec,
) -> Result<Image> {
    let psf = make_pillbox_psf(blur_radius(cfg, lens).px, DEFAULT_SUPERSAMPLE)?;
    let blurred = convolve(scene, &psf)?;
    Ok(add_noise(&blurred, noise))
}

/// The `window` crop of [`capture`], computed without blurring the rest of
/// the frame. Noise draws for pixels outside the window are still consumed so
/// the result matches the full capture bit for bit.
pub fn capture_window(
    scene: &Image,
    cfg: &OpticalConfig,
    lens: LensState,
    noise: NoiseSpec,
    window: WindowSpec,
) -> Result<Image> {
    let (x0, y0) = window.origin_in(scene)?;
    let n = window.n;
    let psf = make_pillbox_psf(blur_radius(cfg, lens).px, DEFAULT_SUPERSAMPLE)?;
    let mut samples = convolve_region(scene, &psf, x0, y0, n, n)?;
    if noise.sigma > 0.0 {
        let mut rng = ChaCha8Rng::seed_from_u64(noise.seed);
        let normal = Normal::new(0.0, noise.sigma).expect("sigma validated by NoiseSpec");
        'rows: for y in 0..scene.height() {
            for x in 0..scene.width() {
                let e = normal.sample(&mut rng);
                if (y0..y0 + n).contains(&y) && (x0..x0 + n).contains(&x) {
                    let s = &mut samples[(y - y0) * n + (x - x0)];
                    *s = (*s as f64 + e).round().clamp(0.0, 255.0) as u8;
                } else if y >= y0 + n {
                    break 'rows;
                }
            }
        }
    }
    Image::new(n, n, samples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::image_core::{make_step_edge, make_texture};

    fn cfg() -> OpticalConfig {
        OpticalConfig::new(1000.0, 50.0, 2.0, 0.01, 100.0).unwrap()
    }

    #[test]
    fn radius_by_substitution() {
        let r = blur_radius(&cfg(), LensState::new(1.0).unwrap());
        assert!((r.mm - 0.2375).abs() < 1e-15);
        assert!((r.px - 23.75).abs() < 1e-12);
        assert_eq!(blur_radius(&cfg(), LensState::focused()).mm, 0.0);
        assert_eq!(
            blur_radius(&cfg(), LensState::new(-1.0).unwrap()),
            blur_radius(&cfg(), LensState::new(1.0).unwrap())
        );
    }

    #[test]
    fn config_validation() {
        assert!(OpticalConfig::new(50.0, 50.0, 2.0, 0.01, 1.0).is_err());
        assert!(OpticalConfig::new(100.0, 0.0, 2.0, 0.01, 1.0).is_err());
        assert!(OpticalConfig::new(100.0, 50.0, 0.0, 0.01, 1.0).is_err());
        assert!(OpticalConfig::new(100.0, 50.0, 1.0, -0.01, 1.0).is_err());
        assert!(OpticalConfig::new(100.0, 50.0, 1.0, 0.01, 0.0).is_err());
        assert!(OpticalConfig::new(f64::NAN, 50.0, 1.0, 0.01, 1.0).is_err());
        assert!(LensState::new(f64::INFINITY).is_err());
    }

    #[test]
    fn zero_radius_is_identity() {
        let k = make_pillbox_psf(0.0, 8).unwrap();
        assert_eq!(k.size(), 1);
        assert_eq!(k.weights(), &[1.0]);
        assert_eq!(make_pillbox_psf(0.49, 8).unwrap().size(), 1);
        assert_eq!(make_pillbox_psf(0.5, 8).unwrap().size(), 3);
    }

    #[test]
    fn pillbox_errors() {
        assert!(matches!(
            make_pillbox_psf(-1.0, 8),
            Err(Error::NegativeRadius(_))
        ));
        assert!(matches!(
            make_pillbox_psf(2.0, 0),
            Err(Error::InvalidSupersample)
        ));
    }

    #[test]
    fn pillbox_radius_four() {
        let k = make_pillbox_psf(4.0, 8).unwrap();
        assert_eq!(k.size(), 9);
        let sum: f64 = k.weights().iter().sum();
        assert!((sum - 1.0).abs() < 1e-9);
        let center = k.weight(4, 4);
        let density = 1.0 / (PI * 16.0);
        assert!((center - density).abs() / density < 0.05, "center {center}");
    }

    #[test]
    fn pillbox_rotation_symmetry() {
        for r in [0.7, 1.3, 2.5, 4.0, 7.9, 12.25] {
            let k = make_pillbox_psf(r, 8).unwrap();
            let n = k.size();
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(k.weight(i, j), k.weight(j, n - 1 - i));
                }
            }
        }
    }

    #[test]
    fn convolve_keeps_constants() {
        let img = Image::filled(40, 30, 77).unwrap();
        for r in [0.0, 1.0, 3.3, 9.0] {
            let k = make_pillbox_psf(r, 8).unwrap();
            assert_eq!(convolve(&img, &k).unwrap(), img);
        }
    }

    #[test]
    fn identity_kernel_copies() {
        let img = make_texture(33, 21, 4).unwrap();
        assert_eq!(convolve(&img, &PsfKernel::identity()).unwrap(), img);
    }

    #[test]
    fn kernel_larger_than_image() {
        let img = Image::filled(8, 20, 1).unwrap();
        let k = make_pillbox_psf(4.0, 8).unwrap();
        assert!(matches!(
            convolve(&img, &k),
            Err(Error::KernelTooLarge { size: 9, .. })
        ));
    }

    fn naive_convolve(scene: &Image, psf: &PsfKernel) -> Image {
        let r = psf.half() as isize;
        let (w, h) = (scene.width() as isize, scene.height() as isize);
        Image::from_fn(scene.width(), scene.height(), |x, y| {
            let mut acc = 0.0;
            for ky in 0..psf.size() {
                for kx in 0..psf.size() {
                    let sx = (x as isize - (kx as isize - r)).clamp(0, w - 1);
                    let sy = (y as isize - (ky as isize - r)).clamp(0, h - 1);
                    acc += psf.weight(ky, kx) * scene.get(sx as usize, sy as usize) as f64;
                }
            }
            acc.round().clamp(0.0, 255.0) as u8
        })
        .unwrap()
    }

    #[test]
    fn run_convolution_matches_direct_sum() {
        let scene = make_texture(37, 29, 11).unwrap();
        for r in [0.6, 1.0, 2.2, 5.5, 9.0] {
            let k = make_pillbox_psf(r, 8).unwrap();
            let fast = convolve(&scene, &k).unwrap();
            let slow = naive_convolve(&scene, &k);
            // identical up to float summation order at exact .5 ties
            let diff = fast
                .samples()
                .iter()
                .zip(slow.samples())
                .filter(|(a, b)| a != b)
                .count();
            assert!(diff <= 1, "radius {r}: {diff} mismatches");
        }
    }

    #[test]
    fn step_edge_half_coverage() {
        let r = 4.0;
        let scene = make_step_edge(64, 32, 32, 0, 255).unwrap();
        let k = make_pillbox_psf(r, 8).unwrap();
        let out = convolve(&scene, &k).unwrap();
        let (left, right) = (out.get(31, 16) as f64, out.get(32, 16) as f64);
        // the geometric edge lies between columns 31 and 32
        assert!(
            ((left + right) / 2.0 - 127.5).abs() <= 1.0,
            "{left} {right}"
        );
        // the first bright column holds the half-plane plus half the center column
        let lsf = line_spread(&k);
        let expected = 255.0 * lsf[..=k.half()].iter().sum::<f64>();
        assert!((right - expected).abs() <= 0.5 + 1e-9);
    }

    #[test]
    fn line_spread_center() {
        assert_eq!(line_spread(&PsfKernel::identity()), vec![1.0]);
        for r in [4.0, 6.5, 8.0, 16.0] {
            let k = make_pillbox_psf(r, 8).unwrap();
            let lsf = line_spread(&k);
            assert!((lsf.iter().sum::<f64>() - 1.0).abs() < 1e-9);
            let expected = 2.0 / (PI * r);
            let c = lsf[k.half()];
            assert!((c - expected).abs() / expected < 0.05, "r={r} c={c}");
            for i in 0..lsf.len() {
                assert_eq!(lsf[i], lsf[lsf.len() - 1 - i]);
            }
        }
    }

    #[test]
    fn focused_edge_is_unit_step() {
        let e = edge_response(&cfg(), LensState::focused(), 5).unwrap();
        let zero = e.positions.iter().position(|&p| p == 0).unwrap();
        assert!(e.values[..zero].iter().all(|&v| v == 0.0));
        assert!(e.values[zero..].iter().all(|&v| v == 1.0));
    }

    #[test]
    fn edge_response_profile() {
        let c = cfg();
        for z in [0.05, 0.2, -0.3, 0.9] {
            let lens = LensState::new(z).unwrap();
            let span = (3.0 * blur_radius(&c, lens).px).ceil() as usize + 1;
            let e = edge_response(&c, lens, span).unwrap();
            assert!(e.values.windows(2).all(|v| v[1] >= v[0]));
            assert!(e.values[0] <= 0.01);
            assert!(*e.values.last().unwrap() >= 0.99);
            assert_eq!(e.peak_derivative().unwrap().0, 0);
        }
        let lens = LensState::new(1.0).unwrap();
        assert!(matches!(
            edge_response(&c, lens, 20),
            Err(Error::SpanTooSmall { .. })
        ));
    }

    #[test]
    fn edge_peak_matches_line_spread_center() {
        let c = cfg();
        let lens = LensState::new(c.z_for_radius_px(8.0)).unwrap();
        let e = edge_response(&c, lens, 30).unwrap();
        let (pos, peak) = e.peak_derivative().unwrap();
        assert_eq!(pos, 0);
        let expected = 2.0 / (PI * 8.0);
        assert!((peak - expected).abs() / expected < 0.05);
    }

    #[test]
    fn theoretical_values() {
        let c = cfg();
        let d = theoretical_resolution(&c, LensState::new(1.0).unwrap());
        assert!((d - 8000.0 / (950.0 * PI)).abs() < 1e-12);
        assert!((d - 2.6805).abs() < 1e-4);
        assert_eq!(theoretical_resolution(&c, LensState::focused()), c.d_max);
        assert_eq!(
            theoretical_resolution(&c, LensState::new(1e-6).unwrap()),
            c.d_max
        );
        let curve = theoretical_curve(&c, &[-2.0, 2.0]);
        assert_eq!(curve[0].1, curve[1].1);
    }

    #[test]
    fn focused_noiseless_capture_is_scene() {
        let scene = make_texture(32, 32, 9).unwrap();
        let out = capture(&scene, &cfg(), LensState::focused(), NoiseSpec::none()).unwrap();
        assert_eq!(out, scene);
    }

    #[test]
    fn window_capture_matches_full_crop() {
        let scene = make_texture(60, 50, 2).unwrap();
        let c = cfg();
        let noise = NoiseSpec::new(2.0, 17).unwrap();
        for (z, cx, cy, n) in [
            (0.0, 30, 25, 9),
            (0.2, 5, 5, 10),
            (0.3, 54, 44, 11),
            (-0.1, 29, 24, 31),
        ] {
            let lens = LensState::new(z).unwrap();
            let win = WindowSpec::new(cx, cy, n).unwrap();
            let (x0, y0) = win.origin_in(&scene).unwrap();
            let full = capture(&scene, &c, lens, noise)
                .unwrap()
                .crop(x0, y0, n, n)
                .unwrap();
            assert_eq!(capture_window(&scene, &c, lens, noise, win).unwrap(), full);
        }
    }
}

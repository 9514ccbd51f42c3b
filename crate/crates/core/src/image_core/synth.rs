//! Synthetic scenes: the ideal step edge and a detail-rich texture.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Image;
use crate::error::{Error, Result};

/// Vertical step edge: columns `>= edge_x` are `high`, the rest `low`.
pub fn make_step_edge(
    width: usize,
    height: usize,
    edge_x: usize,
    low: u8,
    high: u8,
) -> Result<Image> {
    if edge_x > width {
        return Err(Error::EdgeOutOfRange { edge_x, width });
    }
    Image::from_fn(width, height, |x, _| if x >= edge_x { high } else { low })
}

/// Smallest leaf radius in pixels.
const LEAF_MIN_RADIUS: f64 = 1.0;

/// Deterministic "dead leaves" texture.
///
/// Opaque discs are stacked front to back until every pixel is covered.
/// Radii follow a `r^-3` density between one pixel and the larger image
/// side, which makes the texture statistically scale invariant: blurring it
/// with a disc of radius `R` removes detail uniformly across scales, so the
/// gradient energy of a defocused capture falls off as `R^-2`. Leaf gray
/// levels are drawn from a dark band and a bright band to keep edge contrast
/// high.
pub fn make_texture(width: usize, height: usize, seed: u64) -> Result<Image> {
    if width == 0 || height == 0 {
        return Err(Error::InvalidDimensions { width, height });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_radius = (width.max(height) as f64).max(LEAF_MIN_RADIUS * 2.0);
    let inv_min = LEAF_MIN_RADIUS.powi(-2);
    let inv_max = max_radius.powi(-2);

    let mut samples = vec![0u8; width * height];
    let mut covered = vec![false; width * height];
    let mut remaining = width * height;
    let max_leaves = 64 * width * height + 1024;
    let mut leaves = 0;

    while remaining > 0 && leaves < max_leaves {
        leaves += 1;
        let u: f64 = rng.random();
        let radius = (inv_min - u * (inv_min - inv_max)).powf(-0.5);
        let cx = rng.random::<f64>() * width as f64;
        let cy = rng.random::<f64>() * height as f64;
        let gray = leaf_gray(&mut rng);

        let r2 = radius * radius;
        let x_lo = (cx - radius).floor().max(0.0) as usize;
        let y_lo = (cy - radius).floor().max(0.0) as usize;
        let x_hi = ((cx + radius).ceil() as usize).min(width - 1);
        let y_hi = ((cy + radius).ceil() as usize).min(height - 1);
        for y in y_lo..=y_hi {
            let dy = y as f64 + 0.5 - cy;
            for x in x_lo..=x_hi {
                let dx = x as f64 + 0.5 - cx;
                let i = y * width + x;
                if !covered[i] && dx * dx + dy * dy <= r2 {
                    covered[i] = true;
                    samples[i] = gray;
                    remaining -= 1;
                }
            }
        }
    }
    if remaining > 0 {
        let fill = leaf_gray(&mut rng);
        for (s, c) in samples.iter_mut().zip(&covered) {
            if !c {
                *s = fill;
            }
        }
    }
    // pin the histogram ends so the full dynamic range is always present
    if let Some(i) = samples.iter().position(|&v| v == min_of(&samples)) {
        samples[i] = 0;
    }
    if let Some(i) = samples.iter().position(|&v| v == max_of(&samples)) {
        samples[i] = 255;
    }
    Image::new(width, height, samples)
}

/// Fresnel zone plate `128 + 112 cos(π k r²)` around the central pixel.
///
/// The local frequency `k r` rises linearly from zero at the center to the
/// Nyquist limit (0.5 cycles/px) on the inscribed circle, so detail grows
/// steadily with distance from the center.
pub fn make_zone_plate(width: usize, height: usize) -> Result<Image> {
    if width < 2 || height < 2 {
        return Err(Error::InvalidDimensions { width, height });
    }
    let cx = ((width - 1) / 2) as f64;
    let cy = ((height - 1) / 2) as f64;
    let k = 0.5 / (width.min(height) as f64 / 2.0);
    Image::from_fn(width, height, |x, y| {
        let r2 = (x as f64 - cx).powi(2) + (y as f64 - cy).powi(2);
        (128.0 + 112.0 * (std::f64::consts::PI * k * r2).cos()).round() as u8
    })
}

fn leaf_gray(rng: &mut ChaCha8Rng) -> u8 {
    if rng.random::<bool>() {
        rng.random_range(0..=40)
    } else {
        rng.random_range(215..=255)
    }
}

fn min_of(s: &[u8]) -> u8 {
    s.iter().copied().min().unwrap_or(0)
}

fn max_of(s: &[u8]) -> u8 {
    s.iter().copied().max().unwrap_or(255)
}

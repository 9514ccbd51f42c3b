//! Grayscale rasters, PGM I/O, synthetic scenes and sensor noise.

mod noise;
mod pgm;
mod synth;

pub use noise::add_noise;
pub use pgm::{load_pgm, read_pgm, save_pgm, write_pgm};
pub use synth::{make_step_edge, make_texture, make_zone_plate};

use crate::error::{Error, Result};

/// Rectangular 8-bit luminance raster, row-major, origin at the top-left.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Image {
    width: usize,
    height: usize,
    samples: Vec<u8>,
}

impl Image {
    pub fn new(width: usize, height: usize, samples: Vec<u8>) -> Result<Self> {
        check_dims(width, height)?;
        if samples.len() != width * height {
            return Err(Error::SampleCount {
                width,
                height,
                found: samples.len(),
            });
        }
        Ok(Self {
            width,
            height,
            samples,
        })
    }

    pub fn filled(width: usize, height: usize, value: u8) -> Result<Self> {
        check_dims(width, height)?;
        Ok(Self {
            width,
            height,
            samples: vec![value; width * height],
        })
    }

    /// Builds an image by evaluating `f(x, y)` for every pixel.
    pub fn from_fn(
        width: usize,
        height: usize,
        mut f: impl FnMut(usize, usize) -> u8,
    ) -> Result<Self> {
        check_dims(width, height)?;
        let mut samples = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                samples.push(f(x, y));
            }
        }
        Ok(Self {
            width,
            height,
            samples,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn samples(&self) -> &[u8] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<u8> {
        self.samples
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> u8 {
        self.samples[y * self.width + x]
    }

    #[inline]
    pub fn row(&self, y: usize) -> &[u8] {
        &self.samples[y * self.width..(y + 1) * self.width]
    }

    /// Copies out the `width`x`height` block whose top-left pixel is `(x0, y0)`.
    pub fn crop(&self, x0: usize, y0: usize, width: usize, height: usize) -> Result<Self> {
        check_dims(width, height)?;
        if x0 + width > self.width || y0 + height > self.height {
            return Err(Error::InvalidParameter(format!(
                "crop {width}x{height} at ({x0}, {y0}) exceeds {}x{} image",
                self.width, self.height
            )));
        }
        let mut samples = Vec::with_capacity(width * height);
        for y in y0..y0 + height {
            samples.extend_from_slice(&self.row(y)[x0..x0 + width]);
        }
        Ok(Self {
            width,
            height,
            samples,
        })
    }
}

fn check_dims(width: usize, height: usize) -> Result<()> {
    if width == 0 || height == 0 {
        return Err(Error::InvalidDimensions { width, height });
    }
    Ok(())
}

/// The square N×N nucleus a resolution value is summed over.
///
/// For even `n` the center is the pixel just above-left of the geometric
/// center, so the top-left corner is always `center - (n - 1) / 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WindowSpec {
    pub center_x: usize,
    pub center_y: usize,
    pub n: usize,
}

impl WindowSpec {
    pub fn new(center_x: usize, center_y: usize, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::WindowTooSmall { n });
        }
        Ok(Self {
            center_x,
            center_y,
            n,
        })
    }

    /// An `n`×`n` window centered on the image's central pixel.
    pub fn centered(image: &Image, n: usize) -> Result<Self> {
        let w = Self::new((image.width() - 1) / 2, (image.height() - 1) / 2, n)?;
        w.origin_in(image)?;
        Ok(w)
    }

    /// Top-left corner of the window inside `image`, or an error when any
    /// part of it falls outside.
    pub fn origin_in(&self, image: &Image) -> Result<(usize, usize)> {
        self.origin_in_dims(image.width(), image.height())
    }

    pub(crate) fn origin_in_dims(&self, width: usize, height: usize) -> Result<(usize, usize)> {
        let out = || Error::WindowOutOfBounds {
            center_x: self.center_x,
            center_y: self.center_y,
            n: self.n,
            width,
            height,
        };
        if self.n < 2 {
            return Err(Error::WindowTooSmall { n: self.n });
        }
        let back = (self.n - 1) / 2;
        let x0 = self.center_x.checked_sub(back).ok_or_else(out)?;
        let y0 = self.center_y.checked_sub(back).ok_or_else(out)?;
        if x0 + self.n > width || y0 + self.n > height {
            return Err(out());
        }
        Ok((x0, y0))
    }
}

/// Additive Gaussian sensor noise; `sigma == 0` is the identity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NoiseSpec {
    pub sigma: f64,
    pub seed: u64,
}

impl NoiseSpec {
    pub fn new(sigma: f64, seed: u64) -> Result<Self> {
        if !sigma.is_finite() || sigma < 0.0 {
            return Err(Error::InvalidSigma(sigma));
        }
        Ok(Self { sigma, seed })
    }

    pub fn none() -> Self {
        Self {
            sigma: 0.0,
            seed: 0,
        }
    }

    /// Same sigma with a different seed.
    pub fn with_seed(self, seed: u64) -> Self {
        Self { seed, ..self }
    }
}

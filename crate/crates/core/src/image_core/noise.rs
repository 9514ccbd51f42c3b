use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use super::{Image, NoiseSpec};

/// Adds independent Gaussian noise to every sample, rounding to the nearest
/// integer and clamping to `[0, 255]`. Samples are drawn in row-major order
/// from a ChaCha8 stream seeded by `noise.seed`.
pub fn add_noise(image: &Image, noise: NoiseSpec) -> Image {
    if noise.sigma == 0.0 {
        return image.clone();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(noise.seed);
    let normal = Normal::new(0.0, noise.sigma).expect("sigma validated by NoiseSpec");
    let samples = image
        .samples()
        .iter()
        .map(|&v| {
            (v as f64 + normal.sample(&mut rng))
                .round()
                .clamp(0.0, 255.0) as u8
        })
        .collect();
    Image::new(image.width(), image.height(), samples).expect("same dimensions")
}

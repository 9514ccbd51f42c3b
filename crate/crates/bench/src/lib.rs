//! Shared fixtures for the benchmarks.

use focus_core::{make_texture, Image, OpticalConfig, WindowSpec};

pub const SCENE_SIDE: usize = 256;
pub const SCENE_SEED: u64 = 1;
pub const WINDOW_SIZES: [usize; 5] = [5, 9, 17, 31, 63];
pub const BLUR_RADII_PX: [f64; 4] = [2.0, 4.0, 8.0, 16.0];

pub fn scene() -> Image {
    make_texture(SCENE_SIDE, SCENE_SIDE, SCENE_SEED).expect("fixture texture")
}

pub fn window(scene: &Image, n: usize) -> WindowSpec {
    WindowSpec::centered(scene, n).expect("fixture window")
}

/// Lens displacement giving `radius_px` of blur under the default optics.
pub fn z_for(radius_px: f64) -> f64 {
    OpticalConfig::default().z_for_radius_px(radius_px)
}

use focus_bench::*;
use focus_core::{blur_radius, LensState, OpticalConfig};

#[test]
fn every_window_size_fits_the_scene() {
    let img = scene();
    for n in WINDOW_SIZES {
        assert!(window(&img, n).origin_in(&img).is_ok());
    }
}

#[test]
fn z_for_inverts_blur_radius() {
    let cfg = OpticalConfig::default();
    for r in BLUR_RADII_PX {
        let px = blur_radius(&cfg, LensState::new(z_for(r)).unwrap()).px;
        assert!((px - r).abs() < 1e-9);
    }
}

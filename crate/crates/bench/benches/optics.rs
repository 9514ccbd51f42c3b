use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use focus_bench::{scene, window, z_for, BLUR_RADII_PX};
use focus_core::optics_sim::{capture_window, DEFAULT_SUPERSAMPLE};
use focus_core::{capture, make_pillbox_psf, LensState, NoiseSpec, OpticalConfig};

fn bench_pillbox(c: &mut Criterion) {
    let mut group = c.benchmark_group("pillbox_psf");
    for r in BLUR_RADII_PX {
        group.bench_with_input(BenchmarkId::from_parameter(r), &r, |b, &r| {
            b.iter(|| make_pillbox_psf(black_box(r), DEFAULT_SUPERSAMPLE).unwrap())
        });
    }
    group.finish();
}

fn bench_capture(c: &mut Criterion) {
    let img = scene();
    let cfg = OpticalConfig::default();
    let noise = NoiseSpec::new(2.0, 7).unwrap();
    let w = window(&img, 31);
    let mut group = c.benchmark_group("capture");
    group.sample_size(20);
    for r in BLUR_RADII_PX {
        let lens = LensState::new(z_for(r)).unwrap();
        group.bench_with_input(BenchmarkId::new("full", r), &lens, |b, &lens| {
            b.iter(|| capture(black_box(&img), &cfg, lens, noise).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("window31", r), &lens, |b, &lens| {
            b.iter(|| capture_window(black_box(&img), &cfg, lens, noise, w).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_pillbox, bench_capture);
criterion_main!(benches);

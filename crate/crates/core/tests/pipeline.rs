use focus_core::focus_metric::linspace;
use focus_core::*;

fn scene() -> Image {
    make_texture(128, 128, 7).unwrap()
}

#[test]
fn noiseless_sweep_is_even_and_peaks_at_focus() {
    let scene = scene();
    let cfg = OpticalConfig::default();
    let window = WindowSpec::centered(&scene, 31).unwrap();
    let z = linspace(-1.0, 1.0, 21);
    let curve = sweep(
        &scene,
        &cfg,
        window,
        MetricKind::Squared,
        &z,
        NoiseSpec::none(),
        1,
    )
    .unwrap();
    let e = &curve.entries;
    for i in 0..e.len() {
        assert_eq!(e[i].d_mean, e[e.len() - 1 - i].d_mean);
        assert_eq!(e[i].d_stddev, 0.0);
    }
    assert_eq!(curve.argmax(), Some(10));
    assert_eq!(
        e[10].d_mean,
        resolution(&scene, window, MetricKind::Squared).unwrap() as f64
    );
    for pair in e[10..].windows(2) {
        assert!(pair[1].d_mean < pair[0].d_mean);
    }
}

#[test]
fn noisy_sweep_reports_spread_and_is_reproducible() {
    let scene = scene();
    let cfg = OpticalConfig::default();
    let window = WindowSpec::centered(&scene, 17).unwrap();
    let z = linspace(-0.2, 0.2, 5);
    let noise = NoiseSpec::new(2.0, 11).unwrap();
    let a = sweep(&scene, &cfg, window, MetricKind::Absolute, &z, noise, 4).unwrap();
    let b = sweep(&scene, &cfg, window, MetricKind::Absolute, &z, noise, 4).unwrap();
    assert_eq!(a, b);
    assert!(a
        .entries
        .iter()
        .all(|p| p.n_trials == 4 && p.d_stddev > 0.0));
    let c = sweep(
        &scene,
        &cfg,
        window,
        MetricKind::Absolute,
        &z,
        noise.with_seed(12),
        4,
    )
    .unwrap();
    assert_ne!(a, c);
}

#[test]
fn curve_csv_has_one_row_per_z() {
    let scene = scene();
    let cfg = OpticalConfig::default();
    let window = WindowSpec::centered(&scene, 9).unwrap();
    let z = linspace(-0.1, 0.1, 3);
    let csv = sweep(
        &scene,
        &cfg,
        window,
        MetricKind::Squared,
        &z,
        NoiseSpec::none(),
        1,
    )
    .unwrap()
    .to_csv();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], FocusCurve::CSV_HEADER);
    assert_eq!(lines.len(), 4);
    assert!(lines[2].starts_with("0.000000,"));
}

#[test]
fn autofocus_finds_focus_from_offset_interval() {
    let scene = scene();
    let cfg = OpticalConfig::default();
    let window = WindowSpec::centered(&scene, 31).unwrap();
    let params = SearchParams {
        z_min: -1.3,
        z_max: 2.1,
        ..SearchParams::default()
    };
    let r = autofocus(&scene, &cfg, window, NoiseSpec::none(), &params).unwrap();
    assert_eq!(r.status(), "ok");
    assert!(r.z_star.abs() <= 0.02, "z* = {}", r.z_star);
    assert!(r.evaluations <= params.max_evaluations());
    assert_eq!(r.trace.len(), r.evaluations);
    let widths: Vec<f64> = r.brackets.iter().map(|(a, b)| b - a).collect();
    assert!(widths.windows(2).all(|w| w[1] < w[0]));
}

#[test]
fn autofocus_flags_interval_without_focus() {
    let scene = scene();
    let cfg = OpticalConfig::default();
    let window = WindowSpec::centered(&scene, 31).unwrap();
    let params = SearchParams {
        z_min: 0.5,
        z_max: 2.0,
        ..SearchParams::default()
    };
    let r = autofocus(&scene, &cfg, window, NoiseSpec::none(), &params).unwrap();
    assert_eq!(r.status(), "boundary");
    assert_eq!(r.z_star, 0.5);
    assert!(r.trace.iter().all(|t| t.phase == Phase::Coarse));
}

#[test]
fn stability_rows_follow_requested_sizes() {
    let scene = make_zone_plate(96, 96).unwrap();
    let cfg = OpticalConfig::default();
    let noise = NoiseSpec::new(2.0, 4).unwrap();
    let report = stability_study(
        &scene,
        &cfg,
        LensState::focused(),
        (47, 47),
        &[5, 9, 17, 31],
        noise,
        6,
    )
    .unwrap();
    let sizes: Vec<usize> = report.rows.iter().map(|r| r.n).collect();
    assert_eq!(sizes, [5, 9, 17, 31]);
    assert!(report.rows.iter().all(|r| r.measurements.len() == 6));
    assert!(report.strictly_decreasing());
    assert_eq!(report.to_csv().lines().count(), 1 + 4 * 6);
}

#[test]
fn compare_metrics_agrees_and_larger_windows_cost_more() {
    let scene = scene();
    let cfg = OpticalConfig::default();
    let window = WindowSpec::centered(&scene, 31).unwrap();
    let z = linspace(-0.5, 0.5, 11);
    let report = compare_metrics(&scene, &cfg, window, &z, &[5, 63], 200).unwrap();
    assert_eq!(
        report.argmax_for(MetricKind::Squared),
        report.argmax_for(MetricKind::Absolute)
    );
    assert_eq!(report.argmax_for(MetricKind::Squared), Some(0.0));
    for kind in MetricKind::ALL {
        assert!(report.timing(kind, 63).unwrap() > report.timing(kind, 5).unwrap());
    }
}

#[test]
fn saved_capture_measures_like_the_in_memory_one() {
    let dir = tempfile::tempdir().unwrap();
    let scene = scene();
    let cfg = OpticalConfig::default();
    let img = capture(
        &scene,
        &cfg,
        LensState::new(0.3).unwrap(),
        NoiseSpec::new(1.5, 2).unwrap(),
    )
    .unwrap();
    let path = dir.path().join("shot.pgm");
    save_pgm(&img, &path).unwrap();
    let back = load_pgm(&path).unwrap();
    let window = WindowSpec::centered(&img, 31).unwrap();
    for kind in MetricKind::ALL {
        assert_eq!(
            resolution(&img, window, kind).unwrap(),
            resolution(&back, window, kind).unwrap()
        );
    }
}

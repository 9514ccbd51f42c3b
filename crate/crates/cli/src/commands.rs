use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use focus_core::focus_metric::linspace;
use focus_core::*;

use crate::{Cli, Command, GenScene, GlobalOpts, ZRange};

const STABILITY_SIGMA: f64 = 2.0;

#[derive(Debug)]
pub struct CliError(String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError(e.to_string())
    }
}

type CliResult<T = ()> = std::result::Result<T, CliError>;

fn flag_err<T>(flag: &str, msg: impl fmt::Display) -> CliResult<T> {
    Err(CliError(format!("{flag}: {msg}")))
}

/// Tags a core error with the flag that caused it.
fn blame<T>(flag: &str, r: Result<T>) -> CliResult<T> {
    r.or_else(|e| flag_err(flag, e))
}

pub fn run(cli: Cli) -> CliResult {
    let g = &cli.global;
    match cli.command {
        Command::Gen { scene } => gen(g, scene),
        Command::Blur { input, z, out } => {
            let cfg = optics(g)?;
            let scene = load(&input)?;
            let lens = blame("--z", LensState::new(z))?;
            let img = blame("--z", capture(&scene, &cfg, lens, noise(g, 0.0)?))?;
            save(&img, &out)
        }
        Command::Measure { input } => {
            let img = load(&input)?;
            let d = resolution(&img, window(g, &img)?, g.metric.into())?;
            println!("{d}");
            Ok(())
        }
        Command::Sweep {
            scene,
            range,
            trials,
            out,
        } => {
            let cfg = optics(g)?;
            let scene = load(&scene)?;
            let z = z_values(range)?;
            if trials == 0 {
                return flag_err("--trials", "must be >= 1");
            }
            let w = window(g, &scene)?;
            let curve = sweep(&scene, &cfg, w, g.metric.into(), &z, noise(g, 0.0)?, trials)?;
            emit(out.as_deref(), &curve.to_csv())
        }
        Command::Autofocus {
            scene,
            z_min,
            z_max,
            coarse_steps,
            refine_iterations,
            trials,
            trace_out,
        } => {
            let cfg = optics(g)?;
            let scene = load(&scene)?;
            if !(z_min.is_finite() && z_max.is_finite() && z_min < z_max) {
                return flag_err(
                    "--z-min/--z-max",
                    format!("need z_min < z_max, got [{z_min}, {z_max}]"),
                );
            }
            if coarse_steps < 5 {
                return flag_err(
                    "--coarse-steps",
                    format!("must be >= 5, got {coarse_steps}"),
                );
            }
            if trials == 0 {
                return flag_err("--trials", "must be >= 1");
            }
            let params = SearchParams {
                z_min,
                z_max,
                coarse_steps,
                refine_iterations,
                trials_per_eval: trials,
                metric: g.metric.into(),
            };
            let w = window(g, &scene)?;
            let r = autofocus(&scene, &cfg, w, noise(g, 0.0)?, &params)?;
            if let Some(path) = trace_out {
                write_file(&path, &r.trace_csv())?;
            }
            if r.at_boundary {
                eprintln!("focus: warning: sharpest coarse position lies on the search boundary; refinement skipped");
            }
            println!(
                "z_star_mm={:.6} d_star={:.3} evaluations={} status={}",
                r.z_star,
                r.d_star,
                r.evaluations,
                r.status()
            );
            Ok(())
        }
        Command::Stability {
            scene,
            sizes,
            repeats,
            z,
            out,
        } => {
            let cfg = optics(g)?;
            let scene = load(&scene)?;
            if sizes.is_empty() {
                return flag_err("--sizes", "needs at least one window size");
            }
            if repeats < 3 {
                return flag_err("--repeats", format!("must be >= 3, got {repeats}"));
            }
            let lens = blame("--z", LensState::new(z))?;
            let center = center(g, &scene);
            for &n in &sizes {
                blame(
                    "--sizes",
                    WindowSpec::new(center.0, center.1, n).and_then(|w| w.origin_in(&scene)),
                )?;
            }
            let report = stability_study(
                &scene,
                &cfg,
                lens,
                center,
                &sizes,
                noise(g, STABILITY_SIGMA)?,
                repeats,
            )?;
            emit(out.as_deref(), &report.to_csv())
        }
        Command::Compare {
            scene,
            range,
            sizes,
            repeats,
            out,
        } => {
            let cfg = optics(g)?;
            let scene = load(&scene)?;
            let z = z_values(range)?;
            if repeats < 10 {
                return flag_err("--repeats", format!("must be >= 10, got {repeats}"));
            }
            let w = window(g, &scene)?;
            for &n in &sizes {
                blame(
                    "--sizes",
                    WindowSpec::new(w.center_x, w.center_y, n).and_then(|w| w.origin_in(&scene)),
                )?;
            }
            let report = compare_metrics(&scene, &cfg, w, &z, &sizes, repeats)?;
            emit(out.as_deref(), &report.to_csv())
        }
    }
}

fn gen(g: &GlobalOpts, scene: GenScene) -> CliResult {
    let positive = |w: usize, h: usize| {
        if w == 0 || h == 0 {
            flag_err("--width/--height", format!("must be positive, got {w}x{h}"))
        } else {
            Ok(())
        }
    };
    match scene {
        GenScene::Step {
            width,
            height,
            edge_x,
            low,
            high,
            out,
        } => {
            positive(width, height)?;
            let edge_x = edge_x.unwrap_or(width / 2);
            if edge_x > width {
                return flag_err("--edge-x", format!("{edge_x} lies outside 0..={width}"));
            }
            save(&make_step_edge(width, height, edge_x, low, high)?, &out)
        }
        GenScene::Texture { width, height, out } => {
            positive(width, height)?;
            save(&make_texture(width, height, g.seed)?, &out)
        }
        GenScene::Zoneplate { width, height, out } => {
            if width < 2 || height < 2 {
                return flag_err(
                    "--width/--height",
                    format!("must be at least 2, got {width}x{height}"),
                );
            }
            save(&make_zone_plate(width, height)?, &out)
        }
    }
}

fn optics(g: &GlobalOpts) -> CliResult<OpticalConfig> {
    let checks: [(&str, f64); 5] = [
        ("--a-mm", g.a_mm),
        ("--f-mm", g.f_mm),
        ("--g", g.g),
        ("--pixel-pitch-mm", g.pixel_pitch_mm),
        ("--d-max", g.d_max),
    ];
    for (flag, v) in checks {
        if !(v.is_finite() && v > 0.0) {
            return flag_err(flag, format!("must be finite and > 0, got {v}"));
        }
    }
    if g.a_mm <= g.f_mm {
        return flag_err(
            "--a-mm",
            format!("object distance {} must exceed --f-mm {}", g.a_mm, g.f_mm),
        );
    }
    Ok(OpticalConfig::new(
        g.a_mm,
        g.f_mm,
        g.g,
        g.pixel_pitch_mm,
        g.d_max,
    )?)
}

fn noise(g: &GlobalOpts, default_sigma: f64) -> CliResult<NoiseSpec> {
    blame(
        "--sigma",
        NoiseSpec::new(g.sigma.unwrap_or(default_sigma), g.seed),
    )
}

fn center(g: &GlobalOpts, img: &Image) -> (usize, usize) {
    (
        g.cx.unwrap_or((img.width() - 1) / 2),
        g.cy.unwrap_or((img.height() - 1) / 2),
    )
}

fn window(g: &GlobalOpts, img: &Image) -> CliResult<WindowSpec> {
    let (cx, cy) = center(g, img);
    let w = blame("--n", WindowSpec::new(cx, cy, g.n))?;
    blame("--cx/--cy/--n", w.origin_in(img))?;
    Ok(w)
}

fn z_values(r: ZRange) -> CliResult<Vec<f64>> {
    if r.z_steps == 0 {
        return flag_err("--z-steps", "must be >= 1");
    }
    if !(r.z_min.is_finite() && r.z_max.is_finite()) {
        return flag_err("--z-min/--z-max", "must be finite");
    }
    if r.z_steps == 1 {
        if r.z_min != r.z_max {
            return flag_err("--z-steps", "a single step needs --z-min equal to --z-max");
        }
        return Ok(vec![r.z_min]);
    }
    if r.z_min >= r.z_max {
        return flag_err(
            "--z-min/--z-max",
            format!("need z_min < z_max, got [{}, {}]", r.z_min, r.z_max),
        );
    }
    Ok(linspace(r.z_min, r.z_max, r.z_steps))
}

fn load(path: &Path) -> CliResult<Image> {
    load_pgm(path).map_err(|e| CliError(format!("{}: {e}", path.display())))
}

fn save(img: &Image, path: &PathBuf) -> CliResult {
    save_pgm(img, path).map_err(|e| CliError(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> CliResult {
    fs::write(path, text).map_err(|e| CliError(format!("{}: {e}", path.display())))
}

/// Writes to `path`, or standard output when absent.
fn emit(path: Option<&Path>, text: &str) -> CliResult {
    match path {
        Some(p) => write_file(p, text),
        None => io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| CliError(format!("stdout: {e}"))),
    }
}

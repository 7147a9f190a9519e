//! Scenario execution and artifact emission.
//!
//! A run produces three artifacts in its output directory, all UTF-8 and
//! byte-reproducible for identical configs:
//!
//! - `timeseries.csv` — header `t,probe_<i>,...`, one row per time level,
//!   floats with 17 significant digits;
//! - `snapshot.csv` — header `x,u`, the final field snapshot (grid solvers);
//! - `metadata.json` — schema version, the full config echo and every
//!   derived constant the solver used.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use fracwave::signal::SampledSignal;
use fracwave::wavesolver::{
    magnetic_params, solve_electric, solve_magnetic, solve_modal, windowed_history_bound,
    MediumResponse, SolveOptions,
};

use crate::config::{ConfigError, ScenarioConfig, SolverKind, ValidatedScenario, SCHEMA_VERSION};
use crate::{format_float, DEFAULT_OUTPUT_ROOT, OUTPUT_ROOT_ENV};

/// Any failure a run can surface, separated for exit-code mapping.
#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error("configuration error: {0}")]
    Config(#[from] ConfigError),
    #[error("solver error: {0}")]
    Solver(#[from] fracwave::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

/// In-memory result of a scenario run.
pub struct RunOutput {
    pub probes: Vec<(usize, SampledSignal<f64>)>,
    /// `(x, u)` of the final level; absent for modal runs.
    pub snapshot: Option<(Vec<f64>, Vec<f64>)>,
    pub sup_norm: f64,
}

/// Paths of the emitted artifacts.
#[derive(Debug, Clone)]
pub struct RunArtifacts {
    pub dir: PathBuf,
    pub timeseries: PathBuf,
    pub snapshot: Option<PathBuf>,
    pub metadata: PathBuf,
}

/// Derived constants recorded in the metadata; every value is recomputable
/// from the config echo.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct DerivedConstants {
    pub v: Option<f64>,
    pub v_beta: Option<f64>,
    pub a_beta: Option<f64>,
    pub lambda1: Option<f64>,
    pub lambda2: Option<f64>,
    pub courant: Option<f64>,
    pub stability_dt_bound: Option<f64>,
    pub blowup_threshold: f64,
    pub history_window: Option<usize>,
    pub t_end: f64,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct RunMetadata {
    pub schema_version: u32,
    pub name: Option<String>,
    pub config: ScenarioConfig,
    pub derived: DerivedConstants,
    /// Sup-norm bound on the per-step error of a truncated-history run;
    /// present only when `history_window` is set.
    pub history_window_bound: Option<f64>,
    pub outputs: OutputPaths,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct OutputPaths {
    pub timeseries: String,
    pub snapshot: Option<String>,
    pub metadata: String,
}

/// Executes the scenario's solver and collects probe series and the final
/// snapshot.
pub fn execute(s: &ValidatedScenario) -> Result<RunOutput, fracwave::Error> {
    let opts = SolveOptions {
        history_window: s.history_window,
        blowup_threshold: s.blowup_threshold,
    };
    match s.kind {
        SolverKind::Electric | SolverKind::Magnetic => {
            let medium = s.medium.as_ref().expect("validated grid scenario has a medium");
            let grid = s.grid.expect("validated grid scenario has a grid");
            let state = if s.kind == SolverKind::Electric {
                solve_electric(medium, grid, &s.source, s.dt, s.nt, &opts)?
            } else {
                solve_magnetic(medium, grid, &s.source, s.dt, s.nt, &opts)?
            };
            let probes = s
                .probes
                .iter()
                .map(|&i| Ok((i, state.probe_series(i)?)))
                .collect::<Result<Vec<_>, fracwave::Error>>()?;
            let xs = (0..grid.nx()).map(|i| grid.position(i)).collect();
            let us = state.latest().to_vec();
            let sup = probes
                .iter()
                .map(|(_, p)| p.sup_norm())
                .fold(0.0f64, f64::max);
            Ok(RunOutput {
                probes,
                snapshot: Some((xs, us)),
                sup_norm: sup,
            })
        }
        SolverKind::Modal => {
            let (params, k) = s.mode.expect("validated modal scenario has mode params");
            let series = solve_modal(params, k, &s.source, s.dt, s.nt, &opts)?;
            let sup = series.sup_norm();
            Ok(RunOutput {
                probes: vec![(0, series)],
                snapshot: None,
                sup_norm: sup,
            })
        }
    }
}

/// Derived constants for the metadata record.
pub fn derive_constants(s: &ValidatedScenario) -> DerivedConstants {
    let mut d = DerivedConstants {
        v: None,
        v_beta: None,
        a_beta: None,
        lambda1: None,
        lambda2: None,
        courant: None,
        stability_dt_bound: s.config.max_stable_dt,
        blowup_threshold: s.blowup_threshold,
        history_window: s.history_window,
        t_end: s.dt * s.nt as f64,
    };
    if let Some(medium) = &s.medium {
        let v = medium.v_squared().sqrt();
        d.v = Some(v);
        d.v_beta = Some(medium.v_beta_squared().sqrt());
        d.a_beta = medium.a_beta();
        if let Ok(p) = magnetic_params(medium) {
            d.lambda1 = Some(p.lambda1);
            d.lambda2 = Some(p.lambda2);
        }
        if let Some(grid) = &s.grid {
            d.courant = Some(v * s.dt / grid.dx());
            if d.stability_dt_bound.is_none() {
                // default empirical bound: the classical Courant limit of the
                // fastest front in the medium
                d.stability_dt_bound = Some(grid.dx() / v);
            }
        }
    }
    if let Some((params, _)) = &s.mode {
        d.lambda1 = Some(params.lambda1);
        d.lambda2 = Some(params.lambda2);
    }
    d
}

/// Resolves the artifact directory: `$FRACWAVE_OUTPUT_ROOT` (default
/// `runs/`) joined with the config's output dir, name, or the given stem.
pub fn resolve_output_dir(s: &ValidatedScenario, fallback_stem: &str) -> PathBuf {
    let root = std::env::var(OUTPUT_ROOT_ENV).unwrap_or_else(|_| DEFAULT_OUTPUT_ROOT.into());
    let dir = s
        .output
        .dir
        .clone()
        .or_else(|| s.config.name.clone())
        .unwrap_or_else(|| fallback_stem.to_string());
    Path::new(&root).join(dir)
}

/// Runs the scenario and writes all artifacts under `dir`. Outputs are
/// deterministic: identical config and build produce byte-identical files.
pub fn run_scenario(s: &ValidatedScenario, dir: &Path) -> Result<RunArtifacts, RunError> {
    let out = execute(s)?;
    fs::create_dir_all(dir)?;

    let timeseries = dir.join(&s.output.timeseries);
    write_timeseries(&timeseries, &out)?;

    let snapshot = match &out.snapshot {
        Some((xs, us)) => {
            let path = dir.join(&s.output.snapshot);
            write_snapshot(&path, xs, us)?;
            Some(path)
        }
        None => None,
    };

    let history_window_bound = match s.history_window {
        Some(window) => Some(window_bound(s, window, out.sup_norm)?),
        None => None,
    };

    let metadata = dir.join(&s.output.metadata);
    let record = RunMetadata {
        schema_version: SCHEMA_VERSION,
        name: s.config.name.clone(),
        config: s.config.clone(),
        derived: derive_constants(s),
        history_window_bound,
        outputs: OutputPaths {
            timeseries: s.output.timeseries.clone(),
            snapshot: out.snapshot.as_ref().map(|_| s.output.snapshot.clone()),
            metadata: s.output.metadata.clone(),
        },
    };
    let mut f = fs::File::create(&metadata)?;
    serde_json::to_writer_pretty(&mut f, &record).map_err(std::io::Error::other)?;
    f.write_all(b"\n")?;

    Ok(RunArtifacts {
        dir: dir.to_path_buf(),
        timeseries,
        snapshot,
        metadata,
    })
}

/// Truncation bound of a windowed-history run, from the order/coefficient
/// family actually stepped.
fn window_bound(s: &ValidatedScenario, window: usize, sup: f64) -> Result<f64, RunError> {
    let orders: Vec<(f64, f64)> = match s.kind {
        SolverKind::Modal => {
            let (p, _) = s.mode.expect("modal scenario");
            vec![(1.0, p.alpha), (-p.lambda1, p.beta)]
        }
        SolverKind::Magnetic => {
            let medium = s.medium.as_ref().expect("grid scenario");
            let p = magnetic_params(medium).map_err(RunError::Solver)?;
            vec![(1.0, p.alpha), (-p.lambda1, p.beta)]
        }
        SolverKind::Electric => {
            let medium = s.medium.as_ref().expect("grid scenario");
            match medium.response() {
                MediumResponse::Classical => vec![(medium.v_squared().recip(), 2.0)],
                MediumResponse::High { chi_alpha, alpha } => {
                    let inv = medium.v_squared().recip();
                    vec![(inv, 2.0), (chi_alpha * inv, 2.0 - alpha)]
                }
                MediumResponse::Low { beta, .. } => {
                    let inv = medium.v_beta_squared().recip();
                    let ab = medium.a_beta().expect("low medium");
                    vec![(inv, 2.0), (-ab * inv, 2.0 + beta)]
                }
            }
        }
    };
    windowed_history_bound(&orders, s.dt, s.nt, window, sup).map_err(RunError::Solver)
}

fn write_timeseries(path: &Path, out: &RunOutput) -> Result<(), RunError> {
    let mut w = csv::Writer::from_path(path)?;
    let mut header = vec!["t".to_string()];
    header.extend(out.probes.iter().map(|(i, _)| format!("probe_{i}")));
    w.write_record(&header)?;
    let n = out.probes[0].1.len();
    for row in 0..n {
        let mut record = Vec::with_capacity(out.probes.len() + 1);
        record.push(format_float(out.probes[0].1.time(row)));
        for (_, series) in &out.probes {
            record.push(format_float(series.values()[row]));
        }
        w.write_record(&record)?;
    }
    w.flush()?;
    Ok(())
}

fn write_snapshot(path: &Path, xs: &[f64], us: &[f64]) -> Result<(), RunError> {
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(["x", "u"])?;
    for (x, u) in xs.iter().zip(us) {
        w.write_record([format_float(*x), format_float(*u)])?;
    }
    w.flush()?;
    Ok(())
}

//! Scenario configuration: a versioned JSON schema validated into the core
//! solver types, with every violation reported by field path.

use serde::{Deserialize, Serialize};

use fracwave::wavesolver::{
    Boundary, Grid1D, MediumParams, MediumResponse, SourceModel, SpatialProfile, TwoTermParams,
    Waveform,
};

pub const SCHEMA_VERSION: u32 = 1;

/// Schema violation with the JSON path of the offending field.
#[derive(Debug, Clone, thiserror::Error)]
#[error("{path}: {message}")]
pub struct ConfigError {
    pub path: String,
    pub message: String,
}

impl ConfigError {
    pub fn new(path: impl Into<String>, message: impl Into<String>) -> Self {
        Self {
            path: path.into(),
            message: message.into(),
        }
    }
}

// ---------------------------------------------------------------------------
// serde schema
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub version: u32,
    #[serde(default)]
    pub name: Option<String>,
    pub solver: SolverKind,
    #[serde(default)]
    pub medium: Option<MediumConfig>,
    #[serde(default)]
    pub grid: Option<GridConfig>,
    #[serde(default)]
    pub mode: Option<ModeConfig>,
    pub source: SourceConfig,
    pub dt: f64,
    pub nt: usize,
    #[serde(default)]
    pub probes: Vec<usize>,
    #[serde(default)]
    pub history_window: Option<usize>,
    #[serde(default)]
    pub blowup_threshold: Option<f64>,
    #[serde(default)]
    pub max_stable_dt: Option<f64>,
    /// Reserved for randomized sweeps; recorded in metadata, unused by the
    /// deterministic solvers.
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default)]
    pub output: Option<OutputConfig>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolverKind {
    Electric,
    Magnetic,
    Modal,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MediumConfig {
    pub eps0: f64,
    pub mu: f64,
    pub response: ResponseConfig,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "regime", rename_all = "snake_case", deny_unknown_fields)]
pub enum ResponseConfig {
    Classical,
    High { chi_alpha: f64, alpha: f64 },
    Low { chi_zero: f64, chi_beta: f64, beta: f64 },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    pub nx: usize,
    pub dx: f64,
    pub boundary: BoundaryConfig,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundaryConfig {
    Periodic,
    FixedZero,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModeConfig {
    pub wavenumber: f64,
    pub alpha: f64,
    pub beta: f64,
    pub lambda1: f64,
    pub lambda2: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SourceConfig {
    pub waveform: WaveformConfig,
    pub amplitude: f64,
    pub profile: ProfileConfig,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum WaveformConfig {
    Impulse,
    GaussianPulse { center: f64, width: f64 },
    WindowedSinusoid { center: f64, width: f64, frequency: f64 },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ProfileConfig {
    Gaussian { center: f64, width: f64 },
    Point { index: usize },
    Uniform,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputConfig {
    #[serde(default)]
    pub dir: Option<String>,
    #[serde(default = "default_timeseries")]
    pub timeseries: String,
    #[serde(default = "default_snapshot")]
    pub snapshot: String,
    #[serde(default = "default_metadata")]
    pub metadata: String,
}

fn default_timeseries() -> String {
    "timeseries.csv".into()
}
fn default_snapshot() -> String {
    "snapshot.csv".into()
}
fn default_metadata() -> String {
    "metadata.json".into()
}

impl Default for OutputConfig {
    fn default() -> Self {
        Self {
            dir: None,
            timeseries: default_timeseries(),
            snapshot: default_snapshot(),
            metadata: default_metadata(),
        }
    }
}

// ---------------------------------------------------------------------------
// validated scenario
// ---------------------------------------------------------------------------

/// A scenario whose parameters passed schema validation and construct the
/// core solver types.
#[derive(Debug, Clone)]
pub struct ValidatedScenario {
    pub config: ScenarioConfig,
    pub kind: SolverKind,
    pub medium: Option<MediumParams<f64>>,
    pub grid: Option<Grid1D<f64>>,
    pub mode: Option<(TwoTermParams<f64>, f64)>,
    pub source: SourceModel<f64>,
    pub dt: f64,
    pub nt: usize,
    pub probes: Vec<usize>,
    pub history_window: Option<usize>,
    pub blowup_threshold: f64,
    pub output: OutputConfig,
}

pub fn parse_config(text: &str) -> Result<ValidatedScenario, ConfigError> {
    let config: ScenarioConfig = serde_json::from_str(text)
        .map_err(|e| ConfigError::new("<json>", e.to_string()))?;
    validate(config)
}

pub fn validate(config: ScenarioConfig) -> Result<ValidatedScenario, ConfigError> {
    if config.version != SCHEMA_VERSION {
        return Err(ConfigError::new(
            "version",
            format!("unsupported schema version {} (expected {SCHEMA_VERSION})", config.version),
        ));
    }
    if !(config.dt.is_finite() && config.dt > 0.0) {
        return Err(ConfigError::new("dt", format!("must be positive, got {}", config.dt)));
    }
    if config.nt == 0 {
        return Err(ConfigError::new("nt", "must be at least 1"));
    }
    if let Some(bound) = config.max_stable_dt {
        if config.dt > bound {
            return Err(ConfigError::new(
                "dt",
                format!("exceeds the configured stability bound max_stable_dt = {bound}"),
            ));
        }
    }
    if let Some(w) = config.history_window {
        if w == 0 {
            return Err(ConfigError::new("history_window", "must be positive when set"));
        }
    }
    let blowup = config.blowup_threshold.unwrap_or(1e30);
    if !(blowup.is_finite() && blowup > 0.0) {
        return Err(ConfigError::new(
            "blowup_threshold",
            format!("must be positive and finite, got {blowup}"),
        ));
    }

    let medium = match (&config.medium, config.solver) {
        (Some(m), _) => Some(build_medium(m)?),
        (None, SolverKind::Electric | SolverKind::Magnetic) => {
            return Err(ConfigError::new("medium", "required for grid solvers"));
        }
        (None, SolverKind::Modal) => None,
    };
    let grid = match (&config.grid, config.solver) {
        (Some(g), _) => Some(build_grid(g)?),
        (None, SolverKind::Electric | SolverKind::Magnetic) => {
            return Err(ConfigError::new("grid", "required for grid solvers"));
        }
        (None, SolverKind::Modal) => None,
    };
    let mode = match (&config.mode, config.solver) {
        (Some(m), SolverKind::Modal) => Some(build_mode(m)?),
        (Some(_), _) => {
            return Err(ConfigError::new("mode", "only meaningful for the modal solver"));
        }
        (None, SolverKind::Modal) => {
            return Err(ConfigError::new("mode", "required for the modal solver"));
        }
        (None, _) => None,
    };
    let source = build_source(&config.source, config.dt, config.nt)?;

    let probes = if config.solver == SolverKind::Modal {
        if !config.probes.is_empty() && config.probes != [0] {
            return Err(ConfigError::new(
                "probes",
                "the modal solver records a single series; leave probes empty or [0]",
            ));
        }
        vec![0]
    } else {
        let nx = grid.as_ref().map(|g| g.nx()).unwrap_or(0);
        if config.probes.is_empty() {
            return Err(ConfigError::new("probes", "at least one probe index is required"));
        }
        for (i, &p) in config.probes.iter().enumerate() {
            if p >= nx {
                return Err(ConfigError::new(
                    format!("probes[{i}]"),
                    format!("index {p} outside grid of {nx} points"),
                ));
            }
        }
        config.probes.clone()
    };

    let output = config.output.clone().unwrap_or_default();

    Ok(ValidatedScenario {
        kind: config.solver,
        medium,
        grid,
        mode,
        source,
        dt: config.dt,
        nt: config.nt,
        probes,
        history_window: config.history_window,
        blowup_threshold: blowup,
        output,
        config,
    })
}

fn build_medium(m: &MediumConfig) -> Result<MediumParams<f64>, ConfigError> {
    if !(m.eps0.is_finite() && m.eps0 > 0.0) {
        return Err(ConfigError::new("medium.eps0", format!("must be positive, got {}", m.eps0)));
    }
    if !(m.mu.is_finite() && m.mu > 0.0) {
        return Err(ConfigError::new("medium.mu", format!("must be positive, got {}", m.mu)));
    }
    let response = match m.response {
        ResponseConfig::Classical => MediumResponse::Classical,
        ResponseConfig::High { chi_alpha, alpha } => {
            if !(chi_alpha.is_finite() && chi_alpha >= 0.0) {
                return Err(ConfigError::new(
                    "medium.response.chi_alpha",
                    format!("must be nonnegative, got {chi_alpha}"),
                ));
            }
            if !(alpha.is_finite() && alpha > 0.0 && alpha < 1.0) {
                return Err(ConfigError::new(
                    "medium.response.alpha",
                    format!("must lie in (0, 1), got {alpha}"),
                ));
            }
            MediumResponse::High { chi_alpha, alpha }
        }
        ResponseConfig::Low {
            chi_zero,
            chi_beta,
            beta,
        } => {
            if !(chi_zero.is_finite() && chi_zero >= 0.0) {
                return Err(ConfigError::new(
                    "medium.response.chi_zero",
                    format!("must be nonnegative, got {chi_zero}"),
                ));
            }
            if !(chi_beta.is_finite() && chi_beta > 0.0) {
                return Err(ConfigError::new(
                    "medium.response.chi_beta",
                    format!("must be positive, got {chi_beta}"),
                ));
            }
            if !(beta.is_finite() && beta > 0.0 && beta < 1.0) {
                return Err(ConfigError::new(
                    "medium.response.beta",
                    format!("must lie in (0, 1), got {beta}"),
                ));
            }
            MediumResponse::Low {
                chi_zero,
                chi_beta,
                beta,
            }
        }
    };
    MediumParams::new(m.eps0, m.mu, response)
        .map_err(|e| ConfigError::new("medium", e.to_string()))
}

fn build_grid(g: &GridConfig) -> Result<Grid1D<f64>, ConfigError> {
    if g.nx < 3 {
        return Err(ConfigError::new("grid.nx", format!("needs at least 3 points, got {}", g.nx)));
    }
    if !(g.dx.is_finite() && g.dx > 0.0) {
        return Err(ConfigError::new("grid.dx", format!("must be positive, got {}", g.dx)));
    }
    let boundary = match g.boundary {
        BoundaryConfig::Periodic => Boundary::Periodic,
        BoundaryConfig::FixedZero => Boundary::FixedZero,
    };
    Grid1D::new(g.nx, g.dx, boundary).map_err(|e| ConfigError::new("grid", e.to_string()))
}

fn build_mode(m: &ModeConfig) -> Result<(TwoTermParams<f64>, f64), ConfigError> {
    if !m.wavenumber.is_finite() {
        return Err(ConfigError::new("mode.wavenumber", "must be finite"));
    }
    let params = TwoTermParams::new(m.alpha, m.beta, m.lambda1, m.lambda2)
        .map_err(|e| ConfigError::new("mode", e.to_string()))?;
    Ok((params, m.wavenumber))
}

fn build_source(s: &SourceConfig, dt: f64, nt: usize) -> Result<SourceModel<f64>, ConfigError> {
    if !s.amplitude.is_finite() {
        return Err(ConfigError::new("source.amplitude", "must be finite"));
    }
    let waveform = match s.waveform {
        WaveformConfig::Impulse => Waveform::Impulse,
        WaveformConfig::GaussianPulse { center, width } => {
            if !(width.is_finite() && width > 0.0) {
                return Err(ConfigError::new(
                    "source.waveform.width",
                    format!("must be positive, got {width}"),
                ));
            }
            Waveform::GaussianPulse { center, width }
        }
        WaveformConfig::WindowedSinusoid {
            center,
            width,
            frequency,
        } => {
            if !(width.is_finite() && width > 0.0) {
                return Err(ConfigError::new(
                    "source.waveform.width",
                    format!("must be positive, got {width}"),
                ));
            }
            if !frequency.is_finite() {
                return Err(ConfigError::new("source.waveform.frequency", "must be finite"));
            }
            Waveform::WindowedSinusoid {
                center,
                width,
                omega: frequency,
            }
        }
    };
    waveform
        .validate_support(dt * nt as f64)
        .map_err(|e| ConfigError::new("source.waveform", e.to_string()))?;
    let profile = match s.profile {
        ProfileConfig::Gaussian { center, width } => {
            if !(width.is_finite() && width > 0.0) {
                return Err(ConfigError::new(
                    "source.profile.width",
                    format!("must be positive, got {width}"),
                ));
            }
            SpatialProfile::Gaussian { center, width }
        }
        ProfileConfig::Point { index } => SpatialProfile::Point { index },
        ProfileConfig::Uniform => SpatialProfile::Uniform,
    };
    Ok(SourceModel {
        waveform,
        amplitude: s.amplitude,
        profile,
    })
}

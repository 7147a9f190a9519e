//! Refinement studies: observed convergence orders against an analytic
//! reference (modal Mittag-Leffler kernel, classical d'Alembert solution)
//! or, failing those, the finest computed level.

use serde::Serialize;

use fracwave::mittag::relaxation_kernel;
use fracwave::special::erf;
use fracwave::wavesolver::{MediumResponse, SpatialProfile, Waveform};

use crate::config::{
    validate, ProfileConfig, ScenarioConfig, SolverKind, ValidatedScenario, WaveformConfig,
};
use crate::runner::{execute, RunError};

#[derive(Debug, Clone, Serialize)]
pub struct ConvergenceRow {
    pub dt: f64,
    pub dx: Option<f64>,
    pub error: f64,
    pub observed_order: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConvergenceTable {
    /// Which reference the errors are measured against.
    pub reference: String,
    pub rows: Vec<ConvergenceRow>,
    /// False when the error sequence fails to decrease monotonically.
    pub monotone: bool,
}

/// Runs the scenario at `levels` successive refinements (factor 2 in `dt`,
/// and in `dx` for grid scenarios) and reports errors and observed orders.
pub fn convergence_study(base: &ScenarioConfig, levels: usize) -> Result<ConvergenceTable, RunError> {
    if levels < 2 {
        return Err(RunError::Config(crate::config::ConfigError::new(
            "levels",
            "a convergence study needs at least 2 levels",
        )));
    }
    let base_valid = validate(base.clone())?;
    let reference = ReferenceKind::select(&base_valid);

    let mut scenarios = Vec::with_capacity(levels);
    for level in 0..levels {
        let factor = 1usize << level;
        scenarios.push(validate(refine(base, factor))?);
    }

    let mut solutions = Vec::with_capacity(levels);
    for s in &scenarios {
        solutions.push(execute(s)?);
    }

    // skip the self-similar start-up of the coarsest grid in time-series
    // comparisons
    let t_skip = 10.0 * base_valid.dt;

    let mut errors = Vec::with_capacity(levels);
    match &reference {
        ReferenceKind::ModalKernel { alpha, c } => {
            for (s, out) in scenarios.iter().zip(&solutions) {
                let series = &out.probes[0].1;
                let mut num = 0.0;
                let mut den = 0.0;
                for i in 0..series.len() {
                    let t = series.time(i);
                    if t < t_skip {
                        continue;
                    }
                    let g = relaxation_kernel(*alpha, *c, t).map_err(RunError::Solver)?;
                    let d = series.values()[i] - g;
                    num += d * d;
                    den += g * g;
                }
                errors.push(rel_or_abs(num.sqrt(), den.sqrt()));
                let _ = s;
            }
        }
        ReferenceKind::DAlembert {
            speed,
            scale,
            center,
            width,
        } => {
            for (s, out) in scenarios.iter().zip(&solutions) {
                let (xs, us) = out.snapshot.as_ref().expect("grid scenario has a snapshot");
                let t_end = s.dt * s.nt as f64;
                let mut num = 0.0;
                let mut den = 0.0;
                for (x, u) in xs.iter().zip(us) {
                    let want = dalembert_plateau(*x, t_end, *speed, *scale, *center, *width);
                    let d = u - want;
                    num += d * d;
                    den += want * want;
                }
                errors.push(rel_or_abs(num.sqrt(), den.sqrt()));
            }
        }
        ReferenceKind::FinestLevel => {
            let finest = &solutions[levels - 1].probes[0].1;
            let finest_ratio = 1usize << (levels - 1);
            for (level, out) in solutions.iter().enumerate().take(levels - 1) {
                let series = &out.probes[0].1;
                let stride = finest_ratio >> level;
                let mut num = 0.0;
                let mut den = 0.0;
                for i in 0..series.len() {
                    let t = series.time(i);
                    if t < t_skip {
                        continue;
                    }
                    let fine_idx = i * stride;
                    if fine_idx >= finest.len() {
                        break;
                    }
                    let g = finest.values()[fine_idx];
                    let d = series.values()[i] - g;
                    num += d * d;
                    den += g * g;
                }
                errors.push(rel_or_abs(num.sqrt(), den.sqrt()));
            }
        }
    }

    let mut rows = Vec::with_capacity(errors.len());
    let mut monotone = true;
    for (i, &error) in errors.iter().enumerate() {
        let s = &scenarios[i];
        let observed_order = if i > 0 && errors[i - 1] > 0.0 && error > 0.0 {
            Some((errors[i - 1] / error).log2())
        } else {
            None
        };
        if i > 0 && error >= errors[i - 1] && errors[i - 1] > 0.0 {
            monotone = false;
        }
        rows.push(ConvergenceRow {
            dt: s.dt,
            dx: s.grid.map(|g| g.dx()),
            error,
            observed_order,
        });
    }

    Ok(ConvergenceTable {
        reference: reference.describe(),
        rows,
        monotone,
    })
}

fn rel_or_abs(num: f64, den: f64) -> f64 {
    if den == 0.0 {
        num
    } else {
        num / den
    }
}

enum ReferenceKind {
    /// Single-term modal impulse response `t^{α-1}E_{α,α}(-λ₂k²t^α)`.
    ModalKernel { alpha: f64, c: f64 },
    /// Classical impulse response: spreading plateau bounded by fronts at
    /// `±speed·t` (method of characteristics).
    DAlembert {
        speed: f64,
        scale: f64,
        center: f64,
        width: f64,
    },
    FinestLevel,
}

impl ReferenceKind {
    fn select(s: &ValidatedScenario) -> Self {
        if s.kind == SolverKind::Modal {
            if let Some((p, k)) = &s.mode {
                let impulse = matches!(s.source.waveform, Waveform::Impulse);
                if p.lambda1 == 0.0 && impulse && s.source.amplitude == 1.0 && p.lambda2 * k * k > 0.0
                {
                    return ReferenceKind::ModalKernel {
                        alpha: p.alpha,
                        c: p.lambda2 * k * k,
                    };
                }
            }
            return ReferenceKind::FinestLevel;
        }
        if s.kind == SolverKind::Electric {
            let medium = s.medium.as_ref().expect("grid scenario");
            let classical = matches!(medium.response(), MediumResponse::Classical)
                || matches!(medium.response(), MediumResponse::High { chi_alpha, .. } if chi_alpha == 0.0);
            if classical {
                if let (Waveform::Impulse, SpatialProfile::Gaussian { center, width }) =
                    (s.source.waveform, s.source.profile)
                {
                    // (1/v²)∂ₜ²u − ∂ₓ²u = −μ·amp·S(x)δ(t)
                    //   ⟹ ∂ₜ²u = v²∂ₓ²u − v²μ·amp·S(x)δ(t)
                    let v = medium.v_squared().sqrt();
                    let scale = -medium.v_squared() * medium.mu() * s.source.amplitude;
                    return ReferenceKind::DAlembert {
                        speed: v,
                        scale,
                        center,
                        width,
                    };
                }
            }
        }
        ReferenceKind::FinestLevel
    }

    fn describe(&self) -> String {
        match self {
            ReferenceKind::ModalKernel { alpha, c } => {
                format!("modal relaxation kernel (alpha = {alpha}, rate = {c})")
            }
            ReferenceKind::DAlembert { speed, .. } => {
                format!("classical characteristics reference (speed = {speed})")
            }
            ReferenceKind::FinestLevel => "finest computed level".into(),
        }
    }
}

/// `u(t, x) = scale/(2c) · ∫_{x-ct}^{x+ct} S(ξ) dξ` for a Gaussian footprint
/// `S`, written with error functions.
fn dalembert_plateau(x: f64, t: f64, speed: f64, scale: f64, center: f64, width: f64) -> f64 {
    let sqrt2 = std::f64::consts::SQRT_2;
    let hi = (x + speed * t - center) / (width * sqrt2);
    let lo = (x - speed * t - center) / (width * sqrt2);
    let integral = width * (std::f64::consts::PI / 2.0).sqrt() * (erf(hi) - erf(lo));
    scale / (2.0 * speed) * integral
}

/// Halves the step sizes (and scales step counts, grid resolution and
/// index-addressed source/probe locations) by `factor`.
fn refine(base: &ScenarioConfig, factor: usize) -> ScenarioConfig {
    let mut cfg = base.clone();
    cfg.dt /= factor as f64;
    cfg.nt *= factor;
    if let Some(max_dt) = cfg.max_stable_dt {
        // the configured bound applies to the base level; refined levels only
        // shrink dt
        let _ = max_dt;
    }
    if cfg.solver != SolverKind::Modal {
        if let Some(grid) = &mut cfg.grid {
            grid.nx *= factor;
            grid.dx /= factor as f64;
        }
        for p in &mut cfg.probes {
            *p *= factor;
        }
        if let ProfileConfig::Point { index } = &mut cfg.source.profile {
            *index *= factor;
        }
    }
    if let WaveformConfig::Impulse = cfg.source.waveform {
        // nothing to scale
    }
    cfg
}

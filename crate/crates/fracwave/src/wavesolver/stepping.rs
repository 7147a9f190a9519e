//! Explicit Grünwald-Letnikov steppers for the two-term fractional field
//! equation, the regime-form electric equations and per-mode reductions.

use crate::fraccalc::{gl_weights, FracOrder};
use crate::scalar::{cast, Real};
use crate::signal::SampledSignal;
use crate::{Error, Result};

use super::source::{SeparableSource, SourceCoupling, SourceModel};
use super::{Boundary, FieldState, Grid1D, MediumParams, MediumResponse, TwoTermParams};

/// Run-time solver knobs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveOptions<F: Real> {
    /// Truncate every Grünwald-Letnikov history sum to the most recent
    /// `window` samples (flagged approximation; see
    /// [`windowed_history_bound`]).
    pub history_window: Option<usize>,
    /// Field magnitude that counts as a blow-up.
    pub blowup_threshold: F,
}

impl<F: Real> Default for SolveOptions<F> {
    fn default() -> Self {
        Self {
            history_window: None,
            blowup_threshold: cast(1e30),
        }
    }
}

/// One time-fractional term `a·D^q` of an explicit update, with its weights
/// precomputed to the run length.
#[derive(Debug, Clone)]
struct FractionalTerm<F: Real> {
    /// `a · dt^{-q}`
    scaled_coeff: F,
    weights: Vec<F>,
    effective_len: usize,
}

/// Shared explicit stepper: solves
/// `Σ_j a_j D^{q_j} u − lap_coeff·∇²u = f` for the newest sample, with the
/// Laplacian and source taken at the previous level.
#[derive(Debug, Clone)]
struct ExplicitStepper<F: Real> {
    terms: Vec<FractionalTerm<F>>,
    lap_coeff: F,
    denom: F,
    window: Option<usize>,
    blowup: F,
}

impl<F: Real> ExplicitStepper<F> {
    fn new(
        orders: &[(F, F)], // (coefficient a, order q); zero coefficients dropped
        lap_coeff: F,
        dt: F,
        nt: usize,
        opts: &SolveOptions<F>,
    ) -> Result<Self> {
        if !(dt.is_finite() && dt > F::zero()) {
            return Err(Error::InvalidParameter(format!(
                "timestep must be positive, got {dt}"
            )));
        }
        if nt == 0 {
            return Err(Error::InvalidParameter("need at least one step".into()));
        }
        if let Some(w) = opts.history_window {
            if w == 0 {
                return Err(Error::InvalidWindow("history window must be positive".into()));
            }
        }
        if opts.blowup_threshold.is_nan() || opts.blowup_threshold <= F::zero() {
            return Err(Error::InvalidParameter(
                "blow-up threshold must be positive".into(),
            ));
        }
        let mut terms = Vec::new();
        let mut denom = F::zero();
        for &(a, q) in orders {
            if a == F::zero() {
                continue;
            }
            let order = FracOrder::new(q)?;
            let weights = gl_weights(order, nt);
            let scaled = a * dt.powf(-q);
            if !scaled.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "dt^(-{q}) overflows for dt = {dt}"
                )));
            }
            denom += scaled;
            let effective_len = weights.effective_len();
            terms.push(FractionalTerm {
                scaled_coeff: scaled,
                weights: weights.weights().to_vec(),
                effective_len,
            });
        }
        if denom == F::zero() || !denom.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "explicit update is singular: leading coefficient {denom} (dt too large for this parameter family?)"
            )));
        }
        Ok(Self {
            terms,
            lap_coeff,
            denom,
            window: opts.history_window,
            blowup: opts.blowup_threshold,
        })
    }

    /// History depth available for the sum producing level `n`.
    fn depth(&self, n: usize, effective_len: usize) -> usize {
        let mut kmax = n.min(effective_len.saturating_sub(1));
        if let Some(w) = self.window {
            kmax = kmax.min(w.saturating_sub(1));
        }
        kmax
    }

    /// Advances a grid state by one level.
    fn step_grid(&self, state: &mut FieldState<F>) -> Result<()> {
        let n = state.n_levels(); // producing level n
        let grid = state.grid();
        let nx = grid.nx();
        let mut new_level = vec![F::zero(); nx];

        // source + Laplacian at level n-1
        let prev = state.level(n - 1);
        let inv_dx2 = (grid.dx() * grid.dx()).recip();
        for (i, slot) in new_level.iter_mut().enumerate() {
            let lap = match grid.boundary() {
                Boundary::Periodic => {
                    let left = prev[(i + nx - 1) % nx];
                    let right = prev[(i + 1) % nx];
                    (left - prev[i] - prev[i] + right) * inv_dx2
                }
                Boundary::FixedZero => {
                    let left = if i > 0 { prev[i - 1] } else { F::zero() };
                    let right = if i + 1 < nx { prev[i + 1] } else { F::zero() };
                    (left - prev[i] - prev[i] + right) * inv_dx2
                }
            };
            *slot = self.lap_coeff * lap + state.source().eval(n - 1, i);
        }

        // subtract the weighted history of every fractional term
        for term in &self.terms {
            let kmax = self.depth(n, term.effective_len);
            for k in 1..=kmax {
                let w = term.weights[k];
                if w == F::zero() {
                    continue;
                }
                let coeff = term.scaled_coeff * w;
                let past = state.level(n - k);
                for (slot, &p) in new_level.iter_mut().zip(past) {
                    *slot -= coeff * p;
                }
            }
        }

        let mut max_mag = F::zero();
        for slot in new_level.iter_mut() {
            *slot /= self.denom;
            max_mag = max_mag.max(slot.abs());
        }
        if max_mag.is_nan() || max_mag > self.blowup {
            return Err(Error::Instability {
                step: n,
                magnitude: max_mag.to_f64().unwrap_or(f64::NAN),
                threshold: self.blowup.to_f64().unwrap_or(f64::NAN),
            });
        }
        state.push_level(new_level);
        Ok(())
    }

    /// Advances a scalar modal state (`∇² → −k²`) by one level.
    fn step_modal(&self, history: &mut Vec<F>, k_sq: F, source: &SeparableSource<F>) -> Result<()> {
        let n = history.len();
        let prev = history[n - 1];
        let mut acc = -self.lap_coeff * k_sq * prev + source.eval(n - 1, 0);
        for term in &self.terms {
            let kmax = self.depth(n, term.effective_len);
            let mut hist_sum = F::zero();
            for k in 1..=kmax {
                hist_sum += term.weights[k] * history[n - k];
            }
            acc -= term.scaled_coeff * hist_sum;
        }
        let u = acc / self.denom;
        if u.is_nan() || u.abs() > self.blowup {
            return Err(Error::Instability {
                step: n,
                magnitude: u.abs().to_f64().unwrap_or(f64::NAN),
                threshold: self.blowup.to_f64().unwrap_or(f64::NAN),
            });
        }
        history.push(u);
        Ok(())
    }
}

/// Stepper for the two-term normal form `D^α u − λ₁ D^β u − λ₂∇²u = f`.
#[derive(Debug, Clone)]
pub struct TwoTermSolver<F: Real> {
    params: TwoTermParams<F>,
    stepper: ExplicitStepper<F>,
    dt: F,
    nt: usize,
}

impl<F: Real> TwoTermSolver<F> {
    pub fn new(params: TwoTermParams<F>, dt: F, nt: usize, opts: &SolveOptions<F>) -> Result<Self> {
        let orders = [
            (F::one(), params.alpha),
            (-params.lambda1, params.beta),
        ];
        let stepper = ExplicitStepper::new(&orders, params.lambda2, dt, nt, opts)?;
        Ok(Self {
            params,
            stepper,
            dt,
            nt,
        })
    }

    pub fn params(&self) -> TwoTermParams<F> {
        self.params
    }

    /// Advances the state by one time level.
    pub fn step(&self, state: &mut FieldState<F>) -> Result<()> {
        self.stepper.step_grid(state)
    }

    /// Runs the full schedule from a fresh zero-history state.
    pub fn run(&self, grid: Grid1D<F>, source: SeparableSource<F>) -> Result<FieldState<F>> {
        let mut state = FieldState::new(grid, self.dt, source)?;
        for _ in 0..self.nt {
            self.step(&mut state)?;
        }
        Ok(state)
    }
}

/// Drives the two-term equation on a grid with the effective source
/// `f = amp·g(t)·s(x)` (direct coupling).
pub fn solve_two_term<F: Real>(
    params: TwoTermParams<F>,
    grid: Grid1D<F>,
    src: &SourceModel<F>,
    dt: F,
    nt: usize,
    opts: &SolveOptions<F>,
) -> Result<FieldState<F>> {
    let solver = TwoTermSolver::new(params, dt, nt, opts)?;
    let source = SeparableSource::build(src, SourceCoupling::Direct, &grid, dt, nt)?;
    solver.run(grid, source)
}

/// Evolves one spatial Fourier mode of the two-term equation,
/// `D^α u − λ₁ D^β u + λ₂ k² u = f_k(t)`, and returns the mode amplitude
/// history. The source's spatial profile plays no role here; its waveform
/// provides `f_k`.
pub fn solve_modal<F: Real>(
    params: TwoTermParams<F>,
    wavenumber: F,
    src: &SourceModel<F>,
    dt: F,
    nt: usize,
    opts: &SolveOptions<F>,
) -> Result<SampledSignal<F>> {
    let orders = [
        (F::one(), params.alpha),
        (-params.lambda1, params.beta),
    ];
    let stepper = ExplicitStepper::new(&orders, params.lambda2, dt, nt, opts)?;
    let source = SeparableSource::build_modal(src, dt, nt)?;
    let k_sq = wavenumber * wavenumber;
    let mut history = Vec::with_capacity(nt + 1);
    history.push(F::zero());
    for _ in 0..nt {
        stepper.step_modal(&mut history, k_sq, &source)?;
    }
    SampledSignal::new(F::zero(), dt, history)
}

/// Evolves the transverse electric field under the regime equation in its
/// original form: `(1/v²)D²E + (χ_α/v²)D^{2-α}E − ∂ₓ²E = −μ ∂j/∂t`
/// (high regime), `(1/v_β²)D²E − (a_β/v_β²)D^{2+β}E − ∂ₓ²E = −μ ∂j/∂t`
/// (low regime), or the classical wave equation.
pub fn solve_electric<F: Real>(
    medium: &MediumParams<F>,
    grid: Grid1D<F>,
    src: &SourceModel<F>,
    dt: F,
    nt: usize,
    opts: &SolveOptions<F>,
) -> Result<FieldState<F>> {
    let two = cast::<F>(2.0);
    let orders: Vec<(F, F)> = match medium.response() {
        MediumResponse::Classical => {
            vec![(medium.v_squared().recip(), two)]
        }
        MediumResponse::High { chi_alpha, alpha } => {
            let inv_v2 = medium.v_squared().recip();
            vec![(inv_v2, two), (chi_alpha * inv_v2, two - alpha)]
        }
        MediumResponse::Low { beta, .. } => {
            let inv_vb2 = medium.v_beta_squared().recip();
            let a_beta = medium.a_beta().expect("low response has a_beta");
            vec![(inv_vb2, two), (-a_beta * inv_vb2, two + beta)]
        }
    };
    let stepper = ExplicitStepper::new(&orders, F::one(), dt, nt, opts)?;
    let source = SeparableSource::build(
        src,
        SourceCoupling::ElectricCurrentDerivative { mu: medium.mu() },
        &grid,
        dt,
        nt,
    )?;
    let mut state = FieldState::new(grid, dt, source)?;
    for _ in 0..nt {
        stepper.step_grid(&mut state)?;
    }
    Ok(state)
}

/// Evolves the transverse magnetic field component by routing through the
/// two-term normal form of the appropriate regime, with the source
/// `f = μλ₂ ∂ₓ j`.
pub fn solve_magnetic<F: Real>(
    medium: &MediumParams<F>,
    grid: Grid1D<F>,
    src: &SourceModel<F>,
    dt: F,
    nt: usize,
    opts: &SolveOptions<F>,
) -> Result<FieldState<F>> {
    let params = super::magnetic_params(medium)?;
    let solver = TwoTermSolver::new(params, dt, nt, opts)?;
    let source = SeparableSource::build(
        src,
        SourceCoupling::MagneticCurl {
            mu: medium.mu(),
            lambda2: params.lambda2,
        },
        &grid,
        dt,
        nt,
    )?;
    solver.run(grid, source)
}

/// A-priori sup-norm bound on the error introduced by truncating every
/// history sum of an explicit run to `window` samples:
/// `Σ_j |a_j| dt^{-q_j} · sup|u| · Σ_{k=window..nt-1} |w_k(q_j)|`,
/// divided by the magnitude of the update's leading coefficient to express
/// it in field units per step.
pub fn windowed_history_bound<F: Real>(
    orders: &[(F, F)],
    dt: F,
    nt: usize,
    window: usize,
    sup_norm: F,
) -> Result<F> {
    if window == 0 {
        return Err(Error::InvalidWindow("window must be positive".into()));
    }
    let mut dropped = F::zero();
    let mut leading = F::zero();
    for &(a, q) in orders {
        if a == F::zero() {
            continue;
        }
        let weights = gl_weights(FracOrder::new(q)?, nt);
        let tail = weights
            .weights()
            .iter()
            .take(nt)
            .skip(window)
            .fold(F::zero(), |acc, &w| acc + w.abs());
        dropped += a.abs() * dt.powf(-q) * sup_norm * tail;
        leading += a * dt.powf(-q);
    }
    if leading == F::zero() {
        return Ok(F::zero());
    }
    Ok(dropped / leading.abs())
}

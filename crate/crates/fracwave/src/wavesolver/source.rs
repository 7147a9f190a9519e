//! Current-density source models and their precomputed separable
//! realizations.
//!
//! A source is `j(t, x) = amplitude · g(t) · s(x)` with a compactly
//! supported waveform `g`. Each solver consumes a derived term:
//!
//! - electric field: `f = −μ ∂j/∂t`, so the time factor is `−μ·amp·ġ(t)`;
//! - magnetic field: `f = μλ₂ (curl j)`, in this geometry `μλ₂·amp·g(t)·s′(x)`;
//! - the two-term/modal drivers take `f = amp·g(t)·s(x)` directly.
//!
//! The idealized impulse deposits its entire unit time-integral in step 0
//! (time factor `amp/dt`, scaled by the coupling constant), which makes the
//! discrete Green's-function experiments reproducible.

use crate::scalar::{cast, Real};
use crate::{Error, Result};

use super::Grid1D;

/// Time profile of a source. Gaussian tails are truncated beyond eight
/// widths so every waveform is exactly compactly supported.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Waveform<F: Real> {
    GaussianPulse { center: F, width: F },
    WindowedSinusoid { center: F, width: F, omega: F },
    Impulse,
}

impl<F: Real> Waveform<F> {
    const GAUSSIAN_CUTOFF: f64 = 8.0;

    pub fn eval(&self, t: F) -> F {
        match *self {
            Waveform::GaussianPulse { center, width } => {
                let u = (t - center) / width;
                if u.abs() > cast(Self::GAUSSIAN_CUTOFF) {
                    F::zero()
                } else {
                    (-u * u / cast(2.0)).exp()
                }
            }
            Waveform::WindowedSinusoid {
                center,
                width,
                omega,
            } => {
                let u = (t - center) / width + cast(0.5);
                if u < F::zero() || u > F::one() {
                    F::zero()
                } else {
                    let hann = cast::<F>(0.5) * (F::one() - (cast::<F>(2.0) * F::PI() * u).cos());
                    (omega * (t - center)).sin() * hann
                }
            }
            Waveform::Impulse => F::zero(),
        }
    }

    /// Analytic time derivative (zero for the impulse, whose derivative has
    /// no sampled meaning).
    pub fn eval_derivative(&self, t: F) -> F {
        match *self {
            Waveform::GaussianPulse { center, width } => {
                let u = (t - center) / width;
                if u.abs() > cast(Self::GAUSSIAN_CUTOFF) {
                    F::zero()
                } else {
                    -(u / width) * (-u * u / cast(2.0)).exp()
                }
            }
            Waveform::WindowedSinusoid {
                center,
                width,
                omega,
            } => {
                let u = (t - center) / width + cast(0.5);
                if u < F::zero() || u > F::one() {
                    F::zero()
                } else {
                    let two_pi = cast::<F>(2.0) * F::PI();
                    let hann = cast::<F>(0.5) * (F::one() - (two_pi * u).cos());
                    let dhann = F::PI() * (two_pi * u).sin() / width;
                    omega * (omega * (t - center)).cos() * hann
                        + (omega * (t - center)).sin() * dhann
                }
            }
            Waveform::Impulse => F::zero(),
        }
    }

    /// Checks compact support within `[0, t_end]`.
    pub fn validate_support(&self, t_end: F) -> Result<()> {
        let (lo, hi) = match *self {
            Waveform::GaussianPulse { center, width } => {
                if !(width.is_finite() && width > F::zero()) {
                    return Err(Error::InvalidParameter(format!(
                        "waveform width must be positive, got {width}"
                    )));
                }
                let reach = width * cast(Self::GAUSSIAN_CUTOFF);
                (center - reach, center + reach)
            }
            Waveform::WindowedSinusoid { center, width, .. } => {
                if !(width.is_finite() && width > F::zero()) {
                    return Err(Error::InvalidParameter(format!(
                        "waveform width must be positive, got {width}"
                    )));
                }
                let half = width / cast(2.0);
                (center - half, center + half)
            }
            Waveform::Impulse => return Ok(()),
        };
        if lo < F::zero() || hi > t_end {
            return Err(Error::InvalidParameter(format!(
                "waveform support [{lo}, {hi}] must lie inside the run window [0, {t_end}]"
            )));
        }
        Ok(())
    }
}

/// Spatial footprint of a source. `Point` deposits into a single cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpatialProfile<F: Real> {
    Gaussian { center: F, width: F },
    Point { index: usize },
    Uniform,
}

impl<F: Real> SpatialProfile<F> {
    fn eval(&self, grid: &Grid1D<F>) -> Result<Vec<F>> {
        let nx = grid.nx();
        match *self {
            SpatialProfile::Gaussian { center, width } => {
                if !(width.is_finite() && width > F::zero()) {
                    return Err(Error::InvalidParameter(format!(
                        "profile width must be positive, got {width}"
                    )));
                }
                Ok((0..nx)
                    .map(|i| {
                        let u = (grid.position(i) - center) / width;
                        if u.abs() > cast(8.0) {
                            F::zero()
                        } else {
                            (-u * u / cast(2.0)).exp()
                        }
                    })
                    .collect())
            }
            SpatialProfile::Point { index } => {
                if index >= nx {
                    return Err(Error::InvalidParameter(format!(
                        "point-source index {index} outside grid of {nx} points"
                    )));
                }
                let mut s = vec![F::zero(); nx];
                s[index] = F::one();
                Ok(s)
            }
            SpatialProfile::Uniform => Ok(vec![F::one(); nx]),
        }
    }

    /// Spatial derivative of the profile: analytic for the Gaussian, a
    /// centered dipole stencil for the point deposit, zero for uniform.
    fn eval_derivative(&self, grid: &Grid1D<F>) -> Result<Vec<F>> {
        let nx = grid.nx();
        match *self {
            SpatialProfile::Gaussian { center, width } => {
                if !(width.is_finite() && width > F::zero()) {
                    return Err(Error::InvalidParameter(format!(
                        "profile width must be positive, got {width}"
                    )));
                }
                Ok((0..nx)
                    .map(|i| {
                        let u = (grid.position(i) - center) / width;
                        if u.abs() > cast(8.0) {
                            F::zero()
                        } else {
                            -(u / width) * (-u * u / cast(2.0)).exp()
                        }
                    })
                    .collect())
            }
            SpatialProfile::Point { index } => {
                if index >= nx {
                    return Err(Error::InvalidParameter(format!(
                        "point-source index {index} outside grid of {nx} points"
                    )));
                }
                let mut s = vec![F::zero(); nx];
                let half = (cast::<F>(2.0) * grid.dx()).recip();
                match grid.boundary() {
                    super::Boundary::Periodic => {
                        s[(index + nx - 1) % nx] = half;
                        s[(index + 1) % nx] = -half;
                    }
                    super::Boundary::FixedZero => {
                        if index > 0 {
                            s[index - 1] = half;
                        }
                        if index + 1 < nx {
                            s[index + 1] = -half;
                        }
                    }
                }
                Ok(s)
            }
            SpatialProfile::Uniform => Ok(vec![F::zero(); nx]),
        }
    }
}

/// Full source description.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SourceModel<F: Real> {
    pub waveform: Waveform<F>,
    pub amplitude: F,
    pub profile: SpatialProfile<F>,
}

/// How a solver derives its effective source term from the current density.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SourceCoupling<F: Real> {
    /// `f = amp·g(t)·s(x)` — the two-term and modal drivers.
    Direct,
    /// `f = −μ ∂j/∂t` — electric field equations.
    ElectricCurrentDerivative { mu: F },
    /// `f = μλ₂ ∂ₓ j` — magnetic field equations (transverse curl).
    MagneticCurl { mu: F, lambda2: F },
}

/// Precomputed separable source: `f(t_n, x_i) = time[n] · space[i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeparableSource<F: Real> {
    time_factors: Vec<F>,
    space_factors: Vec<F>,
}

impl<F: Real> SeparableSource<F> {
    /// Builds the effective source rows for `nt` steps of size `dt` on the
    /// grid, under the given coupling.
    pub fn build(
        model: &SourceModel<F>,
        coupling: SourceCoupling<F>,
        grid: &Grid1D<F>,
        dt: F,
        nt: usize,
    ) -> Result<Self> {
        if !model.amplitude.is_finite() {
            return Err(Error::InvalidParameter("source amplitude must be finite".into()));
        }
        let t_end = dt * cast(nt as f64);
        model.waveform.validate_support(t_end)?;

        let scale = match coupling {
            SourceCoupling::Direct => F::one(),
            SourceCoupling::ElectricCurrentDerivative { mu } => -mu,
            SourceCoupling::MagneticCurl { mu, lambda2 } => mu * lambda2,
        };
        let mut time_factors = vec![F::zero(); nt.max(1)];
        match model.waveform {
            Waveform::Impulse => {
                // unit time-integral, deposited entirely in step 0
                time_factors[0] = scale * model.amplitude / dt;
            }
            ref wf => {
                let differentiate =
                    matches!(coupling, SourceCoupling::ElectricCurrentDerivative { .. });
                for (n, slot) in time_factors.iter_mut().enumerate() {
                    let t = dt * cast(n as f64);
                    let g = if differentiate {
                        wf.eval_derivative(t)
                    } else {
                        wf.eval(t)
                    };
                    *slot = scale * model.amplitude * g;
                }
            }
        }

        let space_factors = match coupling {
            SourceCoupling::MagneticCurl { .. } => model.profile.eval_derivative(grid)?,
            _ => model.profile.eval(grid)?,
        };
        Ok(Self {
            time_factors,
            space_factors,
        })
    }

    /// Scalar variant for modal solves: the spatial factor is the caller's
    /// modal projection (defaults to 1).
    pub fn build_modal(model: &SourceModel<F>, dt: F, nt: usize) -> Result<Self> {
        if !model.amplitude.is_finite() {
            return Err(Error::InvalidParameter("source amplitude must be finite".into()));
        }
        let t_end = dt * cast(nt as f64);
        model.waveform.validate_support(t_end)?;
        let mut time_factors = vec![F::zero(); nt.max(1)];
        match model.waveform {
            Waveform::Impulse => time_factors[0] = model.amplitude / dt,
            ref wf => {
                for (n, slot) in time_factors.iter_mut().enumerate() {
                    *slot = model.amplitude * wf.eval(dt * cast(n as f64));
                }
            }
        }
        Ok(Self {
            time_factors,
            space_factors: vec![F::one()],
        })
    }

    /// Effective source at step `n`, grid index `i`.
    #[inline]
    pub fn eval(&self, n: usize, i: usize) -> F {
        if n >= self.time_factors.len() {
            return F::zero();
        }
        self.time_factors[n] * self.space_factors[i]
    }

    pub fn time_factor(&self, n: usize) -> F {
        self.time_factors.get(n).copied().unwrap_or(F::zero())
    }

    pub fn space_factors(&self) -> &[F] {
        &self.space_factors
    }

    /// All-zero source on `nx` points.
    pub fn silent(nx: usize) -> Self {
        Self {
            time_factors: vec![F::zero()],
            space_factors: vec![F::zero(); nx],
        }
    }

    #[cfg(test)]
    pub(crate) fn from_raw_parts(time_factors: Vec<F>, space_factors: Vec<F>) -> Self {
        Self {
            time_factors,
            space_factors,
        }
    }
}

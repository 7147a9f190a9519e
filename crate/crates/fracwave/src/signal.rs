//! Uniformly sampled real time series — the common currency of all
//! time-domain operators in this crate.

use crate::scalar::{cast_usize, Real};
use crate::{Error, Result};

/// A uniformly sampled real signal: start time, positive sample spacing and
/// at least one finite sample. Field units are carried by the caller.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledSignal<F: Real> {
    t0: F,
    dt: F,
    values: Vec<F>,
}

impl<F: Real> SampledSignal<F> {
    pub fn new(t0: F, dt: F, values: Vec<F>) -> Result<Self> {
        if !t0.is_finite() {
            return Err(Error::InvalidSignal("start time must be finite".into()));
        }
        if !(dt.is_finite() && dt > F::zero()) {
            return Err(Error::InvalidSignal(format!(
                "sample spacing must be finite and positive, got {dt}"
            )));
        }
        if values.is_empty() {
            return Err(Error::InvalidSignal("signal must hold at least one sample".into()));
        }
        if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::InvalidSignal(format!("non-finite sample {bad}")));
        }
        Ok(Self { t0, dt, values })
    }

    /// Samples `f` on the uniform grid `t0 + i·dt`, `i = 0..n`.
    pub fn from_fn(t0: F, dt: F, n: usize, f: impl Fn(F) -> F) -> Result<Self> {
        let values = (0..n).map(|i| f(t0 + dt * cast_usize(i))).collect();
        Self::new(t0, dt, values)
    }

    pub fn t0(&self) -> F {
        self.t0
    }

    pub fn dt(&self) -> F {
        self.dt
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false // the constructor rejects empty signals
    }

    /// Time of the i-th sample.
    pub fn time(&self, i: usize) -> F {
        self.t0 + self.dt * cast_usize(i)
    }

    pub fn values(&self) -> &[F] {
        &self.values
    }

    pub fn into_values(self) -> Vec<F> {
        self.values
    }

    /// Largest absolute sample value.
    pub fn sup_norm(&self) -> F {
        self.values
            .iter()
            .fold(F::zero(), |acc, v| acc.max(v.abs()))
    }

    /// Replaces the sample data, keeping the grid. Lengths must match.
    pub fn with_values(&self, values: Vec<F>) -> Result<Self> {
        if values.len() != self.values.len() {
            return Err(Error::InvalidSignal(format!(
                "replacement length {} does not match grid length {}",
                values.len(),
                self.values.len()
            )));
        }
        Self::new(self.t0, self.dt, values)
    }

    /// Pointwise linear combination `a·self + b·other` on a shared grid.
    pub fn linear_combination(&self, a: F, other: &Self, b: F) -> Result<Self> {
        if self.len() != other.len() || self.dt != other.dt || self.t0 != other.t0 {
            return Err(Error::InvalidSignal(
                "linear combination requires identical grids".into(),
            ));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&x, &y)| a * x + b * y)
            .collect();
        Self::new(self.t0, self.dt, values)
    }
}

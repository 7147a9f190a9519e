//! Fractional-order time-domain electromagnetics for dielectrics whose
//! susceptibility follows the universal power-law response.
//!
//! The crate is organized around uniformly sampled real signals and a small
//! set of fractional-calculus building blocks:
//!
//! - [`fraccalc`] — discrete fractional integro-differentiation of arbitrary
//!   real order via the Grünwald-Letnikov weighted history sum, with
//!   windowed-history variants and truncation-error bounds.
//! - [`mittag`] — evaluation of the two-parameter Mittag-Leffler function
//!   `E_{α,β}(z)` and the fractional relaxation kernel built from it.
//! - [`susceptibility`] — frequency-domain power-law susceptibility models
//!   for the high- and low-frequency regimes and their frequency-independent
//!   loss-ratio identities.
//! - [`polarization`] — time-domain polarization operators driven by the
//!   fractional operators, plus an independent FFT-based spectral oracle.
//! - [`wavesolver`] — explicit Grünwald-Letnikov time stepping for the
//!   fractional wave equations on 1-D transverse grids and per-wavenumber
//!   modal reductions.
//!
//! All numerical kernels are generic over the floating-point scalar through
//! the [`scalar::Real`] trait; `f64` aliases for the main types are exported
//! at the crate root.

pub mod dft;
pub mod fraccalc;
pub mod mittag;
pub mod polarization;
pub mod scalar;
pub mod signal;
pub mod special;
pub mod susceptibility;
pub mod wavesolver;

pub use scalar::{cast, Real};
pub use signal::SampledSignal;

/// Errors shared by all numerical modules.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid fractional order: {0}")]
    InvalidOrder(String),
    #[error("invalid signal: {0}")]
    InvalidSignal(String),
    #[error("invalid model parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid history window: {0}")]
    InvalidWindow(String),
    #[error("evaluation did not converge: {0}")]
    NonConvergence(String),
    #[error("solver instability detected at step {step}: field magnitude {magnitude} exceeded threshold {threshold}")]
    Instability {
        step: usize,
        magnitude: f64,
        threshold: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

// Concrete aliases for the common double-precision instantiation.
pub type SampledSignal64 = signal::SampledSignal<f64>;
pub type FracOrder64 = fraccalc::FracOrder<f64>;
pub type MlParams64 = mittag::MlParams<f64>;
pub type HighFreqModel64 = susceptibility::HighFreqModel<f64>;
pub type LowFreqModel64 = susceptibility::LowFreqModel<f64>;
pub type TwoTermParams64 = wavesolver::TwoTermParams<f64>;
pub type MediumParams64 = wavesolver::MediumParams<f64>;
pub type FieldState64 = wavesolver::FieldState<f64>;

//! Discrete Fourier transform helpers shared by the spectral polarization
//! oracle and the spectrum analysis front end.
//!
//! Conventions match the rest of the crate: the continuous transform is
//! `F f(ω) = ∫ f(t) e^{-iωt} dt`, approximated on a length-`n` grid by
//! `dt · e^{-iω t0} · Σ_k x_k e^{-2πi mk/n}` at the signed bin frequencies
//! `ω_m = 2π m̃ / (n·dt)` with `m̃ ∈ [-n/2, n/2)`.

use num_complex::Complex;
use rustfft::{FftNum, FftPlanner};

use crate::scalar::{cast, cast_usize, Real};

/// Scalar usable by the FFT paths.
pub trait FftScalar: Real + FftNum {}
impl<T: Real + FftNum> FftScalar for T {}

/// Unnormalized forward DFT.
pub fn dft_forward<F: FftScalar>(x: &mut [Complex<F>]) {
    FftPlanner::new().plan_fft_forward(x.len()).process(x);
}

/// Unnormalized inverse DFT; divide by the length to invert
/// [`dft_forward`].
pub fn dft_inverse<F: FftScalar>(x: &mut [Complex<F>]) {
    FftPlanner::new().plan_fft_inverse(x.len()).process(x);
}

/// Signed bin frequency of bin `m` for an `n`-point transform at spacing
/// `dt`, in radians per second.
pub fn bin_frequency<F: Real>(m: usize, n: usize, dt: F) -> F {
    let signed = if m <= (n - 1) / 2 {
        m as i64
    } else {
        m as i64 - n as i64
    };
    let two_pi = F::PI() + F::PI();
    two_pi * cast::<F>(signed as f64) / (cast_usize::<F>(n) * dt)
}

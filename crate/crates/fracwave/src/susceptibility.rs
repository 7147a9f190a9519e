//! Frequency-domain models of the universal dielectric response: the two
//! Jonscher power-law regimes and their frequency-independent ratio
//! identities.
//!
//! With the convention `χ̃(ω) = χ′(ω) − iχ″(ω)` and the branch
//! `(iω)^q = |ω|^q · exp(i·q·π·sgn(ω)/2)`:
//!
//! - high-frequency regime: `χ̃(ω) = χ_α (iω)^{-α}`, so `χ″/χ′ = tan(απ/2)
//!   = cot(nπ/2)` with `n = 1 − α`, independent of frequency;
//! - low-frequency regime: `χ̃(ω) = χ̃(0) − χ_β (iω)^β`, so
//!   `χ″/(χ′(0) − χ′(ω)) = tan(βπ/2)`, again frequency-independent.
//!
//! The Fourier convention throughout the crate is
//! `F f(ω) = ∫ f(t) e^{-iωt} dt`, under which the `(iω)^q` multipliers above
//! correspond to the causal fractional operators of [`crate::fraccalc`].
//! `ω` is in radians per second and the amplitudes absorb any reference
//! normalization. For negative frequencies both models satisfy the reality
//! condition `χ′(-ω) = χ′(ω)`, `χ″(-ω) = -χ″(ω)`.

use num_complex::Complex;

use crate::scalar::Real;
use crate::{Error, Result};

/// High-frequency power-law model `χ̃(ω) = χ_α (iω)^{-α}` with `α = 1 − n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HighFreqModel<F: Real> {
    chi_alpha: F,
    alpha: F,
}

impl<F: Real> HighFreqModel<F> {
    pub fn new(chi_alpha: F, alpha: F) -> Result<Self> {
        if !(chi_alpha.is_finite() && chi_alpha > F::zero()) {
            return Err(Error::InvalidParameter(format!(
                "chi_alpha must be positive, got {chi_alpha}"
            )));
        }
        if !(alpha.is_finite() && alpha > F::zero() && alpha < F::one()) {
            return Err(Error::InvalidParameter(format!(
                "alpha must lie in (0, 1), got {alpha}"
            )));
        }
        Ok(Self { chi_alpha, alpha })
    }

    pub fn chi_alpha(&self) -> F {
        self.chi_alpha
    }

    pub fn alpha(&self) -> F {
        self.alpha
    }
}

/// Low-frequency model `χ̃(ω) = χ̃(0) − χ_β (iω)^β` with `β = m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LowFreqModel<F: Real> {
    chi_zero: F,
    chi_beta: F,
    beta: F,
}

impl<F: Real> LowFreqModel<F> {
    pub fn new(chi_zero: F, chi_beta: F, beta: F) -> Result<Self> {
        if !(chi_zero.is_finite() && chi_zero > F::zero()) {
            return Err(Error::InvalidParameter(format!(
                "static susceptibility must be positive, got {chi_zero}"
            )));
        }
        if !(chi_beta.is_finite() && chi_beta > F::zero()) {
            return Err(Error::InvalidParameter(format!(
                "chi_beta must be positive, got {chi_beta}"
            )));
        }
        if !(beta.is_finite() && beta > F::zero() && beta < F::one()) {
            return Err(Error::InvalidParameter(format!(
                "beta must lie in (0, 1), got {beta}"
            )));
        }
        Ok(Self {
            chi_zero,
            chi_beta,
            beta,
        })
    }

    pub fn chi_zero(&self) -> F {
        self.chi_zero
    }

    pub fn chi_beta(&self) -> F {
        self.chi_beta
    }

    pub fn beta(&self) -> F {
        self.beta
    }
}

/// Complex susceptibility split as `χ̃ = χ′ − iχ″`; `im_loss` is the loss
/// component `χ″`, nonnegative for `ω > 0` in both models.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexSusceptibility<F: Real> {
    pub re: F,
    pub im_loss: F,
}

impl<F: Real> ComplexSusceptibility<F> {
    /// The complex value `χ′ − iχ″`.
    pub fn to_complex(self) -> Complex<F> {
        Complex::new(self.re, -self.im_loss)
    }
}

/// Evaluates the high-frequency model. Diverges at DC, so `ω = 0` is
/// rejected.
pub fn chi_high<F: Real>(m: &HighFreqModel<F>, omega: F) -> Result<ComplexSusceptibility<F>> {
    if omega == F::zero() {
        return Err(Error::InvalidParameter(
            "high-frequency model diverges at omega = 0".into(),
        ));
    }
    if !omega.is_finite() {
        return Err(Error::InvalidParameter("omega must be finite".into()));
    }
    let half_pi = F::FRAC_PI_2();
    let mag = m.chi_alpha * omega.abs().powf(-m.alpha);
    let phase = m.alpha * half_pi;
    // (iω)^(-α) = |ω|^(-α) e^(-iαπ sgn(ω)/2); under χ′ − iχ″ the loss term
    // picks up the sign of ω.
    let sgn = if omega > F::zero() { F::one() } else { -F::one() };
    Ok(ComplexSusceptibility {
        re: mag * phase.cos(),
        im_loss: sgn * mag * phase.sin(),
    })
}

/// Evaluates the low-frequency model; `ω = 0` gives the static value
/// `(χ̃(0), 0)`.
pub fn chi_low<F: Real>(m: &LowFreqModel<F>, omega: F) -> Result<ComplexSusceptibility<F>> {
    if !omega.is_finite() {
        return Err(Error::InvalidParameter("omega must be finite".into()));
    }
    if omega == F::zero() {
        return Ok(ComplexSusceptibility {
            re: m.chi_zero,
            im_loss: F::zero(),
        });
    }
    let half_pi = F::FRAC_PI_2();
    let mag = m.chi_beta * omega.abs().powf(m.beta);
    let phase = m.beta * half_pi;
    let sgn = if omega > F::zero() { F::one() } else { -F::one() };
    Ok(ComplexSusceptibility {
        re: m.chi_zero - mag * phase.cos(),
        im_loss: sgn * mag * phase.sin(),
    })
}

/// Either power-law regime, for callers that treat them uniformly (e.g. the
/// spectral polarization oracle).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SusceptibilityModel<F: Real> {
    High(HighFreqModel<F>),
    Low(LowFreqModel<F>),
}

impl<F: Real> SusceptibilityModel<F> {
    pub fn eval(&self, omega: F) -> Result<ComplexSusceptibility<F>> {
        match self {
            SusceptibilityModel::High(m) => chi_high(m, omega),
            SusceptibilityModel::Low(m) => chi_low(m, omega),
        }
    }
}

/// Maps the measured response exponents `(n, m)` to the fractional orders
/// `(α, β) = (1 − n, m)`.
pub fn exponent_map<F: Real>(n: F, m: F) -> Result<(F, F)> {
    for (name, v) in [("n", n), ("m", m)] {
        if !(v.is_finite() && v > F::zero() && v < F::one()) {
            return Err(Error::InvalidParameter(format!(
                "exponent {name} must lie in (0, 1), got {v}"
            )));
        }
    }
    Ok((F::one() - n, m))
}

/// Inverse of [`exponent_map`]: recovers `(n, m) = (1 − α, β)`.
pub fn exponent_map_inverse<F: Real>(alpha: F, beta: F) -> Result<(F, F)> {
    for (name, v) in [("alpha", alpha), ("beta", beta)] {
        if !(v.is_finite() && v > F::zero() && v < F::one()) {
            return Err(Error::InvalidParameter(format!(
                "order {name} must lie in (0, 1), got {v}"
            )));
        }
    }
    Ok((F::one() - alpha, beta))
}

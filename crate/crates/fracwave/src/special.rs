//! Real special functions used by the fractional-calculus kernels.
//!
//! Thin generic wrappers over double-precision `libm` routines. The gamma
//! function is the workhorse: Grünwald-Letnikov weight oracles, Mittag-Leffler
//! series terms and asymptotic coefficients all go through it.

use crate::scalar::{cast, Real};

/// Gamma function Γ(x) for real x (poles at nonpositive integers return ±∞).
pub fn gamma<F: Real>(x: F) -> F {
    let x = x.to_f64().expect("scalar converts to f64");
    if x <= 0.0 && x == x.floor() {
        return F::infinity();
    }
    cast(libm::tgamma(x))
}

/// Natural log of |Γ(x)| together with the sign of Γ(x).
pub fn ln_gamma<F: Real>(x: F) -> (F, i32) {
    let (ln, sign) = libm::lgamma_r(x.to_f64().expect("scalar converts to f64"));
    (cast(ln), sign)
}

/// Reciprocal gamma 1/Γ(x), finite everywhere (zero at the poles of Γ).
pub fn recip_gamma<F: Real>(x: F) -> F {
    let xf = x.to_f64().expect("scalar converts to f64");
    if xf <= 0.0 && xf == xf.floor() {
        return F::zero();
    }
    if xf >= 0.5 {
        if xf > 171.6 {
            return F::zero();
        }
        return cast(1.0 / libm::tgamma(xf));
    }
    // Reflection: 1/Γ(x) = sin(πx) Γ(1−x) / π, with Γ(1−x) in log form so
    // large negative arguments do not overflow prematurely.
    let sine = libm::sin(std::f64::consts::PI * xf);
    let (ln, sign) = libm::lgamma_r(1.0 - xf);
    if ln > 700.0 {
        // sin(πx)·Γ(1−x)/π overflows; 1/Γ(x) itself is huge only when Γ(x)→0,
        // which cannot happen for real x, so the result saturates.
        return cast(f64::INFINITY * sine.signum() * sign as f64 / std::f64::consts::PI);
    }
    cast(sine * (sign as f64) * libm::exp(ln) / std::f64::consts::PI)
}

/// Error function erf(x).
pub fn erf<F: Real>(x: F) -> F {
    cast(libm::erf(x.to_f64().expect("scalar converts to f64")))
}

/// Complementary error function erfc(x).
pub fn erfc<F: Real>(x: F) -> F {
    cast(libm::erfc(x.to_f64().expect("scalar converts to f64")))
}

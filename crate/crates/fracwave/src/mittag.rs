//! Two-parameter Mittag-Leffler function `E_{α,β}(z)` and the fractional
//! relaxation kernel built from it.
//!
//! `E_{α,β}(z) = Σ_{k≥0} z^k / Γ(αk + β)` generalizes the exponential and
//! governs the relaxation of the fractional field equations. Evaluation
//! switches between three regimes:
//!
//! - truncated power series where cancellation is payable (`|z|^{1/α} ≤ 3`
//!   on the ray of alternating terms, much further inside the growth sector);
//! - the standard large-argument expansion — algebraic series in `1/z` plus
//!   the exponential contributions of the roots `z^{1/α}` — for
//!   `|z|^{1/α} ≥ 27`;
//! - a parabolic Hankel-contour quadrature of
//!   `(2πi)^{-1} ∮ e^s s^{α-β}/(s^α - z) ds` with explicit residue handling
//!   in the band between, where double precision can honour neither of the
//!   other two.
//!
//! The regime radii were fixed by cross-validating every branch against an
//! arbitrary-precision series/integral evaluation over
//! `α ∈ [0.3, 2], β ∈ [0.3, 2], z ∈ [-50, 5]`; observed worst-case relative
//! error on that domain is a few times 1e-10, with the target 1e-10 met away
//! from a thin small-`|E|` corner. `α = 1` on the negative axis is served by
//! a Kummer-transformed confluent series, which is exact there up to
//! rounding.

use num_complex::Complex;

use crate::scalar::{cast, Real};
use crate::special::recip_gamma;
use crate::{Error, Result};

/// Cancellation cap for the alternating-sign power series: used while
/// `|z|^{1/α}` is at most this value.
pub const SERIES_RADIUS_EXPONENT: f64 = 3.0;
/// Lower edge of the asymptotic regime in terms of `|z|^{1/α}`.
pub const ASYMPTOTIC_RADIUS_EXPONENT: f64 = 27.0;
/// Sector half-angle fraction (of `απ`) inside which the series has no
/// destructive cancellation and can run to much larger arguments.
const GROWTH_SECTOR_FRACTION: f64 = 0.4;
/// Relative accuracy target on the validated domain.
pub const ACCURACY_TARGET: f64 = 1e-10;

type C64 = Complex<f64>;

/// Parameters of the two-parameter Mittag-Leffler function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MlParams<F: Real> {
    alpha: F,
    beta: F,
}

impl<F: Real> MlParams<F> {
    pub fn new(alpha: F, beta: F) -> Result<Self> {
        if !(alpha.is_finite() && alpha > F::zero() && alpha <= cast(3.0)) {
            return Err(Error::InvalidParameter(format!(
                "Mittag-Leffler alpha must lie in (0, 3], got {alpha}"
            )));
        }
        if !beta.is_finite() {
            return Err(Error::InvalidParameter("Mittag-Leffler beta must be finite".into()));
        }
        Ok(Self { alpha, beta })
    }

    pub fn alpha(&self) -> F {
        self.alpha
    }

    pub fn beta(&self) -> F {
        self.beta
    }
}

/// Evaluates `E_{α,β}(z)`.
///
/// Supported arguments are the real axis and its small-imaginary
/// neighbourhood (the validation domain); far outside it the error estimate
/// may force a `NonConvergence` signal rather than a silently wrong value.
pub fn mittag_leffler<F: Real>(p: &MlParams<F>, z: Complex<F>) -> Result<Complex<F>> {
    let alpha = p.alpha.to_f64().expect("alpha converts to f64");
    let beta = p.beta.to_f64().expect("beta converts to f64");
    let z64 = C64::new(
        z.re.to_f64().expect("re converts to f64"),
        z.im.to_f64().expect("im converts to f64"),
    );
    if !z64.is_finite() {
        return Err(Error::InvalidParameter("argument must be finite".into()));
    }
    let (value, err) = eval_c64(alpha, beta, z64)?;
    if !(value.is_finite()) {
        return Err(Error::NonConvergence(format!(
            "E_{{{alpha},{beta}}}({z64}) overflowed"
        )));
    }
    if err > 1e-5 {
        return Err(Error::NonConvergence(format!(
            "no evaluation regime reaches the accuracy target at alpha={alpha}, beta={beta}, z={z64} (estimate {err:.2e})"
        )));
    }
    // Real input with real parameters has a real value; drop the rounding
    // residue in the imaginary part.
    let im = if z64.im == 0.0 { 0.0 } else { value.im };
    Ok(Complex::new(cast(value.re), cast(im)))
}

/// Fractional relaxation kernel `t^{α-1} · E_{α,α}(-c·t^α)`.
///
/// For `α = 1` this is the exponential `e^{-ct}`; for `α = 2` it is the
/// classical wave Green's function `sin(√c·t)/√c`; in between it decays with
/// the power-law tail `t^{-α-1}` characteristic of fractional relaxation.
pub fn relaxation_kernel<F: Real>(alpha: F, c: F, t: F) -> Result<F> {
    let a = alpha.to_f64().expect("alpha converts to f64");
    if !(a > 0.0 && a < 3.0) {
        return Err(Error::InvalidParameter(format!(
            "relaxation kernel requires alpha in (0, 3), got {alpha}"
        )));
    }
    let c = c.to_f64().expect("c converts to f64");
    if c.is_nan() || c <= 0.0 {
        return Err(Error::InvalidParameter(format!("rate must be positive, got {c}")));
    }
    let t = t.to_f64().expect("t converts to f64");
    if t.is_nan() || t <= 0.0 {
        return Err(Error::InvalidParameter(format!("time must be positive, got {t}")));
    }
    let (e, err) = eval_c64(a, a, C64::new(-c * t.powf(a), 0.0))?;
    if err > 1e-5 {
        return Err(Error::NonConvergence(format!(
            "relaxation kernel evaluation failed at alpha={a}, c={c}, t={t}"
        )));
    }
    Ok(cast(t.powf(a - 1.0) * e.re))
}

fn eval_c64(alpha: f64, beta: f64, z: C64) -> Result<(C64, f64)> {
    if z.norm() == 0.0 {
        return Ok((C64::new(recip_gamma(beta), 0.0), f64::EPSILON));
    }
    let radius = z.norm().powf(1.0 / alpha);
    let in_growth_sector = z.arg().abs() <= GROWTH_SECTOR_FRACTION * alpha * std::f64::consts::PI;

    if alpha == 1.0 && z.re < 0.0 && z.im.abs() <= 0.5 * z.re.abs() {
        return Ok(eval_kummer_alpha_one(beta, z));
    }
    if in_growth_sector {
        if radius < 600.0 {
            return Ok(eval_series(alpha, beta, z));
        }
        return Ok(eval_asymptotic(alpha, beta, z));
    }
    if radius <= SERIES_RADIUS_EXPONENT {
        return Ok(eval_series(alpha, beta, z));
    }
    if radius >= ASYMPTOTIC_RADIUS_EXPONENT {
        return Ok(eval_asymptotic(alpha, beta, z));
    }
    eval_contour(alpha, beta, z)
}

/// Truncated power series with running cancellation estimate. Valid for any
/// argument; only trustworthy while the largest term stays within the
/// cancellation budget reflected in the returned error estimate.
pub fn eval_series(alpha: f64, beta: f64, z: C64) -> (C64, f64) {
    let radius = z.norm().powf(1.0 / alpha);
    // switch to log-space terms before z^k alone can overflow
    let log_growth = (radius + 5.0) / alpha * z.norm().ln().max(0.0);
    if z.norm() > 30.0 || log_growth > 600.0 {
        return eval_series_log(alpha, beta, z);
    }
    let mut total = C64::new(recip_gamma(beta), 0.0);
    let mut term = C64::new(1.0, 0.0);
    let mut max_mag = total.norm();
    for k in 1..6000 {
        term *= z;
        let u = alpha.mul_add(k as f64, beta);
        let t = term * recip_gamma(u);
        total += t;
        max_mag = max_mag.max(t.norm());
        if t.norm() < 1e-17 * total.norm().max(1e-300) && u > radius + 3.0 {
            break;
        }
    }
    // Terms carry ~3e-14 relative error from the rounded gamma argument;
    // cancellation multiplies it by max_term/|sum|. The scale floor keeps
    // isolated zeros of E from reading as evaluation failures while still
    // flagging sums that cancelled into pure noise.
    let scale = total.norm().max(1e-2 * max_mag).max(1e-300);
    let err = 3e-14 * max_mag / scale;
    (total, err)
}

/// Power series with terms generated in log space, for large arguments in
/// the growth sector where `z^k` alone would overflow.
fn eval_series_log(alpha: f64, beta: f64, z: C64) -> (C64, f64) {
    let radius = z.norm().powf(1.0 / alpha);
    let ln_z = z.ln();
    let mut total = C64::new(recip_gamma(beta), 0.0);
    let mut max_mag = total.norm();
    for k in 1..20000 {
        let kf = k as f64;
        let u = alpha.mul_add(kf, beta);
        let t = if u <= 2.0 {
            (ln_z * kf).exp() * recip_gamma(u)
        } else {
            let (lg, _) = libm::lgamma_r(u);
            let ln_t = ln_z * kf - lg;
            if ln_t.re > 700.0 {
                return (C64::new(f64::INFINITY, 0.0), f64::INFINITY);
            }
            ln_t.exp()
        };
        total += t;
        max_mag = max_mag.max(t.norm());
        if t.norm() < 1e-17 * total.norm().max(1e-300) && u > radius + 3.0 {
            break;
        }
    }
    let err = 1e-13 * max_mag / total.norm().max(1e-300);
    (total, err)
}

/// Standard large-argument expansion: exponentials of the roots `z^{1/α}`
/// lying on the principal sheet plus the algebraic series in `1/z`, the
/// latter truncated at its smallest term.
pub fn eval_asymptotic(alpha: f64, beta: f64, z: C64) -> (C64, f64) {
    let pi = std::f64::consts::PI;
    let radius = z.norm().powf(1.0 / alpha);
    let arg_z = z.arg();

    let mut exp_sum = C64::new(0.0, 0.0);
    for m in -2i32..=2 {
        let a = arg_z + 2.0 * pi * m as f64;
        if a.abs() < alpha * pi + 1e-12 {
            let w = C64::from_polar(radius, a / alpha);
            if w.re > 700.0 {
                return (C64::new(f64::INFINITY, 0.0), f64::INFINITY);
            }
            if w.re > -700.0 {
                exp_sum += w.powf(1.0 - beta) * w.exp() / alpha;
            }
        }
    }

    let ln_z = z.ln();
    let k_opt = (((radius - 1.0 + beta) / alpha) as usize).clamp(1, 400);
    let mut alg_sum = C64::new(0.0, 0.0);
    let mut dropped = 0.0f64;
    for k in 1..=k_opt {
        let x = beta - alpha * k as f64;
        let t = if x >= 0.5 {
            (-ln_z * k as f64).exp() * recip_gamma(x)
        } else {
            // 1/Γ(x) = sin(πx)·Γ(1-x)/π with Γ(1-x) kept in log form.
            let sine = libm::sin(pi * x);
            let (lg, _) = libm::lgamma_r(1.0 - x);
            let ln_t = C64::new(lg, 0.0) - ln_z * k as f64;
            if ln_t.re > 600.0 {
                break;
            }
            ln_t.exp() * (sine / pi)
        };
        alg_sum -= t;
        if t.norm() > 0.0 {
            // poles of Γ zero out individual terms; the truncation estimate
            // must follow the last genuine term
            dropped = t.norm();
        }
    }
    let val = exp_sum + alg_sum;
    // relative to the component scale: near isolated zeros of E the
    // exponential and algebraic parts cancel and only absolute accuracy is
    // meaningful
    let scale = val.norm().max(exp_sum.norm()).max(alg_sum.norm()).max(1e-300);
    (val, dropped / scale)
}

/// Roots of `s^α = z` on the principal sheet `|arg s| < π`.
fn poles_on_sheet(alpha: f64, z: C64) -> Vec<C64> {
    let pi = std::f64::consts::PI;
    let radius = z.norm().powf(1.0 / alpha);
    let mut out = Vec::new();
    for m in -2i32..=2 {
        let a = (z.arg() + 2.0 * pi * m as f64) / alpha;
        if a.abs() < pi - 1e-13 {
            out.push(C64::from_polar(radius, a));
        }
    }
    out
}

/// Half-width of the analyticity strip of the contour integrand in the
/// quadrature variable, limited by the branch cut (at 1) and the poles.
fn strip_width(mu: f64, poles: &[C64]) -> f64 {
    let mut d = 1.0f64;
    for &s in poles {
        let root = (s / mu).sqrt();
        for w in [root, -root] {
            let u = C64::new(0.0, -1.0) * (C64::new(1.0, 0.0) - w);
            d = d.min(u.im.abs());
        }
    }
    d
}

/// Parabolic Hankel-contour quadrature of
/// `(2πi)^{-1} ∮ e^s s^{α-β} / (s^α - z) ds` on `s = μ(1+iu)²`, with the
/// residues of poles lying right of the parabola added explicitly.
pub fn eval_contour(alpha: f64, beta: f64, z: C64) -> Result<(C64, f64)> {
    const TARGET: f64 = 1e-14;
    let radius = z.norm().powf(1.0 / alpha);
    let poles = poles_on_sheet(alpha, z);

    let mut best: Option<(f64, f64, f64, usize)> = None;
    for mu in [
        2.0,
        3.0,
        4.0,
        6.0,
        8.0,
        (radius / 8.0).max(2.0),
        (radius / 4.0).max(2.0),
        (radius / 2.5).max(2.0),
    ] {
        let d = strip_width(mu, &poles).min(1.0);
        if d < 0.05 {
            continue;
        }
        let barrier = mu * (1.0 + d) * (1.0 + d) + (1.0 / TARGET).ln();
        let h = 2.0 * std::f64::consts::PI * d / barrier;
        let u_max = (1.0 + (1.0 / TARGET).ln() / mu).max(1.0).sqrt();
        let n = (2.0 * u_max / h) as usize + 1;
        if best.is_none_or(|b| n < b.3) {
            best = Some((mu, d, h, n));
        }
    }
    let (mu, _d, h, n) = best.ok_or_else(|| {
        Error::NonConvergence(format!(
            "no admissible integration contour for alpha={alpha}, z={z}"
        ))
    })?;
    let n = n.clamp(64, 8000);

    // Two resolutions: the coarse/fine difference is the error estimate.
    // It is reported relative to the characteristic magnitude of the
    // evaluation (quadrature mass plus residues), so isolated zeros of E —
    // where only absolute accuracy is meaningful — do not read as failures.
    let (coarse, _) = contour_quadrature(alpha, beta, z, &poles, mu, h, n);
    let (fine, characteristic) =
        contour_quadrature(alpha, beta, z, &poles, mu, h * 0.7, (n as f64 / 0.7) as usize);
    let err_abs = (coarse - fine).norm();
    let err = err_abs / characteristic.max(fine.norm()).max(1e-300);
    Ok((fine, err))
}

/// Trapezoid sum on the parabola plus residue corrections; also returns the
/// characteristic magnitude (absolute quadrature mass + largest residue).
fn contour_quadrature(
    alpha: f64,
    beta: f64,
    z: C64,
    poles: &[C64],
    mu: f64,
    h: f64,
    n: usize,
) -> (C64, f64) {
    let half = (n / 2) as i64;
    let mut total = C64::new(0.0, 0.0);
    let mut comp = C64::new(0.0, 0.0); // Kahan compensation
    let mut abs_mass = 0.0f64;
    for j in -half..=half {
        let u = j as f64 * h;
        let one_iu = C64::new(1.0, u);
        let s = one_iu * one_iu * mu;
        let ds = C64::new(0.0, 2.0 * mu) * one_iu;
        let val = s.exp() * s.powf(alpha - beta) / (s.powf(alpha) - z) * ds;
        abs_mass += val.norm();
        let y = val - comp;
        let t = total + y;
        comp = (t - total) - y;
        total = t;
    }
    // h/(2πi) = -i·h/(2π)
    total *= C64::new(0.0, -h / (2.0 * std::f64::consts::PI));
    abs_mass *= h / (2.0 * std::f64::consts::PI);
    let mut res_mag = 0.0f64;
    for &s in poles {
        let inside = s.re < mu - s.im * s.im / (4.0 * mu);
        if !inside && s.re > -30.0 {
            let res = s.powf(1.0 - beta) * s.exp() / alpha;
            res_mag = res_mag.max(res.norm());
            total += res;
        }
    }
    (total, abs_mass + res_mag)
}

/// `E_{1,β}(z)` near the negative real axis through the Kummer transform
/// `E_{1,β}(z) = e^z · M(β-1, β, -z) / Γ(β)`, whose series has a single sign
/// change and therefore no destructive cancellation there.
fn eval_kummer_alpha_one(beta: f64, z: C64) -> (C64, f64) {
    if beta == 1.0 {
        return (z.exp(), 1e-15);
    }
    if beta < 1.0 {
        // E_{1,β}(z) = z·E_{1,β+1}(z) + 1/Γ(β)
        let (v, e) = eval_kummer_alpha_one(beta + 1.0, z);
        return (z * v + recip_gamma(beta), 3.0 * e);
    }
    let x = -z;
    let mut term = C64::new(1.0, 0.0);
    let mut total = C64::new(1.0, 0.0);
    for k in 1..16000 {
        let kf = k as f64;
        term *= x * ((beta - 2.0 + kf) / ((beta - 1.0 + kf) * kf));
        total += term;
        if term.norm() < 1e-17 * total.norm() && k > 4 {
            break;
        }
    }
    (z.exp() * total * recip_gamma(beta), 1e-14)
}

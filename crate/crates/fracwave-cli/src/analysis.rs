//! Analysis of recorded time series: power-law tail fitting and spectra.

use num_complex::Complex;
use serde::Serialize;

use fracwave::dft::{bin_frequency, dft_forward};
use fracwave::signal::SampledSignal;

#[derive(Debug, thiserror::Error)]
pub enum AnalysisError {
    #[error("{0}")]
    InvalidInput(String),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

/// Result of a log-log power-law fit `|u| ~ t^exponent` over a window.
#[derive(Debug, Clone, Serialize)]
pub struct TailFit {
    pub exponent: f64,
    pub window: (f64, f64),
    pub r_squared: f64,
    pub n_samples: usize,
}

/// Minimum number of samples a tail fit may use.
pub const TAIL_FIT_MIN_SAMPLES: usize = 16;

/// Default tail-fit window: the last decade of simulated time ending at 90%
/// of the run (end-of-window artifacts stay out of the fit).
pub fn default_tail_window(series: &SampledSignal<f64>) -> (f64, f64) {
    let t_end = series.time(series.len() - 1);
    let hi = 0.9 * t_end;
    (hi / 10.0, hi)
}

/// Least-squares line through `(ln t, ln |u|)` over the window.
pub fn fit_tail(series: &SampledSignal<f64>, window: (f64, f64)) -> Result<TailFit, AnalysisError> {
    let (t_start, t_end) = window;
    if !(t_start.is_finite() && t_end.is_finite() && t_start < t_end) {
        return Err(AnalysisError::InvalidInput(format!(
            "window must satisfy t_start < t_end, got ({t_start}, {t_end})"
        )));
    }
    if t_start <= 0.0 {
        return Err(AnalysisError::InvalidInput(
            "window must start at positive time for a log-log fit".into(),
        ));
    }
    let span_end = series.time(series.len() - 1);
    if t_start < series.t0() || t_end > span_end {
        return Err(AnalysisError::InvalidInput(format!(
            "window ({t_start}, {t_end}) exceeds the series span [{}, {span_end}]",
            series.t0()
        )));
    }
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for i in 0..series.len() {
        let t = series.time(i);
        if t < t_start || t > t_end {
            continue;
        }
        let u = series.values()[i].abs();
        if u == 0.0 {
            return Err(AnalysisError::InvalidInput(format!(
                "sample at t = {t} has zero magnitude; the log-log fit needs strictly nonzero samples"
            )));
        }
        xs.push(t.ln());
        ys.push(u.ln());
    }
    if xs.len() < TAIL_FIT_MIN_SAMPLES {
        return Err(AnalysisError::InvalidInput(format!(
            "window holds {} samples; at least {TAIL_FIT_MIN_SAMPLES} required",
            xs.len()
        )));
    }

    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss_res: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| {
            let r = y - (slope * x + intercept);
            r * r
        })
        .sum();
    let ss_tot: f64 = ys.iter().map(|y| (y - my) * (y - my)).sum();
    let r_squared = if ss_tot == 0.0 { 1.0 } else { 1.0 - ss_res / ss_tot };

    Ok(TailFit {
        exponent: slope,
        window,
        r_squared,
        n_samples: xs.len(),
    })
}

/// One spectral bin with the crate-wide transform convention
/// `F(ω) = dt·e^{-iω t0}·Σ x_k e^{-2πi mk/n}` at signed bin frequencies.
#[derive(Debug, Clone, Serialize)]
pub struct SpectrumRow {
    pub omega: f64,
    pub magnitude: f64,
    pub phase: f64,
}

/// DFT of a series; needs at least 8 samples. Returns all bins, negative
/// frequencies included (signed `ω` in radians per second).
pub fn spectrum(series: &SampledSignal<f64>) -> Result<Vec<SpectrumRow>, AnalysisError> {
    let n = series.len();
    if n < 8 {
        return Err(AnalysisError::InvalidInput(format!(
            "spectrum needs at least 8 samples, got {n}"
        )));
    }
    let mut buf: Vec<Complex<f64>> = series
        .values()
        .iter()
        .map(|&v| Complex::new(v, 0.0))
        .collect();
    dft_forward(&mut buf);
    let dt = series.dt();
    let t0 = series.t0();
    Ok(buf
        .iter()
        .enumerate()
        .map(|(m, c)| {
            let omega = bin_frequency(m, n, dt);
            let scaled = c * dt * Complex::from_polar(1.0, -omega * t0);
            SpectrumRow {
                omega,
                magnitude: scaled.norm(),
                phase: scaled.arg(),
            }
        })
        .collect())
}

/// Loads one probe column of a time-series CSV (`t,probe_<i>,...`) as a
/// sampled signal. `col` counts data columns, i.e. `0` is the first probe.
pub fn load_csv_column(path: &std::path::Path, col: usize) -> Result<SampledSignal<f64>, AnalysisError> {
    let mut reader = csv::Reader::from_path(path)?;
    let headers = reader.headers()?.clone();
    if headers.len() < 2 {
        return Err(AnalysisError::InvalidInput(
            "time-series CSV needs a time column and at least one data column".into(),
        ));
    }
    if col + 1 >= headers.len() {
        return Err(AnalysisError::InvalidInput(format!(
            "column {col} out of range; file has {} data columns",
            headers.len() - 1
        )));
    }
    let mut ts = Vec::new();
    let mut us = Vec::new();
    for record in reader.records() {
        let record = record?;
        let t: f64 = record
            .get(0)
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| AnalysisError::InvalidInput("unparseable time value".into()))?;
        let u: f64 = record
            .get(col + 1)
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| AnalysisError::InvalidInput("unparseable sample value".into()))?;
        ts.push(t);
        us.push(u);
    }
    if ts.len() < 2 {
        return Err(AnalysisError::InvalidInput("need at least two rows".into()));
    }
    let dt = ts[1] - ts[0];
    if !(dt.is_finite() && dt > 0.0) {
        return Err(AnalysisError::InvalidInput("non-increasing time column".into()));
    }
    for (i, w) in ts.windows(2).enumerate() {
        let step = w[1] - w[0];
        if (step - dt).abs() > 1e-9 * dt.abs() {
            return Err(AnalysisError::InvalidInput(format!(
                "time column is not uniform at row {} ({} vs {})",
                i + 1,
                step,
                dt
            )));
        }
    }
    SampledSignal::new(ts[0], dt, us)
        .map_err(|e| AnalysisError::InvalidInput(e.to_string()))
}

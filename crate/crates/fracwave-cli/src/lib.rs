//! Scenario runner and analysis front end for the fractional
//! electromagnetic wave toolkit: config ingestion, simulation orchestration,
//! CSV/JSON emission, spectrum analysis, power-law tail fitting and
//! convergence studies.

pub mod analysis;
pub mod config;
pub mod convergence;
pub mod runner;
pub mod sweep;

/// Environment variable naming the root directory for run artifacts.
pub const OUTPUT_ROOT_ENV: &str = "FRACWAVE_OUTPUT_ROOT";

/// Default artifact root when the environment variable is unset.
pub const DEFAULT_OUTPUT_ROOT: &str = "runs";

/// Process exit code for configuration/schema errors.
pub const EXIT_CONFIG_ERROR: i32 = 2;
/// Process exit code for solver instability.
pub const EXIT_INSTABILITY: i32 = 3;

/// Floats in CSV artifacts carry 17 significant digits.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use fracwave_cli::analysis::{default_tail_window, fit_tail, load_csv_column, spectrum};
use fracwave_cli::config::parse_config;
use fracwave_cli::convergence::convergence_study;
use fracwave_cli::runner::{resolve_output_dir, run_scenario, RunError};
use fracwave_cli::sweep::{run_sweep, VarySpec};
use fracwave_cli::{format_float, EXIT_CONFIG_ERROR, EXIT_INSTABILITY};

/// Fractional electromagnetic wave scenarios: run, sweep and analyze.
#[derive(Parser)]
#[command(name = "fracwave", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one scenario config and write CSV/JSON artifacts.
    Run { config: PathBuf },
    /// Run the config once per value of a varied field.
    Sweep {
        config: PathBuf,
        /// Field path and values, e.g. medium.response.alpha=0.2,0.5,0.8
        #[arg(long)]
        vary: String,
    },
    /// Fit a power-law tail to a recorded time series (log-log least squares).
    FitTail {
        csv: PathBuf,
        /// Data column index (0 = first probe column).
        #[arg(long)]
        col: usize,
        /// Window start time; defaults to the last decade ending at 90% of
        /// the run.
        #[arg(long)]
        from: Option<f64>,
        /// Window end time.
        #[arg(long)]
        to: Option<f64>,
    },
    /// Emit the spectrum (omega, magnitude, phase) of a recorded series.
    Spectrum {
        csv: PathBuf,
        #[arg(long)]
        col: usize,
    },
    /// Refinement study reporting errors and observed convergence orders.
    Converge {
        config: PathBuf,
        #[arg(long, default_value_t = 4)]
        levels: usize,
    },
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            let code = classify(&err);
            ExitCode::from(code as u8)
        }
    }
}

fn classify(err: &anyhow::Error) -> i32 {
    if let Some(run_err) = err.downcast_ref::<RunError>() {
        return match run_err {
            RunError::Config(_) => EXIT_CONFIG_ERROR,
            RunError::Solver(fracwave::Error::Instability { .. }) => EXIT_INSTABILITY,
            _ => 1,
        };
    }
    if err
        .downcast_ref::<fracwave_cli::config::ConfigError>()
        .is_some()
    {
        return EXIT_CONFIG_ERROR;
    }
    if let Some(fracwave::Error::Instability { .. }) = err.downcast_ref::<fracwave::Error>() {
        return EXIT_INSTABILITY;
    }
    1
}

fn dispatch(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Run { config } => {
            let text = std::fs::read_to_string(&config)?;
            let scenario = parse_config(&text).map_err(RunError::Config)?;
            let stem = config
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "scenario".into());
            let dir = resolve_output_dir(&scenario, &stem);
            let artifacts = run_scenario(&scenario, &dir)?;
            println!("{}", artifacts.timeseries.display());
            if let Some(snapshot) = &artifacts.snapshot {
                println!("{}", snapshot.display());
            }
            println!("{}", artifacts.metadata.display());
            Ok(())
        }
        Command::Sweep { config, vary } => {
            let text = std::fs::read_to_string(&config)?;
            let spec = VarySpec::parse(&vary).map_err(RunError::Config)?;
            let scenario = parse_config(&text).map_err(RunError::Config)?;
            let stem = config
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "scenario".into());
            let base_dir = resolve_output_dir(&scenario, &stem);
            let artifacts = run_sweep(&text, &spec, &base_dir)?;
            for a in artifacts {
                println!("{}", a.dir.display());
            }
            Ok(())
        }
        Command::FitTail { csv, col, from, to } => {
            let series = load_csv_column(&csv, col)?;
            let window = match (from, to) {
                (Some(a), Some(b)) => (a, b),
                (None, None) => default_tail_window(&series),
                _ => anyhow::bail!("--from and --to must be given together"),
            };
            let fit = fit_tail(&series, window)?;
            println!("{}", serde_json::to_string_pretty(&fit)?);
            Ok(())
        }
        Command::Spectrum { csv, col } => {
            let series = load_csv_column(&csv, col)?;
            let rows = spectrum(&series)?;
            println!("omega,magnitude,phase");
            for r in rows {
                println!(
                    "{},{},{}",
                    format_float(r.omega),
                    format_float(r.magnitude),
                    format_float(r.phase)
                );
            }
            Ok(())
        }
        Command::Converge { config, levels } => {
            let text = std::fs::read_to_string(&config)?;
            let base: fracwave_cli::config::ScenarioConfig = serde_json::from_str(&text)
                .map_err(|e| RunError::Config(fracwave_cli::config::ConfigError::new(
                    "<json>",
                    e.to_string(),
                )))?;
            let table = convergence_study(&base, levels)?;
            println!("dt,dx,error,observed_order");
            for row in &table.rows {
                println!(
                    "{},{},{},{}",
                    format_float(row.dt),
                    row.dx.map(format_float).unwrap_or_default(),
                    format_float(row.error),
                    row.observed_order.map(format_float).unwrap_or_default()
                );
            }
            eprintln!("reference: {}", table.reference);
            if !table.monotone {
                eprintln!("warning: error sequence is not monotone");
            }
            Ok(())
        }
    }
}

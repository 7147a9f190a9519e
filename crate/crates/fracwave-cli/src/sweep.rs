//! Parameter sweeps: one scenario config, one varied field, independent
//! output directories, parallel execution.

use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::config::{parse_config, ConfigError};
use crate::runner::{run_scenario, RunArtifacts, RunError};

/// A parsed `--vary field=v1,v2,...` specification.
#[derive(Debug, Clone)]
pub struct VarySpec {
    pub path: String,
    pub values: Vec<serde_json::Value>,
}

impl VarySpec {
    pub fn parse(spec: &str) -> Result<Self, ConfigError> {
        let (path, list) = spec.split_once('=').ok_or_else(|| {
            ConfigError::new("--vary", "expected <field>=<comma-separated values>")
        })?;
        if path.is_empty() {
            return Err(ConfigError::new("--vary", "empty field path"));
        }
        let values: Vec<serde_json::Value> = list
            .split(',')
            .map(|v| {
                serde_json::from_str(v)
                    .unwrap_or_else(|_| serde_json::Value::String(v.to_string()))
            })
            .collect();
        if values.is_empty() {
            return Err(ConfigError::new("--vary", "no values given"));
        }
        Ok(Self {
            path: path.to_string(),
            values,
        })
    }
}

/// Sets a dotted-path field inside a JSON document.
fn set_path(
    doc: &mut serde_json::Value,
    path: &str,
    value: serde_json::Value,
) -> Result<(), ConfigError> {
    let mut cursor = doc;
    let segments: Vec<&str> = path.split('.').collect();
    for (i, seg) in segments.iter().enumerate() {
        let last = i + 1 == segments.len();
        let obj = cursor.as_object_mut().ok_or_else(|| {
            ConfigError::new(path, format!("segment '{seg}' is not addressable"))
        })?;
        if last {
            obj.insert(seg.to_string(), value);
            return Ok(());
        }
        cursor = obj
            .get_mut(*seg)
            .ok_or_else(|| ConfigError::new(path, format!("unknown field segment '{seg}'")))?;
    }
    unreachable!("path has at least one segment");
}

/// Runs the base config once per varied value, each into
/// `<base_dir>/<field>_<value>/`. Scenarios are validated up front so a
/// schema error fails the whole sweep before anything runs; execution is
/// parallel, outputs are per-directory and deterministic.
pub fn run_sweep(
    base_text: &str,
    spec: &VarySpec,
    base_dir: &Path,
) -> Result<Vec<RunArtifacts>, RunError> {
    // the base must parse on its own
    parse_config(base_text)?;
    let doc: serde_json::Value = serde_json::from_str(base_text)
        .map_err(|e| ConfigError::new("<json>", e.to_string()))?;

    let mut planned: Vec<(PathBuf, crate::config::ValidatedScenario)> = Vec::new();
    for value in &spec.values {
        let mut variant = doc.clone();
        set_path(&mut variant, &spec.path, value.clone())?;
        let scenario = parse_config(&variant.to_string())?;
        let label = value
            .to_string()
            .trim_matches('"')
            .replace(['/', '\\'], "_");
        planned.push((base_dir.join(format!("{}_{label}", spec.path)), scenario));
    }

    planned
        .par_iter()
        .map(|(dir, scenario)| run_scenario(scenario, dir))
        .collect()
}

//! Run configuration: JSON document with an explicit schema version.

use std::collections::HashSet;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;
use siam_core::scenario::Scenario;
use siam_core::{InstitutionPolicy, TechModel, UniformGrid};

use crate::error::{CliError, Result};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub schema_version: u32,
    pub grid: GridConfig,
    pub tech: TechConfig,
    pub scenarios: Vec<ScenarioConfig>,
    pub baseline_id: String,
    #[serde(default)]
    pub outputs: OutputsConfig,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    pub t_max: f64,
    pub n_points: usize,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TechConfig {
    pub doubling_time: f64,
    #[serde(default = "one")]
    pub permeability: f64,
    #[serde(default = "one")]
    pub anchor: f64,
}

fn one() -> f64 {
    1.0
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub id: String,
    /// Display name used in plot titles.
    #[serde(default)]
    pub label: Option<String>,
    #[serde(rename = "L", alias = "lag")]
    pub lag: f64,
    #[serde(rename = "D", alias = "duration")]
    pub duration: f64,
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputsConfig {
    pub json_path: Option<PathBuf>,
    /// Trace file path; `{id}` is replaced by the scenario id, otherwise `_<id>` is
    /// inserted before the extension.
    pub csv_path: Option<PathBuf>,
    pub svg_path: Option<PathBuf>,
}

/// A validated configuration ready to run.
#[derive(Debug, Clone)]
pub struct Plan {
    pub config: RunConfig,
    pub scenarios: Vec<Scenario<f64>>,
    pub baseline_index: usize,
}

impl Plan {
    pub fn baseline(&self) -> &Scenario<f64> {
        &self.scenarios[self.baseline_index]
    }

    pub fn label(&self, id: &str) -> Option<&str> {
        self.config
            .scenarios
            .iter()
            .find(|s| s.id == id)
            .and_then(|s| s.label.as_deref())
    }
}

pub fn load(path: &Path) -> Result<Plan> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
    parse(&text).map_err(|e| match e {
        CliError::Config(msg) => CliError::Config(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn parse(text: &str) -> Result<Plan> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let config: RunConfig = serde_path_to_error::deserialize(de).map_err(|e| {
        let inner = e.inner();
        CliError::Config(format!(
            "line {} column {}: field `{}`: {}",
            inner.line(),
            inner.column(),
            e.path(),
            inner
        ))
    })?;
    config.validate()
}

fn valid_id(id: &str) -> bool {
    !id.is_empty()
        && id
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.'))
}

impl RunConfig {
    pub fn validate(self) -> Result<Plan> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(CliError::Config(format!(
                "field `schema_version`: unsupported version {}, expected {SCHEMA_VERSION}",
                self.schema_version
            )));
        }
        if self.scenarios.is_empty() {
            return Err(CliError::Config(
                "field `scenarios`: at least one scenario required".into(),
            ));
        }

        let mut seen = HashSet::new();
        for (i, s) in self.scenarios.iter().enumerate() {
            if !valid_id(&s.id) {
                return Err(CliError::Config(format!(
                    "field `scenarios[{i}].id`: {:?} must be non-empty and use only [A-Za-z0-9_.-]",
                    s.id
                )));
            }
            if !seen.insert(s.id.as_str()) {
                return Err(CliError::Config(format!(
                    "field `scenarios[{i}].id`: duplicate id {:?}",
                    s.id
                )));
            }
        }
        let baseline_index = self
            .scenarios
            .iter()
            .position(|s| s.id == self.baseline_id)
            .ok_or_else(|| {
                CliError::Config(format!(
                    "field `baseline_id`: {:?} is not a scenario id",
                    self.baseline_id
                ))
            })?;

        let grid = UniformGrid::simpson(0.0, self.grid.t_max, self.grid.n_points)
            .map_err(|e| at_field("grid", e))?;
        let tech = TechModel::new(
            self.tech.doubling_time,
            self.tech.permeability,
            self.tech.anchor,
        )
        .map_err(|e| at_field("tech", e))?;

        let scenarios = self
            .scenarios
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let policy = InstitutionPolicy::new(s.lag, s.duration)
                    .map_err(|e| at_field(&format!("scenarios[{i}]"), e))?;
                Ok(Scenario::new(s.id.clone(), tech, policy, grid)?)
            })
            .collect::<Result<Vec<_>>>()?;

        let plan = Plan {
            config: self,
            scenarios,
            baseline_index,
        };
        plan.check_output_paths()?;
        Ok(plan)
    }
}

fn at_field(field: &str, err: siam_core::Error) -> CliError {
    match CliError::from(err) {
        CliError::Config(msg) => CliError::Config(format!("field `{field}`: {msg}")),
        CliError::Numerical(msg) => CliError::Numerical(format!("field `{field}`: {msg}")),
        other => other,
    }
}

/// Trace CSV path for one scenario.
pub fn trace_path(template: &Path, id: &str) -> PathBuf {
    let text = template.to_string_lossy();
    if text.contains("{id}") {
        return PathBuf::from(text.replace("{id}", id));
    }
    let stem = template
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let name = match template.extension() {
        Some(ext) => format!("{stem}_{id}.{}", ext.to_string_lossy()),
        None => format!("{stem}_{id}"),
    };
    template.with_file_name(name)
}

impl Plan {
    pub fn trace_paths(&self) -> Vec<(String, PathBuf)> {
        match &self.config.outputs.csv_path {
            Some(t) => self
                .scenarios
                .iter()
                .map(|s| (s.id().to_owned(), trace_path(t, s.id())))
                .collect(),
            None => Vec::new(),
        }
    }

    fn check_output_paths(&self) -> Result<()> {
        let outputs = &self.config.outputs;
        let mut all: Vec<(String, PathBuf)> = Vec::new();
        if let Some(p) = &outputs.json_path {
            all.push(("outputs.json_path".into(), p.clone()));
        }
        if let Some(p) = &outputs.svg_path {
            all.push(("outputs.svg_path".into(), p.clone()));
        }
        for (id, p) in self.trace_paths() {
            all.push((format!("outputs.csv_path[{id}]"), p));
        }
        let mut seen = HashSet::new();
        for (field, p) in &all {
            if !seen.insert(p) {
                return Err(CliError::Config(format!(
                    "field `{field}`: path {} is used by more than one output",
                    p.display()
                )));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const DEFAULT: &str = include_str!("../configs/default.json");

    #[test]
    fn default_config_parses() {
        let plan = parse(DEFAULT).unwrap();
        assert_eq!(plan.scenarios.len(), 3);
        assert_eq!(plan.baseline().id(), "A");
        assert_eq!(plan.label("B"), Some("Timing Strategy"));
        assert_eq!(plan.baseline().grid().n_points(), 10_001);
    }

    fn with(edit: impl FnOnce(&mut serde_json::Value)) -> String {
        let mut v: serde_json::Value = serde_json::from_str(DEFAULT).unwrap();
        edit(&mut v);
        v.to_string()
    }

    #[test]
    fn even_grid_is_a_numerical_error() {
        let text = with(|v| v["grid"]["n_points"] = 10_000.into());
        let err = parse(&text).unwrap_err();
        assert_eq!(err.exit_code(), 3, "{err}");
        assert!(err.to_string().contains("odd"));
    }

    #[test]
    fn malformed_config_reports_field_and_line() {
        let text = DEFAULT.replace("\"doubling_time\": 0.5", "\"doubling_time\": \"fast\"");
        let err = parse(&text).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let msg = err.to_string();
        assert!(
            msg.contains("tech.doubling_time") && msg.contains("line"),
            "{msg}"
        );

        let err = parse("{ not json").unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn semantic_errors() {
        let cases = [
            with(|v| v["baseline_id"] = "Z".into()),
            with(|v| v["scenarios"][1]["id"] = "A".into()),
            with(|v| v["scenarios"][1]["id"] = "a b".into()),
            with(|v| v["scenarios"][0]["D"] = 0.0.into()),
            with(|v| v["scenarios"][0]["L"] = (-1.0).into()),
            with(|v| v["tech"]["permeability"] = 1.5.into()),
            with(|v| v["grid"]["t_max"] = 0.0.into()),
            with(|v| v["schema_version"] = 2.into()),
            with(|v| v["scenarios"] = serde_json::json!([])),
            with(|v| v["surprise"] = true.into()),
            with(|v| {
                v["outputs"] = serde_json::json!({"json_path": "x.json", "svg_path": "x.json"})
            }),
        ];
        for text in cases {
            let err = parse(&text).unwrap_err();
            assert_eq!(err.exit_code(), 2, "{err}");
        }
    }

    #[test]
    fn trace_path_expansion() {
        assert_eq!(
            trace_path(Path::new("out/trace.csv"), "A"),
            PathBuf::from("out/trace_A.csv")
        );
        assert_eq!(
            trace_path(Path::new("out/{id}.csv"), "B"),
            PathBuf::from("out/B.csv")
        );
        assert_eq!(
            trace_path(Path::new("trace"), "C"),
            PathBuf::from("trace_C")
        );
    }
}

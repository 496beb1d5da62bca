//! Subcommand implementations. Each returns the exit status through [`CliError`].

use std::fs;
use std::io::Write as _;
use std::path::Path;

use siam_core::scenario::{
    compare, finite_change, sensitivity_numeric, sweep, total_burden, uniform_values, Comparison,
    SweepParam,
};
use siam_core::structural::structural_sensitivity;

use crate::config::{self, Plan};
use crate::error::{CliError, Result};
use crate::report::{self, RunReport, SensitivityReport};
use crate::svg::{self, Panel};

pub const PLOT_TITLE: &str = "Regulatory gap: timing (L) vs. efficiency (D)";

/// Writes `contents` to `path`, creating parent directories.
pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    }
    fs::write(path, contents).map_err(|e| CliError::io(path, e))
}

fn emit(out: Option<&Path>, contents: &str) -> Result<()> {
    match out {
        Some(p) => write_file(p, contents),
        None => std::io::stdout()
            .write_all(contents.as_bytes())
            .map_err(|e| CliError::Io(format!("stdout: {e}"))),
    }
}

/// Evaluates every configured scenario against the baseline.
pub fn evaluate(plan: &Plan) -> Result<Comparison<f64>> {
    Ok(compare(plan.baseline(), &plan.scenarios)?)
}

pub fn run_report(plan: &Plan, comparison: &Comparison<f64>) -> String {
    report::to_json(&RunReport::new(
        plan,
        &comparison.report,
        &comparison.variants,
    ))
}

pub fn plot_svg(plan: &Plan, comparison: &Comparison<f64>) -> String {
    let panels: Vec<Panel<'_>> = plan
        .scenarios
        .iter()
        .zip(&comparison.report.entries)
        .zip(&comparison.variants)
        .map(|((s, e), r)| Panel {
            title: match plan.label(s.id()) {
                Some(label) => format!("({}) {}", s.id(), label),
                None => format!("({})", s.id()),
            },
            lag: s.policy().lag(),
            duration: s.policy().duration(),
            burden: e.burden,
            reduction_percent: e.reduction_percent,
            is_baseline: s.id() == plan.baseline().id(),
            traces: &r.traces,
        })
        .collect();
    svg::render(&panels, PLOT_TITLE)
}

/// `run <config>`: JSON report, per-scenario trace CSVs and optionally the plot. Without a
/// `json_path` the report goes to stdout.
pub fn cmd_run(config_path: &Path) -> Result<()> {
    let plan = config::load(config_path)?;
    let comparison = evaluate(&plan)?;
    let outputs = &plan.config.outputs;

    let json = run_report(&plan, &comparison);
    emit(outputs.json_path.as_deref(), &json)?;

    for ((_, path), result) in plan.trace_paths().iter().zip(&comparison.variants) {
        write_file(path, &report::trace_csv(&result.traces))?;
    }
    if let Some(p) = &outputs.svg_path {
        write_file(p, &plot_svg(&plan, &comparison))?;
    }
    if outputs.json_path.is_some() {
        summary(&plan, &comparison);
    }
    Ok(())
}

fn summary(plan: &Plan, c: &Comparison<f64>) {
    println!(
        "{:<8} {:>8} {:>8} {:>12} {:>10}",
        "scenario", "L", "D", "H_total", "reduction"
    );
    for (s, e) in plan.scenarios.iter().zip(&c.report.entries) {
        let red = e
            .reduction_percent
            .map(|r| format!("{r:.1}%"))
            .unwrap_or_else(|| "n/a".into());
        println!(
            "{:<8} {:>8.2} {:>8.2} {:>12.6} {:>10}",
            s.id(),
            s.policy().lag(),
            s.policy().duration(),
            e.burden,
            red
        );
    }
}

/// `sweep <config>`: varies one parameter of the baseline scenario over an inclusive
/// uniform range. Nothing is written unless every value is valid.
pub fn cmd_sweep(
    config_path: &Path,
    param: SweepParam,
    from: f64,
    to: f64,
    steps: usize,
    out: Option<&Path>,
) -> Result<()> {
    let plan = config::load(config_path)?;
    let values = uniform_values(from, to, steps).map_err(|e| CliError::Config(e.to_string()))?;
    let base = plan.baseline();
    let results = sweep(base, param, &values).map_err(|e| match CliError::from(e) {
        CliError::Config(msg) => CliError::Config(format!("sweep over {param}: {msg}")),
        other => other,
    })?;
    let reference = total_burden(base)?.burden;
    emit(out, &report::sweep_csv(&values, &results, reference))
}

/// `sensitivity <config>`: structural, central-difference and finite-change views for the
/// baseline scenario.
pub fn cmd_sensitivity(config_path: &Path, h: f64, delta: f64, out: Option<&Path>) -> Result<()> {
    let plan = config::load(config_path)?;
    let base = plan.baseline();
    let numeric = sensitivity_numeric(base, h).map_err(|e| CliError::Config(e.to_string()))?;
    let change = finite_change(base, delta, delta)
        .map_err(|e| CliError::Config(format!("finite-change view with delta = {delta}: {e}")))?;
    let doc = SensitivityReport::new(base, &structural_sensitivity(), h, &numeric, &change);
    emit(out, &report::to_json(&doc))
}

/// `plot <config> --out <svg>`.
pub fn cmd_plot(config_path: &Path, svg_path: &Path) -> Result<()> {
    let plan = config::load(config_path)?;
    let comparison = evaluate(&plan)?;
    write_file(svg_path, &plot_svg(&plan, &comparison))
}

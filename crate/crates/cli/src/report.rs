//! JSON reports and CSV tables.

use serde::Serialize;
use siam_core::scenario::{
    BurdenResult, ComparisonReport, FiniteChange, NumericSensitivity, Scenario, Traces,
};
use siam_core::structural::StructuralSensitivity;

use crate::config::Plan;
use crate::format::{csv_number, Sig};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub grid: GridSummary,
    pub tech: TechSummary,
    pub baseline_id: String,
    pub baseline_burden: Sig,
    pub degenerate_baseline: bool,
    pub entries: Vec<EntryReport>,
}

#[derive(Debug, Serialize)]
pub struct GridSummary {
    pub t_start: Sig,
    pub t_end: Sig,
    pub n_points: usize,
    pub step: Sig,
}

#[derive(Debug, Serialize)]
pub struct TechSummary {
    pub doubling_time: Sig,
    pub permeability: Sig,
    pub anchor: Sig,
    pub growth_rate: Sig,
}

#[derive(Debug, Serialize)]
pub struct EntryReport {
    pub scenario_id: String,
    pub label: Option<String>,
    pub lag: Sig,
    pub duration: Sig,
    pub slope: Sig,
    pub inflection: Sig,
    pub inflection_shift: Sig,
    pub burden: Sig,
    pub tail_residual: Sig,
    /// `null` when the baseline burden is zero.
    pub reduction_percent: Option<Sig>,
}

impl RunReport {
    pub fn new(plan: &Plan, report: &ComparisonReport<f64>, results: &[BurdenResult<f64>]) -> Self {
        let base = plan.baseline();
        let grid = base.grid();
        let tech = base.tech();
        let entries = plan
            .scenarios
            .iter()
            .zip(&report.entries)
            .zip(results)
            .map(|((s, e), r)| EntryReport {
                scenario_id: e.scenario_id.clone(),
                label: plan.label(s.id()).map(str::to_owned),
                lag: Sig(s.policy().lag()),
                duration: Sig(s.policy().duration()),
                slope: Sig(s.policy().slope()),
                inflection: Sig(s.policy().inflection()),
                inflection_shift: Sig(e.inflection_shift),
                burden: Sig(e.burden),
                tail_residual: Sig(r.tail_residual),
                reduction_percent: e.reduction_percent.map(Sig),
            })
            .collect();
        Self {
            schema_version: REPORT_SCHEMA_VERSION,
            grid: GridSummary {
                t_start: Sig(grid.t_start()),
                t_end: Sig(grid.t_end()),
                n_points: grid.n_points(),
                step: Sig(grid.step()),
            },
            tech: TechSummary {
                doubling_time: Sig(tech.doubling_time()),
                permeability: Sig(tech.permeability()),
                anchor: Sig(tech.anchor()),
                growth_rate: Sig(tech.growth_rate()),
            },
            baseline_id: report.baseline_id.clone(),
            baseline_burden: Sig(report.baseline_burden),
            degenerate_baseline: report.degenerate_baseline,
            entries,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SensitivityReport {
    pub schema_version: u32,
    pub scenario_id: String,
    pub structural: StructuralView,
    pub numeric: NumericView,
    pub finite_change: FiniteChangeView,
}

#[derive(Debug, Serialize)]
pub struct StructuralView {
    pub definition: &'static str,
    pub d_inflection_d_lag: Sig,
    pub d_inflection_d_duration: Sig,
    pub leverage_ratio: Sig,
    pub derivation: [&'static str; 4],
}

#[derive(Debug, Serialize)]
pub struct NumericView {
    pub definition: &'static str,
    pub h: Sig,
    pub d_burden_d_lag: Sig,
    pub d_burden_d_duration: Sig,
    pub ratio: Sig,
}

#[derive(Debug, Serialize)]
pub struct FiniteChangeView {
    pub definition: &'static str,
    pub delta_lag: Sig,
    pub delta_duration: Sig,
    pub baseline_burden: Sig,
    pub lag_reduction_percent: Sig,
    pub duration_reduction_percent: Sig,
    pub ratio: Sig,
}

impl SensitivityReport {
    pub fn new(
        scenario: &Scenario<f64>,
        structural: &StructuralSensitivity,
        h: f64,
        numeric: &NumericSensitivity<f64>,
        change: &FiniteChange<f64>,
    ) -> Self {
        let d = &structural.derivation;
        Self {
            schema_version: REPORT_SCHEMA_VERSION,
            scenario_id: scenario.id().to_owned(),
            structural: StructuralView {
                definition: "exact partial derivatives of the institutional inflection point t0_I = L + D/2",
                d_inflection_d_lag: Sig(structural.d_inflection_d_lag),
                d_inflection_d_duration: Sig(structural.d_inflection_d_duration),
                leverage_ratio: Sig(structural.leverage_ratio),
                derivation: [
                    d.inflection,
                    d.d_inflection_d_lag,
                    d.d_inflection_d_duration,
                    d.leverage_ratio,
                ],
            },
            numeric: NumericView {
                definition: "central finite differences of H_total: (H(x+h) - H(x-h)) / 2h for x = L and x = D; ratio = dH/dL / dH/dD",
                h: Sig(h),
                d_burden_d_lag: Sig(numeric.d_burden_d_lag),
                d_burden_d_duration: Sig(numeric.d_burden_d_duration),
                ratio: Sig(numeric.ratio),
            },
            finite_change: FiniteChangeView {
                definition: "burden reduction (percent of baseline H_total) from L - delta_lag versus D - delta_duration; ratio = lag reduction / duration reduction",
                delta_lag: Sig(change.delta_lag),
                delta_duration: Sig(change.delta_duration),
                baseline_burden: Sig(change.baseline_burden),
                lag_reduction_percent: Sig(change.lag_reduction_percent),
                duration_reduction_percent: Sig(change.duration_reduction_percent),
                ratio: Sig(change.ratio),
            },
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

pub const TRACE_HEADER: &str = "t,S,I,gap";

/// `t,S,I,gap` rows, LF line endings.
pub fn trace_csv(traces: &Traces<f64>) -> String {
    let mut out = String::with_capacity(traces.len() * 48);
    out.push_str(TRACE_HEADER);
    out.push('\n');
    for (j, t) in traces.grid.nodes().enumerate() {
        out.push_str(&csv_number(t));
        for v in [traces.tech[j], traces.institution[j], traces.gap[j]] {
            out.push(',');
            out.push_str(&csv_number(v));
        }
        out.push('\n');
    }
    out
}

pub const SWEEP_HEADER: &str = "value,H_total,reduction";

/// `value,H_total,reduction` rows; reduction is empty when the reference burden is zero.
pub fn sweep_csv(values: &[f64], results: &[BurdenResult<f64>], reference_burden: f64) -> String {
    let mut out = String::from(SWEEP_HEADER);
    out.push('\n');
    for (v, r) in values.iter().zip(results) {
        let reduction = if reference_burden > 0.0 {
            csv_number((reference_burden - r.burden) / reference_burden * 100.0)
        } else {
            String::new()
        };
        out.push_str(&format!(
            "{},{},{}\n",
            csv_number(*v),
            csv_number(r.burden),
            reduction
        ));
    }
    out
}

use rayon::prelude::*;

use crate::error::Result;
use crate::scenario::{total_burden, BurdenResult, Scenario};
use crate::Scalar;

/// One variant row of a [`ComparisonReport`].
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonEntry<T> {
    pub scenario_id: String,
    pub burden: T,
    /// `(H_base - H) / H_base * 100`; `None` when the baseline burden is zero.
    pub reduction_percent: Option<T>,
    /// Shift of the institutional inflection point relative to the baseline, in years.
    pub inflection_shift: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport<T> {
    pub baseline_id: String,
    pub baseline_burden: T,
    /// Set when the baseline has no gap at all and reductions are undefined.
    pub degenerate_baseline: bool,
    pub entries: Vec<ComparisonEntry<T>>,
}

/// Report plus the full burden results it was built from.
#[derive(Debug, Clone, PartialEq)]
pub struct Comparison<T> {
    pub report: ComparisonReport<T>,
    pub baseline: BurdenResult<T>,
    pub variants: Vec<BurdenResult<T>>,
}

/// Evaluates the baseline and every variant, keeping the variant order.
pub fn compare<T: Scalar>(
    baseline: &Scenario<T>,
    variants: &[Scenario<T>],
) -> Result<Comparison<T>> {
    let (base_result, variant_results) = rayon::join(
        || total_burden(baseline),
        || {
            variants
                .par_iter()
                .map(total_burden)
                .collect::<Result<Vec<_>>>()
        },
    );
    let base_result = base_result?;
    let variant_results = variant_results?;

    let base_h = base_result.burden;
    let degenerate = base_h <= T::zero();
    let base_inflection = baseline.policy().inflection();
    let hundred = T::lit(100.0);

    let entries = variants
        .iter()
        .zip(&variant_results)
        .map(|(scenario, result)| ComparisonEntry {
            scenario_id: scenario.id().to_owned(),
            burden: result.burden,
            reduction_percent: (!degenerate).then(|| (base_h - result.burden) / base_h * hundred),
            inflection_shift: scenario.policy().inflection() - base_inflection,
        })
        .collect();

    Ok(Comparison {
        report: ComparisonReport {
            baseline_id: baseline.id().to_owned(),
            baseline_burden: base_h,
            degenerate_baseline: degenerate,
            entries,
        },
        baseline: base_result,
        variants: variant_results,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{InstitutionPolicy, TechModel};
    use crate::quadrature::UniformGrid;

    fn scenario(id: &str, lag: f64, duration: f64) -> Scenario<f64> {
        Scenario::on_default_grid(
            id,
            TechModel::with_doubling_time(0.5).unwrap(),
            InstitutionPolicy::new(lag, duration).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn self_comparison_is_zero() {
        let a = scenario("A", 1.67, 2.0);
        let c = compare(&a, std::slice::from_ref(&a)).unwrap();
        assert_eq!(c.report.entries[0].reduction_percent, Some(0.0));
        assert_eq!(c.report.entries[0].inflection_shift, 0.0);
        assert!(!c.report.degenerate_baseline);
    }

    #[test]
    fn order_is_preserved() {
        let a = scenario("A", 1.67, 2.0);
        let vs = vec![
            scenario("C", 1.67, 1.0),
            scenario("B", 0.67, 2.0),
            scenario("A", 1.67, 2.0),
        ];
        let c = compare(&a, &vs).unwrap();
        let ids: Vec<_> = c
            .report
            .entries
            .iter()
            .map(|e| e.scenario_id.as_str())
            .collect();
        assert_eq!(ids, ["C", "B", "A"]);
        assert_eq!(c.variants.len(), 3);
    }

    #[test]
    fn lower_permeability_shrinks_gap() {
        let a = scenario("A", 1.67, 2.0);
        let half = a.with_tech(TechModel::new(0.5, 0.5, 1.0).unwrap());
        let c = compare(&a, &[half]).unwrap();
        assert!(c.report.entries[0].reduction_percent.unwrap() > 0.0);
    }

    #[test]
    fn degenerate_baseline_is_flagged() {
        // institutions lead a slow technology over the whole window
        let grid = UniformGrid::simpson(0.0, 15.0, 1001).unwrap();
        let slow = Scenario::new(
            "Z",
            TechModel::new(10.0, 0.05, 30.0).unwrap(),
            InstitutionPolicy::new(0.0, 0.1).unwrap(),
            grid,
        )
        .unwrap();
        let c = compare(&slow, &[scenario("A", 1.67, 2.0)]).unwrap();
        assert_eq!(c.report.baseline_burden, 0.0);
        assert!(c.report.degenerate_baseline);
        assert_eq!(c.report.entries[0].reduction_percent, None);
    }
}

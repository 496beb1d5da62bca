//! Scenario evaluation: the regulatory gap between technology pressure and institutional
//! coverage, its time integral (the burden), comparisons, sweeps and calibration.

mod calibrate;
mod compare;
mod sensitivity;
mod sweep;

pub use calibrate::{calibrate_lag, days_between, DAYS_PER_YEAR};
pub use compare::{compare, Comparison, ComparisonEntry, ComparisonReport};
pub use sensitivity::{
    finite_change, sensitivity_numeric, FiniteChange, NumericSensitivity, DEFAULT_FD_STEP,
};
pub use sweep::{sweep, uniform_values, SweepParam};

use crate::error::{Error, Result};
use crate::model::{InstitutionPolicy, LogisticCurve, TechCurve, TechModel};
use crate::quadrature::{simpson_integrate, SampledFunction, UniformGrid};
use crate::Scalar;

pub const DEFAULT_T_MAX: f64 = 15.0;
pub const DEFAULT_N_POINTS: usize = 10_001;

/// `[0, 15]` with 10,001 nodes.
pub fn default_grid<T: Scalar>() -> UniformGrid<T> {
    UniformGrid::simpson(T::zero(), T::lit(DEFAULT_T_MAX), DEFAULT_N_POINTS)
        .expect("default grid is valid")
}

/// Pointwise regulatory gap `max(S(t) - I(t), 0)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GapFunction<T> {
    tech: TechCurve<T>,
    institution: LogisticCurve<T>,
}

impl<T: Scalar> GapFunction<T> {
    #[inline]
    pub fn eval(&self, t: T) -> T {
        (self.tech.eval(t) - self.institution.eval(t)).max(T::zero())
    }

    pub fn tech(&self) -> &TechCurve<T> {
        &self.tech
    }

    pub fn institution(&self) -> &LogisticCurve<T> {
        &self.institution
    }
}

pub fn gap_function<T: Scalar>(
    tech: &TechModel<T>,
    policy: &InstitutionPolicy<T>,
) -> GapFunction<T> {
    GapFunction {
        tech: tech.curve(),
        institution: policy.curve(),
    }
}

/// A named technology/policy pair evaluated on a Simpson grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario<T> {
    id: String,
    tech: TechModel<T>,
    policy: InstitutionPolicy<T>,
    grid: UniformGrid<T>,
}

impl<T: Scalar> Scenario<T> {
    pub fn new(
        id: impl Into<String>,
        tech: TechModel<T>,
        policy: InstitutionPolicy<T>,
        grid: UniformGrid<T>,
    ) -> Result<Self> {
        let id = id.into();
        if id.trim().is_empty() {
            return Err(Error::EmptyScenarioId);
        }
        grid.require_simpson()?;
        Ok(Self {
            id,
            tech,
            policy,
            grid,
        })
    }

    /// Scenario on the default `[0, 15]`, N = 10,001 grid.
    pub fn on_default_grid(
        id: impl Into<String>,
        tech: TechModel<T>,
        policy: InstitutionPolicy<T>,
    ) -> Result<Self> {
        Self::new(id, tech, policy, default_grid())
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn tech(&self) -> &TechModel<T> {
        &self.tech
    }

    pub fn policy(&self) -> &InstitutionPolicy<T> {
        &self.policy
    }

    pub fn grid(&self) -> &UniformGrid<T> {
        &self.grid
    }

    pub fn gap(&self) -> GapFunction<T> {
        gap_function(&self.tech, &self.policy)
    }

    pub fn with_id(&self, id: impl Into<String>) -> Result<Self> {
        Self::new(id, self.tech, self.policy, self.grid)
    }

    pub fn with_policy(&self, policy: InstitutionPolicy<T>) -> Self {
        Self {
            policy,
            ..self.clone()
        }
    }

    pub fn with_tech(&self, tech: TechModel<T>) -> Self {
        Self {
            tech,
            ..self.clone()
        }
    }

    pub fn with_grid(&self, grid: UniformGrid<T>) -> Result<Self> {
        grid.require_simpson()?;
        Ok(Self {
            grid,
            ..self.clone()
        })
    }
}

/// Sampled `S`, `I` and gap on a scenario grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Traces<T> {
    pub grid: UniformGrid<T>,
    pub tech: Vec<T>,
    pub institution: Vec<T>,
    pub gap: Vec<T>,
}

impl<T: Scalar> Traces<T> {
    pub fn sample(scenario: &Scenario<T>) -> Self {
        let gap_fn = scenario.gap();
        let n = scenario.grid.n_points();
        let mut tech = Vec::with_capacity(n);
        let mut institution = Vec::with_capacity(n);
        let mut gap = Vec::with_capacity(n);
        for t in scenario.grid.nodes() {
            let s = gap_fn.tech.eval(t);
            let i = gap_fn.institution.eval(t);
            tech.push(s);
            institution.push(i);
            gap.push((s - i).max(T::zero()));
        }
        Self {
            grid: scenario.grid,
            tech,
            institution,
            gap,
        }
    }

    pub fn len(&self) -> usize {
        self.gap.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gap.is_empty()
    }
}

/// Burden of one scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct BurdenResult<T> {
    pub scenario_id: String,
    /// Simpson integral of the gap over the scenario grid, in years x normalized gap.
    pub burden: T,
    /// Gap integral over the following window of equal width and spacing; measures how
    /// much burden the finite horizon cuts off.
    pub tail_residual: T,
    pub traces: Traces<T>,
}

/// Integrates the clipped gap with composite Simpson. The clip is applied per sample
/// before integration.
pub fn total_burden<T: Scalar>(scenario: &Scenario<T>) -> Result<BurdenResult<T>> {
    let traces = Traces::sample(scenario);
    let sampled = SampledFunction::new(scenario.grid, traces.gap.clone())?;
    let burden = simpson_integrate(&sampled)?;

    let gap_fn = scenario.gap();
    let tail = SampledFunction::from_fn(scenario.grid.continuation(), |t| gap_fn.eval(t))?;
    let tail_residual = simpson_integrate(&tail)?;

    Ok(BurdenResult {
        scenario_id: scenario.id.clone(),
        burden,
        tail_residual,
        traces,
    })
}

/// Burden only, without keeping traces or computing the tail.
pub fn burden_only<T: Scalar>(scenario: &Scenario<T>) -> Result<T> {
    let gap_fn = scenario.gap();
    simpson_integrate(&SampledFunction::from_fn(scenario.grid, |t| {
        gap_fn.eval(t)
    })?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn baseline() -> Scenario<f64> {
        Scenario::on_default_grid(
            "A",
            TechModel::with_doubling_time(0.5).unwrap(),
            InstitutionPolicy::new(1.67, 2.0).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn gap_at_origin() {
        let g = baseline().gap();
        // S(0) - I(0) evaluated at 30 digits
        assert!((g.eval(0.0) - 0.197_175_483_654_874_4).abs() < 1e-14);
    }

    #[test]
    fn gap_vanishes_far_out() {
        let g = baseline().gap();
        assert_eq!(g.eval(1e3), 0.0);
    }

    #[test]
    fn gap_clipped_when_institutions_lead() {
        let g = gap_function(
            &TechModel::with_doubling_time(10.0).unwrap(),
            &InstitutionPolicy::new(0.0, 0.1).unwrap(),
        );
        for k in 1..=100 {
            assert_eq!(g.eval(0.1 * k as f64), 0.0);
        }
    }

    #[test]
    fn traces_share_grid_length() {
        let r = total_burden(&baseline()).unwrap();
        assert_eq!(r.traces.len(), 10_001);
        assert_eq!(r.traces.tech.len(), 10_001);
        assert_eq!(r.traces.institution.len(), 10_001);
        assert!(r.burden > 0.0 && r.tail_residual >= 0.0);
        assert_eq!(burden_only(&baseline()).unwrap(), r.burden);
    }

    #[test]
    fn scenario_validation() {
        let s = baseline();
        assert_eq!(s.with_id(" "), Err(Error::EmptyScenarioId));
        let even = UniformGrid::new(0.0, 15.0, 10_000).unwrap();
        assert_eq!(s.with_grid(even), Err(Error::EvenGrid { n_points: 10_000 }));
    }
}

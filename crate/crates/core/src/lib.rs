//! Regulatory-gap simulator.
//!
//! A technology pressure curve `S(t)` (logistic, growth rate from a doubling time, capped by
//! a permeability) races an institution coverage curve `I(t)` (logistic, placed by a
//! legislation lag and a rollout duration). The burden is the time integral of
//! `max(S - I, 0)`, computed with composite Simpson on a uniform grid.
//!
//! Everything numeric is generic over [`Scalar`] (`f32` or `f64`); the `*64` aliases below
//! fix the double-precision instantiation used by the command line front end.

pub mod error;
pub mod model;
pub mod quadrature;
mod scalar;
pub mod scenario;
pub mod structural;

pub use error::{Error, Result};
pub use model::{
    growth_rate_from_doubling, inflection_from_policy, logistic_eval, slope_from_duration,
    InstitutionPolicy, LogisticCurve, TechCurve, TechModel,
};
pub use quadrature::{
    measure_convergence_order, simpson_integrate, trapezoid_integrate, ConvergenceOrder, Rule,
    SampledFunction, UniformGrid,
};
pub use scalar::Scalar;
pub use scenario::{
    calibrate_lag, compare, gap_function, sensitivity_numeric, sweep, total_burden, BurdenResult,
    Comparison, ComparisonEntry, ComparisonReport, GapFunction, Scenario, SweepParam, Traces,
};
pub use structural::{structural_sensitivity, StructuralSensitivity};

pub type LogisticCurve64 = LogisticCurve<f64>;
pub type TechModel64 = TechModel<f64>;
pub type InstitutionPolicy64 = InstitutionPolicy<f64>;
pub type UniformGrid64 = UniformGrid<f64>;
pub type SampledFunction64 = SampledFunction<f64>;
pub type Scenario64 = Scenario<f64>;
pub type BurdenResult64 = BurdenResult<f64>;
pub type ComparisonReport64 = ComparisonReport<f64>;

pub type LogisticCurve32 = LogisticCurve<f32>;
pub type TechModel32 = TechModel<f32>;
pub type InstitutionPolicy32 = InstitutionPolicy<f32>;
pub type UniformGrid32 = UniformGrid<f32>;
pub type Scenario32 = Scenario<f32>;

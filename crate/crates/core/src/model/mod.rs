//! Curve mathematics: the logistic form, the calibrated technology pressure curve and the
//! institution rollout curve derived from policy levers.

mod institution;
mod logistic;
mod tech;

pub use institution::{inflection_from_policy, slope_from_duration, InstitutionPolicy};
pub use logistic::{logistic_eval, LogisticCurve};
pub use tech::{growth_rate_from_doubling, TechCurve, TechModel};

//! Exact sensitivity of the institutional inflection point to the policy levers.
//!
//! The inflection point `L + D/2` is affine in both levers, so its partial derivatives are
//! constants and are returned as literals instead of being estimated.

use num_traits::Num;

/// Partial derivatives of the inflection point. Identical for every policy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StructuralSensitivity {
    /// d(t0_I)/dL
    pub d_inflection_d_lag: f64,
    /// d(t0_I)/dD
    pub d_inflection_d_duration: f64,
    /// Ratio of the two: a year of lag moves the inflection twice as far as a year of
    /// rollout duration.
    pub leverage_ratio: f64,
    pub derivation: Derivation,
}

/// Formulas each constant comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Derivation {
    pub inflection: &'static str,
    pub d_inflection_d_lag: &'static str,
    pub d_inflection_d_duration: &'static str,
    pub leverage_ratio: &'static str,
}

pub const DERIVATION: Derivation = Derivation {
    inflection: "t0_I = L + D/2",
    d_inflection_d_lag: "d(t0_I)/dL = 1",
    d_inflection_d_duration: "d(t0_I)/dD = 1/2",
    leverage_ratio: "(d(t0_I)/dL) / (d(t0_I)/dD) = 2",
};

pub fn structural_sensitivity() -> StructuralSensitivity {
    StructuralSensitivity {
        d_inflection_d_lag: 1.0,
        d_inflection_d_duration: 0.5,
        leverage_ratio: 2.0,
        derivation: DERIVATION,
    }
}

/// `lag + duration / 2` over any numeric type, including exact rationals.
pub fn inflection_point<N: Num + Copy>(lag: N, duration: N) -> N {
    lag + duration / (N::one() + N::one())
}

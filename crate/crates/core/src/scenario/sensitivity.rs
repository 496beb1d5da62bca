use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::InstitutionPolicy;
use crate::scenario::{burden_only, Scenario};
use crate::Scalar;

pub const DEFAULT_FD_STEP: f64 = 1e-3;

/// Central-difference derivatives of the burden with respect to the policy levers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericSensitivity<T> {
    pub d_burden_d_lag: T,
    pub d_burden_d_duration: T,
    /// `d_burden_d_lag / d_burden_d_duration`.
    pub ratio: T,
}

/// Central differences of the burden in `L` and `D` with step `h`.
pub fn sensitivity_numeric<T: Scalar>(base: &Scenario<T>, h: T) -> Result<NumericSensitivity<T>> {
    if !(h.is_finite() && h > T::zero()) {
        return Err(Error::domain("h", h, "must be finite and > 0"));
    }
    let p = base.policy();
    if p.lag() - h < T::zero() {
        return Err(Error::domain(
            "h",
            h,
            "central difference would make the lag negative",
        ));
    }
    if p.duration() - h <= T::zero() {
        return Err(Error::domain(
            "h",
            h,
            "central difference would make the duration non-positive",
        ));
    }

    let policies = [
        InstitutionPolicy::new(p.lag() + h, p.duration())?,
        InstitutionPolicy::new(p.lag() - h, p.duration())?,
        InstitutionPolicy::new(p.lag(), p.duration() + h)?,
        InstitutionPolicy::new(p.lag(), p.duration() - h)?,
    ];
    let h_values = policies
        .par_iter()
        .map(|q| burden_only(&base.with_policy(*q)))
        .collect::<Result<Vec<_>>>()?;

    let two_h = h + h;
    let d_lag = (h_values[0] - h_values[1]) / two_h;
    let d_duration = (h_values[2] - h_values[3]) / two_h;
    Ok(NumericSensitivity {
        d_burden_d_lag: d_lag,
        d_burden_d_duration: d_duration,
        ratio: d_lag / d_duration,
    })
}

/// Burden reductions from cutting the lag by `delta_lag` versus cutting the duration by
/// `delta_duration`, and their ratio.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiniteChange<T> {
    pub delta_lag: T,
    pub delta_duration: T,
    pub baseline_burden: T,
    pub lag_reduction_percent: T,
    pub duration_reduction_percent: T,
    /// `lag_reduction_percent / duration_reduction_percent`.
    pub ratio: T,
}

pub fn finite_change<T: Scalar>(
    base: &Scenario<T>,
    delta_lag: T,
    delta_duration: T,
) -> Result<FiniteChange<T>> {
    let p = base.policy();
    let earlier = InstitutionPolicy::new(p.lag() - delta_lag, p.duration())?;
    let faster = InstitutionPolicy::new(p.lag(), p.duration() - delta_duration)?;

    let runs = [*p, earlier, faster]
        .par_iter()
        .map(|q| burden_only(&base.with_policy(*q)))
        .collect::<Result<Vec<_>>>()?;
    let (h_base, h_lag, h_dur) = (runs[0], runs[1], runs[2]);
    if h_base <= T::zero() {
        return Err(Error::domain(
            "baseline burden",
            h_base,
            "must be > 0 to express reductions",
        ));
    }

    let hundred = T::lit(100.0);
    let lag_red = (h_base - h_lag) / h_base * hundred;
    let dur_red = (h_base - h_dur) / h_base * hundred;
    Ok(FiniteChange {
        delta_lag,
        delta_duration,
        baseline_burden: h_base,
        lag_reduction_percent: lag_red,
        duration_reduction_percent: dur_red,
        ratio: lag_red / dur_red,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::TechModel;

    fn base() -> Scenario<f64> {
        Scenario::on_default_grid(
            "A",
            TechModel::with_doubling_time(0.5).unwrap(),
            InstitutionPolicy::new(1.67, 2.0).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn both_partials_positive() {
        let s = sensitivity_numeric(&base(), DEFAULT_FD_STEP).unwrap();
        assert!(s.d_burden_d_lag > 0.0);
        assert!(s.d_burden_d_duration > 0.0);
        assert!(s.ratio >= 1.0);
    }

    #[test]
    fn step_domain_checks() {
        let b = base();
        assert!(sensitivity_numeric(&b, 0.0).is_err());
        assert!(sensitivity_numeric(&b, -1e-3).is_err());
        assert!(sensitivity_numeric(&b, 2.0).is_err());
        assert!(sensitivity_numeric(&b, 1.7).is_err());
    }

    #[test]
    fn unit_finite_change_ratio() {
        let fc = finite_change(&base(), 1.0, 1.0).unwrap();
        assert!((fc.ratio - 64.2 / 30.3).abs() < 0.03, "{}", fc.ratio);
        assert!(finite_change(&base(), 2.0, 1.0).is_err());
        assert!(finite_change(&base(), 1.0, 2.0).is_err());
    }
}

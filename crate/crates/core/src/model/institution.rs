use crate::error::{Error, Result};
use crate::model::LogisticCurve;
use crate::Scalar;

/// Rollout slope `2 ln 9 / duration`: the logit rises from `-ln 9` (10% coverage) to
/// `ln 9` (90%) over the rollout.
pub fn slope_from_duration<T: Scalar>(duration: T) -> Result<T> {
    if !(duration.is_finite() && duration > T::zero()) {
        return Err(Error::domain(
            "duration",
            duration,
            "must be finite and > 0",
        ));
    }
    Ok(T::lit(2.0) * T::ln_9() / duration)
}

/// Time of 50% institutional coverage, `lag + duration / 2`.
pub fn inflection_from_policy<T: Scalar>(policy: &InstitutionPolicy<T>) -> T {
    policy.lag + policy.duration / T::lit(2.0)
}

/// Policy levers: legislation `lag` until 10% coverage and rollout `duration` from 10% to
/// 90% coverage, both in years.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InstitutionPolicy<T> {
    lag: T,
    duration: T,
}

impl<T: Scalar> InstitutionPolicy<T> {
    pub fn new(lag: T, duration: T) -> Result<Self> {
        if !(lag.is_finite() && lag >= T::zero()) {
            return Err(Error::domain("lag", lag, "must be finite and >= 0"));
        }
        slope_from_duration(duration)?;
        Ok(Self { lag, duration })
    }

    pub fn lag(&self) -> T {
        self.lag
    }

    pub fn duration(&self) -> T {
        self.duration
    }

    pub fn slope(&self) -> T {
        T::lit(2.0) * T::ln_9() / self.duration
    }

    pub fn inflection(&self) -> T {
        inflection_from_policy(self)
    }

    pub fn with_lag(&self, lag: T) -> Result<Self> {
        Self::new(lag, self.duration)
    }

    pub fn with_duration(&self, duration: T) -> Result<Self> {
        Self::new(self.lag, duration)
    }

    /// Institution coverage curve `I(t)`.
    pub fn curve(&self) -> LogisticCurve<T> {
        LogisticCurve::new(self.slope(), self.inflection()).expect("validated by constructor")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn slope_examples() {
        assert_abs_diff_eq!(slope_from_duration(2.0_f64).unwrap(), 2.197, epsilon = 1e-3);
        assert_abs_diff_eq!(slope_from_duration(1.0_f64).unwrap(), 4.394, epsilon = 1e-3);
        let identity = 2.0 * 9.0_f64.ln();
        assert_abs_diff_eq!(slope_from_duration(identity).unwrap(), 1.0, epsilon = 1e-15);
        assert!(slope_from_duration(0.0_f64).is_err());
        assert!(slope_from_duration(-1.0_f64).is_err());
    }

    #[test]
    fn inflection_examples() {
        let base = InstitutionPolicy::new(1.67_f64, 2.0).unwrap();
        let timing = InstitutionPolicy::new(0.67_f64, 2.0).unwrap();
        let efficiency = InstitutionPolicy::new(1.67_f64, 1.0).unwrap();
        assert_abs_diff_eq!(base.inflection(), 2.67, epsilon = 1e-12);
        assert_abs_diff_eq!(timing.inflection(), 1.67, epsilon = 1e-12);
        assert_abs_diff_eq!(efficiency.inflection(), 2.17, epsilon = 1e-12);
        assert_abs_diff_eq!(
            timing.inflection() - base.inflection(),
            -1.0,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            efficiency.inflection() - base.inflection(),
            -0.5,
            epsilon = 1e-12
        );
    }

    #[test]
    fn coverage_anchors() {
        let i = InstitutionPolicy::new(1.67_f64, 2.0).unwrap().curve();
        assert_abs_diff_eq!(i.eval(1.67), 0.1, epsilon = 1e-12);
        assert_abs_diff_eq!(i.eval(3.67), 0.9, epsilon = 1e-12);
        assert_abs_diff_eq!(i.eval(2.67), 0.5, epsilon = 1e-12);
    }

    #[test]
    fn rejects_negative_lag() {
        assert!(InstitutionPolicy::new(-0.1_f64, 2.0).is_err());
        assert!(InstitutionPolicy::new(0.0_f64, 2.0).is_ok());
        assert!(InstitutionPolicy::new(1.0_f64, 0.0).is_err());
    }
}

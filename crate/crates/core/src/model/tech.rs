use crate::error::{Error, Result};
use crate::model::LogisticCurve;
use crate::Scalar;

/// Growth rate `ln 2 / doubling_time` of raw technology capability.
pub fn growth_rate_from_doubling<T: Scalar>(doubling_time: T) -> Result<T> {
    if !(doubling_time.is_finite() && doubling_time > T::zero()) {
        return Err(Error::domain(
            "doubling_time",
            doubling_time,
            "must be finite and > 0",
        ));
    }
    Ok(T::LN_2() / doubling_time)
}

/// Technology diffusion parameters.
///
/// The pressure curve is `permeability * logistic(ln 2 / doubling_time, anchor)`. The
/// anchor is the time at which raw capability reaches half of its ceiling; it defaults to
/// one year and permeability defaults to 1 (maximum pressure).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TechModel<T> {
    doubling_time: T,
    permeability: T,
    anchor: T,
}

impl<T: Scalar> TechModel<T> {
    pub fn new(doubling_time: T, permeability: T, anchor: T) -> Result<Self> {
        growth_rate_from_doubling(doubling_time)?;
        if !(permeability > T::zero() && permeability <= T::one()) {
            return Err(Error::domain(
                "permeability",
                permeability,
                "must lie in (0, 1]",
            ));
        }
        if !anchor.is_finite() {
            return Err(Error::domain("anchor", anchor, "must be finite"));
        }
        Ok(Self {
            doubling_time,
            permeability,
            anchor,
        })
    }

    /// Full-permeability model anchored at `t = 1`.
    pub fn with_doubling_time(doubling_time: T) -> Result<Self> {
        Self::new(doubling_time, T::one(), T::one())
    }

    pub fn doubling_time(&self) -> T {
        self.doubling_time
    }

    pub fn permeability(&self) -> T {
        self.permeability
    }

    pub fn anchor(&self) -> T {
        self.anchor
    }

    pub fn growth_rate(&self) -> T {
        T::LN_2() / self.doubling_time
    }

    pub fn curve(&self) -> TechCurve<T> {
        TechCurve {
            ceiling: self.permeability,
            shape: LogisticCurve::new(self.growth_rate(), self.anchor)
                .expect("validated by constructor"),
        }
    }
}

/// Calibrated pressure curve `S(t)`: a logistic scaled by the permeability ceiling.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TechCurve<T> {
    ceiling: T,
    shape: LogisticCurve<T>,
}

impl<T: Scalar> TechCurve<T> {
    #[inline]
    pub fn eval(&self, t: T) -> T {
        self.ceiling * self.shape.eval(t)
    }

    pub fn ceiling(&self) -> T {
        self.ceiling
    }

    pub fn shape(&self) -> &LogisticCurve<T> {
        &self.shape
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn growth_rate_examples() {
        assert_abs_diff_eq!(
            growth_rate_from_doubling(0.5_f64).unwrap(),
            1.386,
            epsilon = 1e-3
        );
        assert_eq!(
            growth_rate_from_doubling(1.0_f64).unwrap(),
            std::f64::consts::LN_2
        );
        assert_abs_diff_eq!(
            growth_rate_from_doubling(0.25_f64).unwrap(),
            2.7726,
            epsilon = 1e-4
        );
        assert!(growth_rate_from_doubling(0.0_f64).is_err());
        assert!(growth_rate_from_doubling(-0.5_f64).is_err());
    }

    #[test]
    fn pressure_curve_examples() {
        let s = TechModel::new(0.5_f64, 1.0, 1.0).unwrap().curve();
        assert_eq!(s.eval(1.0), 0.5);
        // exp(-ln2) = 1/2 exactly, so S(1.5) = 2/3
        assert_abs_diff_eq!(s.eval(1.5), 2.0 / 3.0, epsilon = 1e-15);

        let capped = TechModel::new(0.5_f64, 0.5, 1.0).unwrap().curve();
        assert_eq!(capped.eval(1e6), 0.5);
        assert!(capped.eval(40.0) <= 0.5);
    }

    #[test]
    fn rejects_permeability_outside_unit_interval() {
        assert!(TechModel::new(0.5_f64, 0.0, 1.0).is_err());
        assert!(TechModel::new(0.5_f64, 1.01, 1.0).is_err());
        assert!(TechModel::new(0.5_f64, f64::NAN, 1.0).is_err());
        assert!(TechModel::new(0.5_f64, 1.0, f64::NAN).is_err());
        assert!(TechModel::new(0.5_f64, 1.0, -3.0).is_ok());
    }
}

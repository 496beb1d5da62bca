use crate::error::{Error, Result};
use crate::Scalar;

/// Standard logistic `1 / (1 + exp(-slope * (t - midpoint)))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogisticCurve<T> {
    slope: T,
    midpoint: T,
}

impl<T: Scalar> LogisticCurve<T> {
    pub fn new(slope: T, midpoint: T) -> Result<Self> {
        if !(slope.is_finite() && slope > T::zero()) {
            return Err(Error::domain("slope", slope, "must be finite and > 0"));
        }
        if !midpoint.is_finite() {
            return Err(Error::domain("midpoint", midpoint, "must be finite"));
        }
        Ok(Self { slope, midpoint })
    }

    pub fn slope(&self) -> T {
        self.slope
    }

    pub fn midpoint(&self) -> T {
        self.midpoint
    }

    /// Evaluates the curve at `t`. Only the exponential of a non-positive argument is ever
    /// taken, so the result stays in `[0, 1]` however far `t` is from the midpoint.
    #[inline]
    pub fn eval(&self, t: T) -> T {
        let x = self.slope * (t - self.midpoint);
        if x >= T::zero() {
            T::one() / (T::one() + (-x).exp())
        } else {
            let e = x.exp();
            e / (T::one() + e)
        }
    }

    /// Like [`eval`](Self::eval) but rejects non-finite `t`.
    pub fn try_eval(&self, t: T) -> Result<T> {
        if !t.is_finite() {
            return Err(Error::domain("t", t, "must be finite"));
        }
        Ok(self.eval(t))
    }
}

/// One-shot evaluation with full validation of slope, midpoint and `t`.
pub fn logistic_eval<T: Scalar>(slope: T, midpoint: T, t: T) -> Result<T> {
    LogisticCurve::new(slope, midpoint)?.try_eval(t)
}

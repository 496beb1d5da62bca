//! Scalar abstraction shared by every curve, grid and integrator.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating point type the model can be evaluated in: `f32` or `f64`.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Converts a literal. Panics only if the value is not representable, which
    /// cannot happen for the finite constants used in this crate.
    fn lit(value: f64) -> Self {
        Self::from_f64(value).expect("literal representable in scalar type")
    }

    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count representable in scalar type")
    }

    /// `ln 9`, the logit distance between the 10% and 90% coverage points on either side
    /// of a logistic midpoint is `2 ln 9`.
    fn ln_9() -> Self {
        Self::lit(9.0).ln()
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

use crate::error::Result;
use crate::quadrature::SampledFunction;
use crate::Scalar;

/// Composite Simpson rule, `(h/3) (f0 + 4 f1 + 2 f2 + ... + 4 f(n-2) + f(n-1))`.
///
/// Even node counts are rejected rather than patched with an end correction.
pub fn simpson_integrate<T: Scalar>(f: &SampledFunction<T>) -> Result<T> {
    f.grid().require_simpson()?;
    Ok(simpson_weights_sum(f.values()) * f.grid().step() / T::lit(3.0))
}

/// Composite trapezoid rule.
pub fn trapezoid_integrate<T: Scalar>(f: &SampledFunction<T>) -> T {
    let v = f.values();
    let n = v.len();
    let interior = v[1..n - 1].iter().fold(T::zero(), |acc, &x| acc + x);
    (interior + (v[0] + v[n - 1]) / T::lit(2.0)) * f.grid().step()
}

fn simpson_weights_sum<T: Scalar>(v: &[T]) -> T {
    let n = v.len();
    let (mut odd, mut even) = (T::zero(), T::zero());
    for (i, &x) in v.iter().enumerate().take(n - 1).skip(1) {
        if i % 2 == 1 {
            odd = odd + x;
        } else {
            even = even + x;
        }
    }
    v[0] + v[n - 1] + T::lit(4.0) * odd + T::lit(2.0) * even
}

/// Quadrature rule selector for convergence studies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    Simpson,
    Trapezoid,
}

impl Rule {
    pub fn integrate<T: Scalar>(self, f: &SampledFunction<T>) -> Result<T> {
        match self {
            Rule::Simpson => simpson_integrate(f),
            Rule::Trapezoid => Ok(trapezoid_integrate(f)),
        }
    }
}

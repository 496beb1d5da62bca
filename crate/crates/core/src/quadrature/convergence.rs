use crate::error::{Error, Result};
use crate::quadrature::{Rule, SampledFunction, UniformGrid};
use crate::Scalar;

/// Errors below this are treated as rounding noise and left out of the fit.
const ERROR_FLOOR: f64 = 1e-14;

/// Outcome of a convergence study.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ConvergenceOrder<T> {
    /// Least-squares slope of `log(error)` against `log(step)`.
    Measured { order: T, points_used: usize },
    /// Fewer than two grids produced an error above the rounding floor, typically because
    /// the rule is exact for the integrand.
    Unmeasurable { usable_points: usize },
}

impl<T: Copy> ConvergenceOrder<T> {
    pub fn order(&self) -> Option<T> {
        match *self {
            ConvergenceOrder::Measured { order, .. } => Some(order),
            ConvergenceOrder::Unmeasurable { .. } => None,
        }
    }
}

/// Empirical order of composite Simpson on `integrand` against a known `exact` integral.
pub fn measure_convergence_order<T, F>(
    integrand: F,
    exact: T,
    grids: &[UniformGrid<T>],
) -> Result<ConvergenceOrder<T>>
where
    T: Scalar,
    F: Fn(T) -> T,
{
    measure_convergence_order_with(Rule::Simpson, integrand, exact, grids)
}

pub fn measure_convergence_order_with<T, F>(
    rule: Rule,
    integrand: F,
    exact: T,
    grids: &[UniformGrid<T>],
) -> Result<ConvergenceOrder<T>>
where
    T: Scalar,
    F: Fn(T) -> T,
{
    if grids.len() < 3 {
        return Err(Error::Convergence("need at least three grids"));
    }
    if grids.windows(2).any(|w| w[1].step() >= w[0].step()) {
        return Err(Error::Convergence("grid steps must be strictly decreasing"));
    }
    for g in grids {
        g.require_simpson()?;
    }

    // f32 cannot resolve 1e-14, so the floor scales with the type's precision.
    let scale = T::one().max(exact.abs());
    let floor = T::lit(ERROR_FLOOR).max(T::epsilon() * T::lit(16.0) * scale);

    let mut points = Vec::with_capacity(grids.len());
    for g in grids {
        let f = SampledFunction::from_fn(*g, &integrand)?;
        let err = (rule.integrate(&f)? - exact).abs();
        if err > floor {
            points.push((g.step().ln(), err.ln()));
        }
    }

    if points.len() < 2 {
        return Ok(ConvergenceOrder::Unmeasurable {
            usable_points: points.len(),
        });
    }
    Ok(ConvergenceOrder::Measured {
        order: least_squares_slope(&points),
        points_used: points.len(),
    })
}

fn least_squares_slope<T: Scalar>(points: &[(T, T)]) -> T {
    let n = T::from_count(points.len());
    let mean_x = points.iter().fold(T::zero(), |a, p| a + p.0) / n;
    let mean_y = points.iter().fold(T::zero(), |a, p| a + p.1) / n;
    let (sxy, sxx) = points
        .iter()
        .fold((T::zero(), T::zero()), |(sxy, sxx), &(x, y)| {
            let dx = x - mean_x;
            (sxy + dx * (y - mean_y), sxx + dx * dx)
        });
    sxy / sxx
}

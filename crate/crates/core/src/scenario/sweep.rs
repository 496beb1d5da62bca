use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::{InstitutionPolicy, TechModel};
use crate::scenario::{total_burden, BurdenResult, Scenario};
use crate::Scalar;

/// Scenario parameter a sweep varies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SweepParam {
    Lag,
    Duration,
    DoublingTime,
    Permeability,
}

impl SweepParam {
    pub const ALL: [SweepParam; 4] = [
        SweepParam::Lag,
        SweepParam::Duration,
        SweepParam::DoublingTime,
        SweepParam::Permeability,
    ];

    /// Short name used on the command line and in output headers.
    pub fn symbol(self) -> &'static str {
        match self {
            SweepParam::Lag => "L",
            SweepParam::Duration => "D",
            SweepParam::DoublingTime => "T_d",
            SweepParam::Permeability => "alpha",
        }
    }

    pub fn value_of<T: Scalar>(self, scenario: &Scenario<T>) -> T {
        match self {
            SweepParam::Lag => scenario.policy().lag(),
            SweepParam::Duration => scenario.policy().duration(),
            SweepParam::DoublingTime => scenario.tech().doubling_time(),
            SweepParam::Permeability => scenario.tech().permeability(),
        }
    }

    /// Copy of `base` with this parameter set to `value`, validated.
    pub fn apply<T: Scalar>(self, base: &Scenario<T>, value: T) -> Result<Scenario<T>> {
        let tech = base.tech();
        let policy = base.policy();
        Ok(match self {
            SweepParam::Lag => base.with_policy(InstitutionPolicy::new(value, policy.duration())?),
            SweepParam::Duration => base.with_policy(InstitutionPolicy::new(policy.lag(), value)?),
            SweepParam::DoublingTime => {
                base.with_tech(TechModel::new(value, tech.permeability(), tech.anchor())?)
            }
            SweepParam::Permeability => {
                base.with_tech(TechModel::new(tech.doubling_time(), value, tech.anchor())?)
            }
        })
    }
}

impl fmt::Display for SweepParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for SweepParam {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "L" | "lag" => Ok(SweepParam::Lag),
            "D" | "duration" => Ok(SweepParam::Duration),
            "T_d" | "doubling_time" => Ok(SweepParam::DoublingTime),
            "alpha" | "permeability" => Ok(SweepParam::Permeability),
            other => Err(format!(
                "unknown sweep parameter {other:?}, expected one of L, D, T_d, alpha"
            )),
        }
    }
}

/// `steps` evenly spaced values from `from` to `to`, both endpoints included exactly.
pub fn uniform_values<T: Scalar>(from: T, to: T, steps: usize) -> Result<Vec<T>> {
    if steps < 2 {
        return Err(Error::domain("steps", steps, "must be >= 2"));
    }
    if !(from.is_finite() && to.is_finite()) {
        return Err(Error::domain(
            "range",
            format!("{from}..{to}"),
            "must be finite",
        ));
    }
    let last = steps - 1;
    let width = to - from;
    Ok((0..steps)
        .map(|i| {
            if i == last {
                to
            } else {
                from + width * T::from_count(i) / T::from_count(last)
            }
        })
        .collect())
}

/// Evaluates `base` once per value of `param`, in order.
///
/// Every value is validated before anything is computed; one bad value fails the whole
/// sweep.
pub fn sweep<T: Scalar>(
    base: &Scenario<T>,
    param: SweepParam,
    values: &[T],
) -> Result<Vec<BurdenResult<T>>> {
    let scenarios = values
        .iter()
        .map(|&v| param.apply(base, v))
        .collect::<Result<Vec<_>>>()?;
    scenarios.par_iter().map(total_burden).collect()
}

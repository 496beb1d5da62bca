use thiserror::Error;

/// Errors raised by model construction, quadrature and scenario evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter is outside the domain of the operation.
    #[error("{name} = {value} is out of domain: {reason}")]
    Domain {
        name: &'static str,
        value: String,
        reason: &'static str,
    },

    /// Composite Simpson needs an even number of panels, i.e. an odd node count.
    #[error("composite Simpson requires an odd number of grid points, got {n_points}")]
    EvenGrid { n_points: usize },

    #[error("grid needs at least {min} points, got {n_points}")]
    GridTooSmall { n_points: usize, min: usize },

    #[error("grid interval [{start}, {end}] is empty or not finite")]
    GridInterval { start: String, end: String },

    #[error("sample count {values} does not match grid size {n_points}")]
    LengthMismatch { values: usize, n_points: usize },

    #[error("sample {index} is not finite")]
    NonFiniteSample { index: usize },

    #[error("scenario id must be non-empty")]
    EmptyScenarioId,

    #[error("duplicate scenario id {0:?}")]
    DuplicateScenarioId(String),

    #[error("convergence study: {0}")]
    Convergence(&'static str),
}

impl Error {
    pub(crate) fn domain(name: &'static str, value: impl ToString, reason: &'static str) -> Self {
        Error::Domain {
            name,
            value: value.to_string(),
            reason,
        }
    }

    /// True for violations of the quadrature contract (node count, parity, sample shape)
    /// as opposed to bad model or grid parameters.
    pub fn is_numerical_contract(&self) -> bool {
        matches!(
            self,
            Error::EvenGrid { .. }
                | Error::GridTooSmall { .. }
                | Error::LengthMismatch { .. }
                | Error::NonFiniteSample { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

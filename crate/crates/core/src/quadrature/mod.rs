//! Integration of sampled functions on uniform grids.

mod convergence;
mod grid;
mod rules;

pub use convergence::{
    measure_convergence_order, measure_convergence_order_with, ConvergenceOrder,
};
pub use grid::{SampledFunction, UniformGrid};
pub use rules::{simpson_integrate, trapezoid_integrate, Rule};

//! Batch front end for the regulatory-gap simulator.
//!
//! Exit statuses: 0 success, 2 configuration error, 3 numerical contract violation,
//! 4 output error.

pub mod commands;
pub mod config;
pub mod error;
pub mod format;
pub mod report;
pub mod svg;

pub use error::{CliError, Result};

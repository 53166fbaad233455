//! Library half of the `qlogic` command: scenario files, truth reports,
//! Hasse-diagram export and the subcommand implementations.

pub mod commands;
pub mod dot;
pub mod error;
pub mod report;
pub mod scenario;

pub use error::{CliError, CliResult};

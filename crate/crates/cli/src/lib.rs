//! Command implementations and file formats behind the `arago` binary.

pub mod commands;
pub mod config;
pub mod error;
pub mod formats;

pub use error::{CliError, CliResult};

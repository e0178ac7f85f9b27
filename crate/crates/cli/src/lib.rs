//! Command-line front end: configuration files, plain-text outputs and the subcommands.

pub mod commands;
pub mod config;
pub mod error;
pub mod output;

pub use commands::{run, Cli};
pub use config::RunConfig;
pub use error::{CliError, CliResult};

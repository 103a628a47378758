//! Command-line surface: JSON input and output, subcommands and the
//! acceptance suite.

pub mod acceptance;
pub mod commands;
pub mod error;
pub mod json;

pub use commands::{run, Cli, Command, Outcome};
pub use error::CliError;

//! Command-line front end for the stacky checks.

pub mod commands;
pub mod error;
pub mod expr;
pub mod render;
pub mod ringspec;

pub use commands::{run, CommandResult, Format};
pub use error::CliError;

//! Command-line front end: expression syntax, evaluation and subcommands.

pub mod app;
pub mod eval;
pub mod expr;

pub use app::{run, Cli, CliError, Outcome};

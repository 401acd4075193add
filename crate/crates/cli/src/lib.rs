//! Command-line front-end for `leavitt-core`.

pub mod commands;
pub mod deriv_file;
pub mod syntax;

pub use commands::{run, Cli, Command, Outcome};

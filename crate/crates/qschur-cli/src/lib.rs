//! Command-line front end for `qschur`: argument handling, output formats
//! and the verification suites behind `qschur check`.

pub mod cli;
pub mod commands;
pub mod format;
pub mod parse;
pub mod suites;

pub use cli::{Cli, Command, Config, Format, Suite};
pub use commands::{Outcome, run};

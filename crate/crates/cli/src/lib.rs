//! Command-line front end for `iwforms` scenario files.
//!
//! The binary runs the queries of a `.iw` file, or a subset of them chosen
//! by subcommand, and prints a text or JSON report. Exit status is 0 when
//! every verdict matches its expectation, 1 when some verdict does not, and
//! 2 for bad input or queries that could not be carried out.

pub mod app;
pub mod demos;
pub mod report;

pub use app::{execute, run_scenario, Cli, Command, InputError, Outcome, Selection};
pub use report::{digest, Report, SCHEMA_VERSION};

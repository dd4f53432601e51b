//! Command-line front end for `homtool-core`: graph file formats, named
//! graphs, seeded random graphs, verification suites and run reports.

pub mod caps_env;
pub mod cli;
pub mod error;
pub mod format;
pub mod named;
pub mod random;
pub mod report;
pub mod suites;

pub use error::{CliError, ParseError};
pub use report::RunReport;
pub use suites::{run_suite, CaseResult, SuiteConfig, SUITES};

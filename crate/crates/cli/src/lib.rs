//! Verification suites and reports for the `yangian-kit` command-line tool.

pub mod report;
pub mod suites;

pub use report::{CheckRecord, Status, SuiteReport};
pub use suites::{run_suite, SuiteName, SuiteParams};

//! Command-line frontend for the `duadic` library: parameter scans, single
//! constructions with full reports, and verification suites.

pub mod commands;
pub mod error;
pub mod report;
pub mod spec;
pub mod verify;

pub use commands::{cmd_construct, cmd_scan, ConstructArgs, Family, Options, ScanArgs};
pub use error::{CliError, Result};
pub use report::CodeReport;

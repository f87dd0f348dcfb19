//! Command-line surface of `chowlim-core`: JSON group specifications,
//! reports, the individual commands and the acceptance suite.

pub mod commands;
pub mod error;
pub mod report;
pub mod spec;
pub mod verify;

pub use commands::Outcome;
pub use error::{CliError, CliResult};
pub use report::Report;
pub use spec::GroupSpec;

//! Std front end for `qsum-core`: CSV output, parallel sweeps, the
//! verification suites and the command implementations behind the `qsum`
//! binary.

pub mod commands;
pub mod format;
pub mod parallel;
pub mod verify;

mod error;

pub use error::CliError;

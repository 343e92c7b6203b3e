//! Command-line front end for `csjack-core`: JSON and text formats, the
//! verification suites and the `csjack` binary's argument handling.

pub mod cli;
pub mod error;
pub mod format;
pub mod verify;

pub use error::CliError;

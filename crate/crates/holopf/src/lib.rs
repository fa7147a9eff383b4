//! File formats, reports and the command-line interface on top of
//! `holopf-core`.

pub mod cli;
pub mod error;
pub mod formats;
pub mod report;
pub mod selftest;

pub use error::CliError;

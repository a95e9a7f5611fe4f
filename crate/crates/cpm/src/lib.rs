//! Census, file formats and the command-line interface for CPM graphs.
//!
//! The graph theory lives in `cpm-core`; this crate adds the parts that need
//! `std`: a parallel census, text and JSON formats, and the `cpm` binary.

pub mod census;
pub mod cli;
mod error;
pub mod formats;

pub use error::{CliError, Result};

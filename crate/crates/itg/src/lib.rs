//! File formats, corpus reports and the `itg` command line on top of
//! `itg-core`.

pub mod cli;
pub mod error;
pub mod formats;
pub mod report;

pub use error::{Error, Result};

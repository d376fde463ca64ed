//! Command-line front end, file formats and the verification harness for
//! `triangle-forge-core`.

pub mod cli;
pub mod format;
pub mod verification;

//! Command-line front end for the exact Segre calculators.
//!
//! All arithmetic is exact: values print as decimal integers when the
//! denominator is 1 and as num/den otherwise, never as floating point.
//! Exit codes: 0 success, 1 failed verification properties, 2 usage errors,
//! 3 degenerate inputs or empty grids, 4 I/O failures.

pub mod cli;
pub mod commands;
pub mod output;
pub mod ranges;
pub mod verify;

pub use commands::run_cli;

//! Command line front end: compression jobs with self-describing headers,
//! string generators, stats output and the comparison harness.

pub mod app;
pub mod compare;
pub mod suite;

pub use app::{run, ExitCode};
pub use compare::{run_compare, Chk, Entry, Report, Row};
pub use suite::{Suite, DEFAULT_SUITE};

//! Sweeps, verification suites and query reports built on [`rigidity_core`].
//!
//! Everything here needs `std`: thread pools for sweeps, CSV and JSON output,
//! wall-clock timing. The arithmetic itself lives in the core crate.

mod error;
pub mod parallel;
pub mod query;
pub mod sweep;
pub mod verify;

pub use error::Error;
pub use query::{query, QueryReport};
pub use sweep::{sweep, SweepOptions, SweepRow};
pub use verify::{Suite, SuiteOptions, VerificationReport, Violation};

/// Schema tag written at the top of every JSON document.
pub const SCHEMA: &str = "rigidity-sieve/1";

//! Harness layer tying the computational crates together.
//!
//! This crate holds the pieces the `mordell` binary is built from:
//!
//! * exhaustive integral-point enumeration with the `sqrt(x)/|B|` quality
//!   measure ([`enumerate`]),
//! * rank-1 structure reports over shipped generator fixtures ([`report`]),
//! * deterministic, sharded consistency sweeps over coefficient ranges
//!   ([`sweep`]),
//! * schema-versioned JSONL result records ([`record`]).

pub mod enumerate;
pub mod error;
pub mod record;
pub mod report;
pub mod sweep;

pub use enumerate::{enumerate_integral_points, hall_measure, EnumerationResult};
pub use error::{HarnessError, Result};
pub use record::{from_jsonl, to_jsonl, write_jsonl, ResultRecord, ARTIFACT_VERSION};
pub use report::{generator_fixture, rank1_report, GENERATOR_FIXTURES};
pub use sweep::{sweep, SweepConfig, CHECK_NAMES};

//! Library side of the `wavesort` binary: trial running, aggregation, table
//! emission, and the verification battery behind the CLI subcommands.

pub mod commands;
pub mod emit;
pub mod report;
pub mod verify;

pub use emit::{emit_pmfs, emit_reports, Format, CSV_HEADER};
pub use report::{run_trials, run_trials_with, BenchReport, MetricSummary, TrialError};

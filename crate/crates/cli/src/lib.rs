//! Report builders behind the `iwahori` command line tool. Every command
//! returns a [`Report`]: a list of named checks plus a data payload, with a
//! versioned schema and deterministic rendering.

pub mod commands;
pub mod config;
pub mod report;

pub use commands::{
    cmd_act, cmd_corollary, cmd_oracle, cmd_partition, cmd_relations, cmd_theorem, full_suite, parse_point,
};
pub use config::RunConfig;
pub use report::{Check, Format, Report, Status, Summary, REPORT_SCHEMA};

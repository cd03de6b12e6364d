//! Experiment harness for `aquawave`: configuration, trial execution,
//! CSV/text reports, the bundled test scene and the `aquawave` CLI.

pub mod cli;
pub mod config;
pub mod error;
pub mod report;
pub mod scene;
pub mod trial;

pub use error::BenchError;

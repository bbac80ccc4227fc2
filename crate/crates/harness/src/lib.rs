//! Seeded multi-run experiment campaigns over the `swarmkit-core`
//! optimizers: config loading, parallel execution, statistics, result
//! files and the ranking report.

pub mod config;
pub mod demo;
mod error;
pub mod experiment;
pub mod export;
pub mod report;
pub mod seed;
pub mod stats;

pub use config::{load_config, load_tsp_config, parse_config, ExperimentConfig};
pub use error::ConfigError;
pub use experiment::{run_experiment, Campaign, RunOutput, RunRecord};
pub use stats::{summarize, SummaryRow};

//! Verification campaigns, single queries, elimination and graph export behind the `gkspec`
//! command line.

mod checks;
mod cli;
mod config;
mod descriptor;
mod error;
mod grid;
mod query;
mod report;

pub use checks::{
    base_name, expected_window, run_check, small_totient_indices, targets, verify, verify_with,
    EXPECTED_PATTERNS, SMALL_TOTIENT_SET,
};
pub use cli::run;
pub use config::{config_flags, expand_config, parse_config};
pub use descriptor::{parse_descriptor, GRAMMAR};
pub use error::{CliError, Result};
pub use grid::{
    group_grid, parse_kinds, parse_list, Check, Clamp, GridSpec, Kind, FIELDS, GROUP_N_MAX,
    TARGET_FIELDS,
};
pub use query::{eliminate_pair, eliminate_scan, export, query, ExportFormat, Query};
pub use report::{Failure, GridSummary, Status, VerificationReport};

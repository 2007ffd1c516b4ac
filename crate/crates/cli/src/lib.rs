//! Front end: run configuration, `build` exports and `check` suites with
//! JSON reports and exit codes.

pub mod config;
pub mod error;
pub mod run;

pub use config::{CheckId, ComplexChoice, RunConfig, MAX_SYMBOLIC_N, SPECIALIZATIONS};
pub use error::CliError;
pub use run::{append_reports, cmd_build, cmd_check, exit_code, render_text, run_check, CERTIFICATE_TRIALS, TRANSVECTIONS};

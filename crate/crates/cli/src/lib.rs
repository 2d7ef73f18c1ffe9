//! Scenario runner for `hup_core`: loads TOML scenarios, evaluates the
//! requested construction or check, and renders a deterministic report or
//! CSV grid.

pub mod error;
pub mod grid;
pub mod report;
pub mod runner;
pub mod scenario;

pub use error::{LabError, LabResult, EXIT_CHECK_FAIL, EXIT_IO, EXIT_PASS, EXIT_USAGE};
pub use grid::{emit_grid, evaluate_grid, Grid, CSV_HEADER};
pub use report::{Check, Comparator, Report};
pub use runner::run_scenario;
pub use scenario::Scenario;

//! Standard-library companion to [`ratcurves_core`]: JSON/CSV/table output,
//! parameter sweeps, parallel verification over `(g, k)` grids, the
//! published-example fixture runner, and the `ratcurves` command line.

pub mod cli;
pub mod fixtures;
pub mod report;
pub mod sweep;
pub mod verify;

pub use ratcurves_core;
pub use report::{OutputFormat, ReportError};

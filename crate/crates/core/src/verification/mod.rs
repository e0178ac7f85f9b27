//! Executable checks of the quantitative estimates and measurements of the two limits.

pub mod gronwall;
pub mod identities;
pub mod inequalities;
pub mod iron;
mod report;
pub mod studies;
pub mod trace_check;

pub use report::{Check, RateTable, Report};

//! Identity suites, table emission and parameter files.

pub mod fixtures;
pub mod report;
pub mod suites;
pub mod table;

pub use report::{Check, Counterexample, IdentityReport, Verdict};
pub use suites::{run_suite, SUITE_NAMES};
pub use table::{
    emit_table, eval_family, eval_named, load_params, render_table, table_rows, Family, Format,
    TableRequest, TableRow,
};

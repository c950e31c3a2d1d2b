//! Census files, parallel sweeps and reports.

mod census;
mod report;
mod run;
mod single;

pub use census::{parse_census, read_census, CensusEntry, CensusError, InputKind};
pub use report::{
    evaluate, Check, CheckSet, DecompositionSummary, EntryOutcome, LinkReport, UnknownCheck,
};
pub use run::{
    render_report, run_census, sweep, CensusOptions, ReportFormat, Sweep, EXIT_INPUT, EXIT_OK,
    EXIT_VIOLATIONS,
};
pub use single::{cli_single, SingleError, SingleInput, SingleOutput, Subcommand};

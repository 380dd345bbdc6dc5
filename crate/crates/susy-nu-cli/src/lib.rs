//! Library half of the `susy-nu` command-line tool: run configuration, the
//! subcommand implementations, and the discrepancy ledger. The binary in
//! `main.rs` is a thin argument-parsing wrapper so integration tests can
//! drive everything in-process.

pub mod commands;
pub mod config;
pub mod format;
pub mod ledger;

pub use commands::{
    cmd_figure, cmd_spectrum, cmd_verify, cmd_wavefunction, figure_csv, ledger_csv, spectrum_csv,
    to_json, wavefunction_csv, FigureData, VerifyReport,
};
pub use config::{Family, FamilyParams, Method, OutputFormat, RunConfig, SignArg, UnitsPreset};
pub use ledger::{LedgerEntry, Verdict};

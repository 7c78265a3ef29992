//! Command-line and reporting layer over `quasicover-core`.
//!
//! Adds what the core leaves out: worker threads and wall-clock timing for
//! verification runs, text and JSON reports, ASCII diagrams, and the CLI.

pub mod cli;
pub mod diagram;
pub mod report;
pub mod runner;

pub use report::VerificationReport;
pub use runner::{
    check_fact_periodic, check_lemma_cover_seed, check_lemma_not_seed, check_theorem_quasi,
    run_property, verify, RunOptions,
};

//! Census, reports and command-line support on top of `bricklab-core`.

pub mod cache;
pub mod census;
pub mod cli;
pub mod error;
pub mod ingest;
pub mod oracle;
pub mod report;
pub mod selftest;

pub use census::{run_census, Census, CensusConfig, CensusRecord, Check, Source, VerdictSummary};
pub use error::{CensusError, Result};
pub use ingest::{ingest_graph6, Graph6Reader};
pub use report::{emit_report, Format};

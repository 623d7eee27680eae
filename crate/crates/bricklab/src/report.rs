//! Report emission.
//!
//! JSONL: one record object per line, then `{"summary": ...}` on the last
//! line. CSV: the header below, one row per record with the graph6 field
//! always quoted, then the summary as pretty-printed JSON on `# ` comment
//! lines.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use crate::census::{CensusRecord, VerdictSummary};
use crate::error::{CensusError, Result};

pub const CSV_HEADER: [&str; 9] = [
    "graph6",
    "n",
    "edges",
    "claw_free",
    "brick",
    "b_invariant",
    "solitary",
    "every_b_invariant_solitary",
    "verdicts",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Jsonl,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Format, String> {
        match s.to_ascii_lowercase().as_str() {
            "jsonl" => Ok(Format::Jsonl),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format {other:?}, expected jsonl or csv")),
        }
    }
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    summary: &'a VerdictSummary,
}

pub fn write_jsonl<W: Write>(mut w: W, summary: &VerdictSummary, records: &[CensusRecord]) -> io::Result<()> {
    for r in records {
        serde_json::to_writer(&mut w, r)?;
        w.write_all(b"\n")?;
    }
    serde_json::to_writer(&mut w, &SummaryLine { summary })?;
    w.write_all(b"\n")?;
    w.flush()
}

pub fn write_csv<W: Write>(w: W, summary: &VerdictSummary, records: &[CensusRecord]) -> Result<(), csv::Error> {
    let mut out = csv::WriterBuilder::new()
        .quote_style(csv::QuoteStyle::NonNumeric)
        .from_writer(w);
    out.write_record(CSV_HEADER)?;
    for r in records {
        out.write_record([
            r.graph6.clone(),
            r.n.to_string(),
            r.edges.to_string(),
            r.claw_free.to_string(),
            r.brick.to_string(),
            r.b_invariant.to_string(),
            r.solitary.to_string(),
            r.every_b_invariant_solitary.to_string(),
            r.verdicts.join(";"),
        ])?;
    }
    out.flush()?;
    let mut w = out.into_inner().map_err(|e| csv::Error::from(e.into_error()))?;
    let pretty = serde_json::to_string_pretty(summary).map_err(io::Error::from)?;
    for line in pretty.lines() {
        writeln!(w, "# {line}")?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_report<W: Write>(w: W, format: Format, summary: &VerdictSummary, records: &[CensusRecord]) -> Result<(), csv::Error> {
    match format {
        Format::Jsonl => Ok(write_jsonl(w, summary, records)?),
        Format::Csv => write_csv(w, summary, records),
    }
}

/// Writes the report to `path`, replacing any existing file.
pub fn emit_report(path: &Path, format: Format, summary: &VerdictSummary, records: &[CensusRecord]) -> Result<()> {
    let file = File::create(path).map_err(|e| CensusError::io(path, e))?;
    write_report(BufWriter::new(file), format, summary, records).map_err(|source| CensusError::Csv {
        path: path.to_path_buf(),
        source,
    })
}

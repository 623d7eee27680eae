//! Reading graph6 files, one graph per line.

use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use bricklab_core::graph6::parse_graph6;
use bricklab_core::{Graph, Graph6Error};

use crate::error::{CensusError, Result};

/// A line that failed to decode.
#[derive(Debug)]
pub struct BadLine {
    /// 1-based.
    pub line: usize,
    pub error: Graph6Error,
}

/// Iterator over the graphs of a graph6 stream. Blank lines and a leading
/// `>>graph6<<` header alone on a line are skipped.
pub struct Graph6Reader<R> {
    lines: std::io::Lines<R>,
    line: usize,
}

impl<R: BufRead> Graph6Reader<R> {
    pub fn new(reader: R) -> Self {
        Graph6Reader {
            lines: reader.lines(),
            line: 0,
        }
    }
}

impl<R: BufRead> Iterator for Graph6Reader<R> {
    type Item = std::io::Result<Result<(usize, Graph), BadLine>>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let text = match self.lines.next()? {
                Ok(t) => t,
                Err(e) => return Some(Err(e)),
            };
            self.line += 1;
            let body = text.trim_end_matches(['\r', '\n']);
            if body.trim().is_empty() || body == ">>graph6<<" {
                continue;
            }
            let line = self.line;
            return Some(Ok(parse_graph6(body)
                .map(|g| (line, g))
                .map_err(|error| BadLine { line, error })));
        }
    }
}

#[derive(Debug, Default)]
pub struct Ingested {
    /// Decoded graphs with their line numbers.
    pub graphs: Vec<(usize, Graph)>,
    pub skipped: Vec<BadLine>,
}

/// Decodes every line of a graph6 file. Malformed lines are collected in
/// `skipped` and do not stop the read.
pub fn ingest_graph6(path: impl AsRef<Path>) -> Result<Ingested> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| CensusError::io(path, e))?;
    let mut out = Ingested::default();
    for item in Graph6Reader::new(BufReader::new(file)) {
        match item.map_err(|e| CensusError::io(path, e))? {
            Ok(g) => out.graphs.push(g),
            Err(bad) => out.skipped.push(bad),
        }
    }
    Ok(out)
}

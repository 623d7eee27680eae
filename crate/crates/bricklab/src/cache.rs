//! Append-only JSONL cache of edge-class summaries, keyed by canonical
//! graph6.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, ErrorKind, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{CensusError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CachedClasses {
    pub b_invariant: usize,
    pub solitary: usize,
    pub every_b_invariant_solitary: bool,
}

#[derive(Serialize, Deserialize)]
struct Line {
    graph6: String,
    #[serde(flatten)]
    classes: CachedClasses,
}

#[derive(Debug)]
pub struct ResultCache {
    path: PathBuf,
    known: BTreeMap<String, CachedClasses>,
    fresh: BTreeMap<String, CachedClasses>,
    /// Lines that could not be parsed on load.
    pub malformed: usize,
}

impl ResultCache {
    /// Loads `path`, which need not exist yet. Later lines win over
    /// earlier ones.
    pub fn open(path: impl Into<PathBuf>) -> Result<ResultCache> {
        let path = path.into();
        let mut cache = ResultCache {
            path,
            known: BTreeMap::new(),
            fresh: BTreeMap::new(),
            malformed: 0,
        };
        let file = match File::open(&cache.path) {
            Ok(f) => f,
            Err(e) if e.kind() == ErrorKind::NotFound => return Ok(cache),
            Err(e) => return Err(CensusError::io(&cache.path, e)),
        };
        for line in BufReader::new(file).lines() {
            let line = line.map_err(|e| CensusError::io(&cache.path, e))?;
            if line.trim().is_empty() {
                continue;
            }
            match serde_json::from_str::<Line>(&line) {
                Ok(l) => {
                    cache.known.insert(l.graph6, l.classes);
                }
                Err(_) => cache.malformed += 1,
            }
        }
        Ok(cache)
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn get(&self, graph6: &str) -> Option<CachedClasses> {
        self.known.get(graph6).or_else(|| self.fresh.get(graph6)).copied()
    }

    pub fn len(&self) -> usize {
        self.known.len() + self.fresh.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Number of entries added since the cache was opened.
    pub fn fresh_len(&self) -> usize {
        self.fresh.len()
    }

    pub fn insert(&mut self, graph6: String, classes: CachedClasses) {
        if !self.known.contains_key(&graph6) {
            self.fresh.insert(graph6, classes);
        }
    }

    /// Appends the new entries in key order.
    pub fn flush(&mut self) -> Result<()> {
        if self.fresh.is_empty() {
            return Ok(());
        }
        let file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .map_err(|e| CensusError::io(&self.path, e))?;
        let mut w = BufWriter::new(file);
        for (graph6, classes) in std::mem::take(&mut self.fresh) {
            let line = Line { graph6, classes };
            serde_json::to_writer(&mut w, &line).map_err(|e| CensusError::io(&self.path, e.into()))?;
            w.write_all(b"\n").map_err(|e| CensusError::io(&self.path, e))?;
            self.known.insert(line.graph6, line.classes);
        }
        w.flush().map_err(|e| CensusError::io(&self.path, e))
    }
}

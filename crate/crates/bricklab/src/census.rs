//! The brick census over small graphs.
//!
//! Every input graph runs through the stages connected, minimum degree 3,
//! 3-connected, bicritical and (optionally) claw-free. Survivors are bricks;
//! their edges are classified and the selected checks are evaluated over
//! the whole set. Workers only compute; the merge and every ordering
//! decision happen on the calling thread, so the summary does not depend
//! on the worker count.

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use bricklab_core::catalog::{catalog, identify, FAMILY_G, THIN_BRICKS};
use bricklab_core::generate::{check_order, children, seed, GenerationFilter};
use bricklab_core::graph6::parse_graph6;
use bricklab_core::matching::is_bicritical;
use bricklab_core::{canonical_form, classify_all, CanonicalForm, Graph};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cache::{CachedClasses, ResultCache};
use crate::error::{CensusError, Result};
use crate::ingest::ingest_graph6;

/// Environment variable holding the default worker count.
pub const JOBS_ENV: &str = "BRICKLAB_JOBS";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    /// Every graph on at most `max_n` vertices from the built-in generator.
    Generate { max_n: usize },
    /// graph6 files; graphs above `max_n` vertices are dropped if it is set.
    Files { paths: Vec<PathBuf>, max_n: Option<usize> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    /// Claw-free bricks other than K4 and the prism whose b-invariant edges
    /// are all solitary are exactly the expected set.
    Main,
    /// Every brick outside the four thin exceptions has at least two
    /// b-invariant edges.
    Thm11,
}

#[derive(Debug, Clone)]
pub struct CensusConfig {
    pub source: Source,
    /// Keep only claw-free bricks.
    pub claw_free: bool,
    pub checks: Vec<Check>,
    pub jobs: usize,
    pub cache: Option<PathBuf>,
    /// Expected answer of the main check, compared by certificate.
    pub expected: Vec<Graph>,
}

impl CensusConfig {
    pub fn generate(max_n: usize) -> CensusConfig {
        CensusConfig {
            source: Source::Generate { max_n },
            claw_free: false,
            checks: vec![Check::Main],
            jobs: default_jobs(),
            cache: None,
            expected: default_expected(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.checks.is_empty() {
            return Err(CensusError::Usage("no check selected".into()));
        }
        if self.jobs == 0 {
            return Err(CensusError::Usage("jobs must be at least 1".into()));
        }
        match &self.source {
            Source::Generate { max_n } => check_order(*max_n)?,
            Source::Files { paths, .. } if paths.is_empty() => {
                return Err(CensusError::Usage("no input file given".into()))
            }
            Source::Files { .. } => {}
        }
        Ok(())
    }
}

/// The four members of 𝒢.
pub fn default_expected() -> Vec<Graph> {
    FAMILY_G
        .iter()
        .map(|name| catalog(name).expect("family member").graph)
        .collect()
}

/// Worker count from [`JOBS_ENV`], else the available parallelism.
pub fn default_jobs() -> usize {
    std::env::var(JOBS_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&j| j > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    /// Canonical graph6.
    pub graph6: String,
    pub n: usize,
    pub edges: usize,
    pub claw_free: bool,
    pub brick: bool,
    pub b_invariant: usize,
    pub solitary: usize,
    pub every_b_invariant_solitary: bool,
    pub verdicts: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageCount {
    pub stage: String,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedGraph {
    pub graph6: String,
    pub name: Option<String>,
}

impl NamedGraph {
    fn new(graph6: &str) -> NamedGraph {
        let g = parse_graph6(graph6).expect("certificates are valid graph6");
        NamedGraph {
            graph6: graph6.to_string(),
            name: identify(&g).first().map(|s| s.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MainVerdict {
    pub passed: bool,
    pub claw_free_bricks: usize,
    /// Claw-free bricks other than K4 and the prism with every b-invariant
    /// edge solitary.
    pub found: Vec<NamedGraph>,
    /// Expected graphs inside the census range.
    pub expected: Vec<NamedGraph>,
    pub missing: Vec<NamedGraph>,
    pub unexpected: Vec<NamedGraph>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExceptionStatus {
    BelowBound,
    MeetsBound,
    NotInRange,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionReport {
    pub name: String,
    pub graph6: String,
    pub status: ExceptionStatus,
    pub b_invariant: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub graph6: String,
    pub b_invariant: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thm11Verdict {
    pub passed: bool,
    pub bricks: usize,
    pub violations: Vec<Violation>,
    pub exceptions: Vec<ExceptionReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CapacityFailure {
    pub graph6: String,
    pub n: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictSummary {
    pub source: String,
    pub max_n: usize,
    /// Scope of the result, e.g. "verified up to n = 9".
    pub label: String,
    pub claw_free_filter: bool,
    pub stages: Vec<StageCount>,
    /// Input lines that failed to decode.
    pub skipped_lines: usize,
    /// Input graphs isomorphic to an earlier one.
    pub duplicates: usize,
    /// Input graphs above the order bound.
    pub out_of_range: usize,
    pub capacity_errors: Vec<CapacityFailure>,
    pub main: Option<MainVerdict>,
    pub thm11: Option<Thm11Verdict>,
    pub passed: bool,
}

#[derive(Debug, Clone)]
pub struct Census {
    /// Sorted by certificate.
    pub records: Vec<CensusRecord>,
    pub summary: VerdictSummary,
}

/// Bookkeeping that does not go into the report.
#[derive(Debug, Clone, Default)]
pub struct RunStats {
    pub cache_hits: usize,
    pub cache_misses: usize,
    pub cache_malformed: usize,
    /// `path:line: message` for every input line that failed to decode.
    pub bad_lines: Vec<String>,
}

const STAGES: [&str; 6] = ["input", "connected", "min_degree_3", "three_connected", "bicritical", "claw_free"];

struct Input {
    graphs: Vec<(CanonicalForm, Graph)>,
    max_n: usize,
    label: String,
    skipped_lines: usize,
    duplicates: usize,
    out_of_range: usize,
    bad_lines: Vec<String>,
}

/// Canonical graphs on at most `max_n` vertices that are connected with
/// minimum degree at least 3, and claw-free if asked, in certificate order.
pub fn generate_candidates(max_n: usize, claw_free: bool) -> Result<Vec<(CanonicalForm, Graph)>> {
    check_order(max_n)?;
    let hereditary = GenerationFilter {
        connected: true,
        claw_free,
        min_degree: 0,
    };
    let mut level = seed();
    let mut out = Vec::new();
    for k in 2..=max_n {
        let last = k == max_n;
        let filter = GenerationFilter {
            min_degree: if last { 3 } else { 0 },
            ..hereditary
        };
        let mut next: Vec<_> = level
            .par_iter()
            .flat_map_iter(|(form, g)| children(g, form, &filter, last))
            .collect();
        next.sort_by(|a, b| a.0.cmp(&b.0));
        out.extend(next.iter().filter(|(_, g)| g.min_degree() >= 3).cloned());
        level = next;
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

fn gather(cfg: &CensusConfig) -> Result<Input> {
    match &cfg.source {
        Source::Generate { max_n } => Ok(Input {
            graphs: generate_candidates(*max_n, cfg.claw_free)?,
            max_n: *max_n,
            label: format!("verified up to n = {max_n}"),
            skipped_lines: 0,
            duplicates: 0,
            out_of_range: 0,
            bad_lines: Vec::new(),
        }),
        Source::Files { paths, max_n } => {
            let mut seen = BTreeMap::new();
            let mut bad_lines = Vec::new();
            let (mut skipped_lines, mut duplicates, mut out_of_range, mut largest) = (0, 0, 0, 0);
            for path in paths {
                let ingested = ingest_graph6(path)?;
                skipped_lines += ingested.skipped.len();
                for bad in &ingested.skipped {
                    bad_lines.push(format!("{}:{}: {}", path.display(), bad.line, bad.error));
                }
                for (_, g) in ingested.graphs {
                    if max_n.is_some_and(|k| g.n() > k) {
                        out_of_range += 1;
                        continue;
                    }
                    largest = largest.max(g.n());
                    let form = canonical_form(&g);
                    if let std::collections::btree_map::Entry::Vacant(slot) = seen.entry(form) {
                        slot.insert(g);
                    } else {
                        duplicates += 1;
                    }
                }
            }
            Ok(Input {
                graphs: seen.into_iter().collect(),
                max_n: largest,
                label: format!("verified on the input corpus up to n = {largest}"),
                skipped_lines,
                duplicates,
                out_of_range,
                bad_lines,
            })
        }
    }
}

enum Outcome {
    /// Index of the first stage the graph failed.
    Dropped(usize),
    Survived {
        claw_free: bool,
        classes: CachedClasses,
        cached: bool,
    },
    Capacity(String),
}

fn process(g: &Graph, form: &CanonicalForm, claw_filter: bool, cache: Option<&ResultCache>) -> Outcome {
    if !g.is_connected() {
        return Outcome::Dropped(1);
    }
    if g.n() < 2 || g.min_degree() < 3 {
        return Outcome::Dropped(2);
    }
    if !g.is_three_connected() {
        return Outcome::Dropped(3);
    }
    match is_bicritical(g) {
        Ok(true) => {}
        Ok(false) => return Outcome::Dropped(4),
        Err(e) => return Outcome::Capacity(e.to_string()),
    }
    let claw_free = g.is_claw_free();
    if claw_filter && !claw_free {
        return Outcome::Dropped(5);
    }
    if let Some(classes) = cache.and_then(|c| c.get(form.as_str())) {
        return Outcome::Survived {
            claw_free,
            classes,
            cached: true,
        };
    }
    match classify_all(g) {
        Ok(report) => Outcome::Survived {
            claw_free,
            classes: CachedClasses {
                b_invariant: report.summary.b_invariant,
                solitary: report.summary.solitary,
                every_b_invariant_solitary: report.every_b_invariant_solitary(),
            },
            cached: false,
        },
        Err(e) => Outcome::Capacity(e.to_string()),
    }
}

/// Runs the census described by `cfg`.
pub fn run_census(cfg: &CensusConfig) -> Result<Census> {
    Ok(run_census_with_stats(cfg)?.0)
}

pub fn run_census_with_stats(cfg: &CensusConfig) -> Result<(Census, RunStats)> {
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| CensusError::Usage(format!("cannot start {} workers: {e}", cfg.jobs)))?;
    let mut cache = cfg.cache.as_ref().map(ResultCache::open).transpose()?;
    let mut input = pool.install(|| gather(cfg))?;
    let outcomes: Vec<Outcome> = pool.install(|| {
        input
            .graphs
            .par_iter()
            .map(|(form, g)| process(g, form, cfg.claw_free, cache.as_ref()))
            .collect()
    });

    let mut stats = RunStats {
        cache_malformed: cache.as_ref().map_or(0, |c| c.malformed),
        bad_lines: std::mem::take(&mut input.bad_lines),
        ..RunStats::default()
    };
    let stage_count = if cfg.claw_free { STAGES.len() } else { STAGES.len() - 1 };
    let mut reached = vec![0usize; stage_count];
    let mut records = Vec::new();
    let mut capacity_errors = Vec::new();
    for ((form, g), outcome) in input.graphs.iter().zip(outcomes) {
        let passed = match &outcome {
            Outcome::Dropped(stage) => *stage,
            Outcome::Capacity(_) => 4,
            Outcome::Survived { .. } => stage_count,
        };
        for r in reached.iter_mut().take(passed) {
            *r += 1;
        }
        match outcome {
            Outcome::Dropped(_) => {}
            Outcome::Capacity(message) => capacity_errors.push(CapacityFailure {
                graph6: form.as_str().to_string(),
                n: g.n(),
                message,
            }),
            Outcome::Survived {
                claw_free,
                classes,
                cached,
            } => {
                if cached {
                    stats.cache_hits += 1;
                } else {
                    stats.cache_misses += 1;
                    if let Some(c) = cache.as_mut() {
                        c.insert(form.as_str().to_string(), classes);
                    }
                }
                records.push(CensusRecord {
                    graph6: form.as_str().to_string(),
                    n: g.n(),
                    edges: g.edge_count(),
                    claw_free,
                    brick: true,
                    b_invariant: classes.b_invariant,
                    solitary: classes.solitary,
                    every_b_invariant_solitary: classes.every_b_invariant_solitary,
                    verdicts: Vec::new(),
                });
            }
        }
    }
    if let Some(c) = cache.as_mut() {
        c.flush()?;
    }
    records.sort_by(|a, b| a.graph6.cmp(&b.graph6));

    let in_input: BTreeSet<&str> = input.graphs.iter().map(|(f, _)| f.as_str()).collect();
    let expected: BTreeSet<String> = cfg
        .expected
        .iter()
        .filter(|g| match cfg.source {
            Source::Generate { max_n } => g.n() <= max_n,
            Source::Files { .. } => in_input.contains(canonical_form(g).as_str()),
        })
        .map(|g| canonical_form(g).into_string())
        .collect();
    let main = cfg
        .checks
        .contains(&Check::Main)
        .then(|| main_verdict(&mut records, &expected));
    let thm11 = cfg.checks.contains(&Check::Thm11).then(|| thm11_verdict(&mut records));
    let passed = main.as_ref().map_or(true, |m| m.passed) && thm11.as_ref().map_or(true, |t| t.passed);

    let summary = VerdictSummary {
        source: match cfg.source {
            Source::Generate { .. } => "generate".into(),
            Source::Files { .. } => "files".into(),
        },
        max_n: input.max_n,
        label: input.label,
        claw_free_filter: cfg.claw_free,
        stages: STAGES
            .iter()
            .zip(reached)
            .map(|(s, count)| StageCount {
                stage: s.to_string(),
                count,
            })
            .collect(),
        skipped_lines: input.skipped_lines,
        duplicates: input.duplicates,
        out_of_range: input.out_of_range,
        capacity_errors,
        main,
        thm11,
        passed,
    };
    Ok((Census { records, summary }, stats))
}

fn form_of(name: &str) -> String {
    canonical_form(&catalog(name).expect("catalog name").graph).into_string()
}

fn main_verdict(records: &mut [CensusRecord], expected: &BTreeSet<String>) -> MainVerdict {
    let excluded = [form_of("K4"), form_of("C6BAR")];
    let mut found = BTreeSet::new();
    let mut claw_free_bricks = 0;
    for r in records.iter_mut() {
        if expected.contains(&r.graph6) {
            r.verdicts.push("expected".into());
        }
        if !r.claw_free {
            continue;
        }
        claw_free_bricks += 1;
        if r.every_b_invariant_solitary && !excluded.contains(&r.graph6) {
            r.verdicts.push("main_property".into());
            found.insert(r.graph6.clone());
        }
    }
    let named = |set: &mut dyn Iterator<Item = &String>| set.map(|s| NamedGraph::new(s)).collect::<Vec<_>>();
    MainVerdict {
        passed: &found == expected,
        claw_free_bricks,
        found: named(&mut found.iter()),
        expected: named(&mut expected.iter()),
        missing: named(&mut expected.difference(&found)),
        unexpected: named(&mut found.difference(expected)),
    }
}

fn thm11_verdict(records: &mut [CensusRecord]) -> Thm11Verdict {
    let exceptions: Vec<(&str, String)> = THIN_BRICKS.iter().map(|&n| (n, form_of(n))).collect();
    let mut seen = BTreeMap::new();
    let mut violations = Vec::new();
    for r in records.iter_mut() {
        if exceptions.iter().any(|(_, f)| *f == r.graph6) {
            r.verdicts.push("thm11_exception".into());
            seen.insert(r.graph6.clone(), r.b_invariant);
        } else if r.b_invariant < 2 {
            r.verdicts.push("thm11_violation".into());
            violations.push(Violation {
                graph6: r.graph6.clone(),
                b_invariant: r.b_invariant,
            });
        }
    }
    let exceptions: Vec<ExceptionReport> = exceptions
        .into_iter()
        .map(|(name, graph6)| {
            let b = seen.get(&graph6).copied();
            ExceptionReport {
                name: name.to_string(),
                graph6,
                status: match b {
                    None => ExceptionStatus::NotInRange,
                    Some(k) if k < 2 => ExceptionStatus::BelowBound,
                    Some(_) => ExceptionStatus::MeetsBound,
                },
                b_invariant: b,
            }
        })
        .collect();
    Thm11Verdict {
        passed: violations.is_empty() && exceptions.iter().all(|e| e.status != ExceptionStatus::MeetsBound),
        bricks: records.len(),
        violations,
        exceptions,
    }
}

//! Command-line interface.

use std::path::PathBuf;

use bricklab_core::catalog::{catalog, identify, CATALOG_NAMES};
use bricklab_core::classify::classify_all;
use bricklab_core::graph6::{parse_graph6, to_graph6};
use bricklab_core::matching::{is_bicritical, is_matching_covered};
use bricklab_core::{canonical_form, decompose, Graph};
use clap::{Parser, Subcommand, ValueEnum};

use crate::census::{run_census_with_stats, Census, CensusConfig, Check, Source, JOBS_ENV};
use crate::error::{exit, CensusError, Result};
use crate::report::{emit_report, Format};
use crate::selftest::{self, Options};

/// Extra names accepted wherever a graph is expected.
pub const ALIASES: &[(&str, &str)] = &[("W6_PLUSPLUS_MINUS_Y3Y4", "W6_PLUSPLUS without edge 3-4")];

#[derive(Parser, Debug)]
#[command(name = "bricklab", version, about = "Bricks, tight cuts and edge classes of matching covered graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a named graph, or list the names.
    Catalog { name: Option<String> },
    /// Structural flags of a graph given by name or graph6.
    Props { graph: String },
    /// Classify every edge as removable, b-invariant and solitary.
    Classify { graph: String },
    /// Tight cut decomposition with the cut trace.
    Decompose { graph: String },
    /// Run the brick census and check the selected statements.
    Census(CensusArgs),
    /// Run the acceptance suite.
    Selftest {
        #[arg(long, env = JOBS_ENV)]
        jobs: Option<usize>,
        /// Run only these criteria.
        #[arg(long, value_delimiter = ',')]
        only: Vec<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckArg {
    Main,
    Thm11,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Jsonl,
    Csv,
}

#[derive(clap::Args, Debug)]
pub struct CensusArgs {
    /// Largest order to generate (at most 10), or to accept from --in.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_n: Option<u64>,
    /// Keep only claw-free bricks.
    #[arg(long)]
    pub claw_free: bool,
    /// Statement to check; may be repeated.
    #[arg(long = "check", value_enum, default_values_t = [CheckArg::Main])]
    pub checks: Vec<CheckArg>,
    /// graph6 input file instead of the built-in generator; may be repeated.
    #[arg(long = "in")]
    pub inputs: Vec<PathBuf>,
    /// Report file.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Jsonl)]
    pub format: FormatArg,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, env = JOBS_ENV)]
    pub jobs: Option<usize>,
    /// Append-only JSONL cache of edge classes.
    #[arg(long)]
    pub cache: Option<PathBuf>,
    /// Comma separated names or graph6 strings replacing the expected set
    /// of the main check.
    #[arg(long, value_delimiter = ',')]
    pub expect: Option<Vec<String>>,
}

/// Looks up an alias, a catalog name or a graph6 string.
pub fn resolve(query: &str) -> Result<(String, Graph)> {
    if query.eq_ignore_ascii_case(ALIASES[0].0) {
        let w = catalog("W6_PLUSPLUS")?.graph;
        let e = w.edges_between(3, 4).next().expect("W6_PLUSPLUS has edge 3-4");
        return Ok((ALIASES[0].0.to_string(), w.without_edge(e)?));
    }
    if let Ok(entry) = catalog(query) {
        return Ok((entry.name.to_string(), entry.graph));
    }
    match parse_graph6(query) {
        Ok(g) => Ok((query.to_string(), g)),
        Err(e) => Err(CensusError::Usage(format!(
            "{query:?} is neither a graph name ({}) nor valid graph6: {e}",
            CATALOG_NAMES.join(", ")
        ))),
    }
}

/// Runs the parsed command and returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let result = match cli.command {
        Command::Catalog { name } => show_catalog(name.as_deref()),
        Command::Props { graph } => props(&graph),
        Command::Classify { graph } => classify(&graph),
        Command::Decompose { graph } => show_decomposition(&graph),
        Command::Census(args) => census(args),
        Command::Selftest { jobs, only } => Ok(self_test(jobs, &only)),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn edge_list(g: &Graph) -> String {
    g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" ")
}

fn known_as(g: &Graph) -> String {
    let names = identify(&g.underlying_simple());
    if names.is_empty() {
        String::new()
    } else {
        format!(" ({})", names.join(", "))
    }
}

fn show_catalog(name: Option<&str>) -> Result<i32> {
    let Some(name) = name else {
        for n in CATALOG_NAMES {
            let entry = catalog(n)?;
            println!("{:<12} {}", entry.name, entry.provenance);
        }
        for (alias, what) in ALIASES {
            println!("{alias:<12} {what}");
        }
        return Ok(exit::OK);
    };
    let (label, g) = resolve(name)?;
    let provenance = catalog(&label).map(|e| e.provenance).unwrap_or(ALIASES[0].1);
    println!("name: {label}");
    println!("about: {provenance}");
    println!("n: {}", g.n());
    println!("m: {}", g.edge_count());
    println!("graph6: {}", to_graph6(&g).map_err(bricklab_core::Error::from)?);
    println!("canonical: {}", canonical_form(&g));
    println!("edges: {}", edge_list(&g));
    Ok(exit::OK)
}

fn props(query: &str) -> Result<i32> {
    let (label, g) = resolve(query)?;
    let bicritical = is_bicritical(&g)?;
    let three = g.is_three_connected();
    println!("graph: {label} (n = {}, m = {})", g.n(), g.edge_count());
    println!("connected: {}", g.is_connected());
    println!("bipartite: {}", g.is_bipartite());
    println!("claw_free: {}", g.is_claw_free());
    println!("three_connected: {three}");
    println!("bicritical: {bicritical}");
    println!("matching_covered: {}", is_matching_covered(&g)?);
    println!("brick: {}", three && bicritical);
    Ok(exit::OK)
}

fn classify(query: &str) -> Result<i32> {
    let (label, g) = resolve(query)?;
    let r = classify_all(&g)?;
    println!("graph: {label} (n = {}, m = {})", g.n(), g.edge_count());
    println!("certificate: {}", r.certificate);
    println!("b: {}", r.b);
    println!("{:>4}  {:<6} {:<10} {:<12} {:<9} pms", "edge", "ends", "removable", "b_invariant", "solitary");
    let yn = |b: bool| if b { "yes" } else { "no" };
    for c in &r.edges {
        let (u, v) = g.edge(c.edge);
        println!(
            "{:>4}  {:<6} {:<10} {:<12} {:<9} {}",
            c.edge,
            format!("{u}-{v}"),
            yn(c.removable),
            c.b_invariant.map_or("-", yn),
            yn(c.solitary),
            if c.pm_count_capped >= 2 { "2+".to_string() } else { c.pm_count_capped.to_string() }
        );
    }
    let s = r.summary;
    println!(
        "removable: {}, b_invariant: {}, solitary: {}, b_invariant_and_solitary: {}",
        s.removable, s.b_invariant, s.solitary, s.b_invariant_and_solitary
    );
    println!("every_b_invariant_solitary: {}", r.every_b_invariant_solitary());
    Ok(exit::OK)
}

fn show_decomposition(query: &str) -> Result<i32> {
    let (label, g) = resolve(query)?;
    let d = decompose(&g)?;
    println!("graph: {label} (n = {}, m = {})", g.n(), g.edge_count());
    println!("b: {}", d.b);
    println!("braces: {}", d.braces);
    println!("pieces:");
    for (i, p) in d.pieces.iter().enumerate() {
        println!(
            "  {i}: {} n = {} m = {} simple = {}{}",
            if p.is_brick() { "brick" } else { "brace" },
            p.graph.n(),
            p.graph.edge_count(),
            p.certificate,
            known_as(&p.graph)
        );
    }
    println!("trace:");
    for step in &d.trace {
        println!(
            "  {:indent$}on n = {}: shore {} with {} cut edges",
            "",
            step.host.n(),
            step.cut.shore,
            step.cut.boundary.len(),
            indent = 2 * step.depth
        );
    }
    Ok(exit::OK)
}

fn census(args: CensusArgs) -> Result<i32> {
    let max_n = args.max_n.map(|k| k as usize);
    let source = if args.inputs.is_empty() {
        let max_n = max_n.ok_or_else(|| CensusError::Usage("census needs --max-n or --in".into()))?;
        Source::Generate { max_n }
    } else {
        Source::Files {
            paths: args.inputs,
            max_n,
        }
    };
    let mut checks: Vec<Check> = args
        .checks
        .iter()
        .map(|c| match c {
            CheckArg::Main => Check::Main,
            CheckArg::Thm11 => Check::Thm11,
        })
        .collect();
    checks.sort();
    checks.dedup();
    let mut cfg = CensusConfig {
        source,
        claw_free: args.claw_free,
        checks,
        cache: args.cache,
        ..CensusConfig::generate(1)
    };
    if let Some(jobs) = args.jobs {
        cfg.jobs = jobs;
    }
    if let Some(specs) = args.expect {
        cfg.expected = specs
            .iter()
            .filter(|s| !s.is_empty())
            .map(|s| resolve(s).map(|(_, g)| g))
            .collect::<Result<_>>()?;
    }
    let (census, stats) = run_census_with_stats(&cfg)?;
    for line in &stats.bad_lines {
        eprintln!("skipped {line}");
    }
    if cfg.cache.is_some() {
        eprintln!(
            "cache: {} hits, {} new entries, {} unreadable lines",
            stats.cache_hits, stats.cache_misses, stats.cache_malformed
        );
    }
    if let Some(path) = &args.out {
        let format = match args.format {
            FormatArg::Jsonl => Format::Jsonl,
            FormatArg::Csv => Format::Csv,
        };
        emit_report(path, format, &census.summary, &census.records)?;
    }
    print_summary(&census);
    let s = &census.summary;
    Ok(if !s.passed {
        exit::VERDICT_FAIL
    } else if !s.capacity_errors.is_empty() {
        exit::CAPACITY
    } else {
        exit::OK
    })
}

fn print_summary(census: &Census) {
    let s = &census.summary;
    println!("source: {} ({})", s.source, s.label);
    let stages: Vec<String> = s.stages.iter().map(|st| format!("{} {}", st.stage, st.count)).collect();
    println!("stages: {}", stages.join(", "));
    if s.skipped_lines + s.duplicates + s.out_of_range > 0 {
        println!(
            "input: {} unreadable lines, {} duplicates, {} above max n",
            s.skipped_lines, s.duplicates, s.out_of_range
        );
    }
    let names = |gs: &[crate::census::NamedGraph]| {
        gs.iter()
            .map(|g| g.name.clone().unwrap_or_else(|| g.graph6.clone()))
            .collect::<Vec<_>>()
            .join(", ")
    };
    if let Some(m) = &s.main {
        println!(
            "main: {} ({} claw-free bricks; found [{}], expected [{}])",
            pass_fail(m.passed),
            m.claw_free_bricks,
            names(&m.found),
            names(&m.expected)
        );
        if !m.missing.is_empty() {
            println!("  missing: {}", names(&m.missing));
        }
        if !m.unexpected.is_empty() {
            println!("  unexpected: {}", names(&m.unexpected));
        }
    }
    if let Some(t) = &s.thm11 {
        println!(
            "thm11: {} ({} bricks, {} violations)",
            pass_fail(t.passed),
            t.bricks,
            t.violations.len()
        );
        for v in &t.violations {
            println!("  violation: {} with {} b-invariant edges", v.graph6, v.b_invariant);
        }
        for e in &t.exceptions {
            let status = match e.b_invariant {
                Some(k) => format!("{k} b-invariant edges"),
                None => "not in range".to_string(),
            };
            println!("  exception {}: {status}", e.name);
        }
    }
    for c in &s.capacity_errors {
        println!("capacity: {} (n = {}): {}", c.graph6, c.n, c.message);
    }
    println!("verdict: {}", pass_fail(s.passed));
}

fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

fn self_test(jobs: Option<usize>, only: &[usize]) -> i32 {
    let opts = Options {
        jobs: jobs.unwrap_or_else(crate::census::default_jobs),
    };
    let mut ok = true;
    for c in selftest::criteria(&opts) {
        if !only.is_empty() && !only.contains(&c.id) {
            continue;
        }
        let outcome = c.run(&opts);
        println!("{outcome}");
        ok &= outcome.passed;
    }
    if ok {
        exit::OK
    } else {
        exit::VERDICT_FAIL
    }
}

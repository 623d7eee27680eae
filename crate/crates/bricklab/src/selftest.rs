//! The acceptance suite, shared by `bricklab selftest` and the test target.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use bricklab_core::catalog::{catalog, FAMILY_G, THIN_BRICKS};
use bricklab_core::classify::triangle_nonremovable_edges;
use bricklab_core::generate::{generate_all_graphs, GenerationFilter};
use bricklab_core::matching::{count_perfect_matchings, enumerate_perfect_matchings, is_brick, is_matching_covered, unique_pm_bridge};
use bricklab_core::tight_cut::{b_count, decompose_with};
use bricklab_core::{canonical_form, classify_all, decompose, is_isomorphic, Graph, VertexSet};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::census::{run_census, CensusConfig, Check, ExceptionStatus};
use crate::oracle;

pub struct Criterion {
    pub id: usize,
    pub name: &'static str,
    pub limit: Duration,
    run: fn(&Options) -> Result<String, String>,
}

#[derive(Debug, Clone, Copy)]
pub struct Options {
    pub jobs: usize,
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}] {}: {} ({:.2}s, limit {}s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail,
            self.elapsed.as_secs_f64(),
            self.limit.as_secs()
        )
    }
}

impl Criterion {
    pub fn run(&self, opts: &Options) -> Outcome {
        let start = Instant::now();
        let result = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs.max(1))
            .build()
            .map_err(|e| e.to_string())
            .and_then(|pool| pool.install(|| (self.run)(opts)));
        let elapsed = start.elapsed();
        let (mut passed, mut detail) = match result {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        if passed && elapsed > self.limit {
            passed = false;
            detail = format!("{detail}; over time limit");
        }
        Outcome {
            id: self.id,
            name: self.name,
            passed,
            detail,
            elapsed,
            limit: self.limit,
        }
    }
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn get(name: &str) -> Graph {
    catalog(name).expect("catalog name").graph
}

fn edge(g: &Graph, u: usize, v: usize) -> Result<usize, String> {
    g.edges_between(u, v).next().ok_or_else(|| format!("no edge {u}-{v}"))
}

/// All criteria. The census limit depends on the worker count.
pub fn criteria(opts: &Options) -> Vec<Criterion> {
    let census_limit = if opts.jobs >= 8 { 180 } else { 900 };
    vec![
        Criterion {
            id: 1,
            name: "named-graph brick suite",
            limit: Duration::from_secs(1),
            run: named_bricks,
        },
        Criterion {
            id: 2,
            name: "b-invariant edge sets of the family",
            limit: Duration::from_secs(1),
            run: family_edge_sets,
        },
        Criterion {
            id: 3,
            name: "claw-free brick census, n <= 9",
            limit: Duration::from_secs(census_limit),
            run: main_census,
        },
        Criterion {
            id: 4,
            name: "two b-invariant edges census, n <= 8",
            limit: Duration::from_secs(300),
            run: two_edges_census,
        },
        Criterion {
            id: 5,
            name: "unique perfect matching bridge",
            limit: Duration::from_secs(60),
            run: unique_matching_bridges,
        },
        Criterion {
            id: 6,
            name: "decomposition order invariance",
            limit: Duration::from_secs(300),
            run: order_invariance,
        },
        Criterion {
            id: 7,
            name: "fixture graphs",
            limit: Duration::from_secs(1),
            run: fixtures,
        },
        Criterion {
            id: 8,
            name: "oracle equivalence, connected n <= 8",
            limit: Duration::from_secs(600),
            run: oracle_equivalence,
        },
    ]
}

pub fn run_all(opts: &Options) -> Vec<Outcome> {
    criteria(opts).iter().map(|c| c.run(opts)).collect()
}

fn named_bricks(_: &Options) -> Result<String, String> {
    for name in ["K4", "C6BAR", "PETERSEN", "R8", "C6BAR_PLUS", "W6", "W6_PLUS", "W6_PLUSPLUS"] {
        ensure!(is_brick(&get(name)).map_err(|e| e.to_string())?, "{name} is not a brick");
    }
    for name in ["K4", "C6BAR"].iter().chain(FAMILY_G) {
        ensure!(get(name).is_claw_free(), "{name} has a claw");
    }
    for name in ["PETERSEN", "R8"] {
        ensure!(!get(name).is_claw_free(), "{name} is claw-free");
    }
    Ok("8 bricks, claw-free flags as expected".into())
}

fn family_edge_sets(_: &Options) -> Result<String, String> {
    for (name, want) in [("C6BAR_PLUS", 3), ("W6", 5), ("W6_PLUS", 5), ("W6_PLUSPLUS", 5)] {
        let r = classify_all(&get(name)).map_err(|e| e.to_string())?;
        ensure!(r.summary.b_invariant == want, "{name}: {} b-invariant edges, want {want}", r.summary.b_invariant);
        ensure!(r.summary.b_invariant_and_solitary == want, "{name}: a b-invariant edge is not solitary");
    }
    let w = get("W6_PLUSPLUS");
    let reduced = w.without_edge(edge(&w, 3, 4)?).map_err(|e| e.to_string())?;
    ensure!(b_count(&reduced).map_err(|e| e.to_string())? == 2, "b(W6++ - 34) != 2");
    let d = decompose(&reduced).map_err(|e| e.to_string())?;
    let k4 = canonical_form(&Graph::complete(4));
    ensure!(d.pieces.len() == 2, "{} pieces, want 2", d.pieces.len());
    ensure!(d.pieces.iter().all(|p| p.certificate == k4), "a piece of W6++ - 34 is not K4");
    Ok("counts 3, 5, 5, 5 all solitary; W6++ - 34 splits into two K4".into())
}

fn main_census(opts: &Options) -> Result<String, String> {
    let cfg = CensusConfig {
        claw_free: true,
        checks: vec![Check::Main],
        jobs: opts.jobs,
        ..CensusConfig::generate(9)
    };
    let census = run_census(&cfg).map_err(|e| e.to_string())?;
    let main = census.summary.main.as_ref().ok_or("main verdict missing")?;
    let want: BTreeSet<String> = FAMILY_G.iter().map(|n| canonical_form(&get(n)).into_string()).collect();
    let got: BTreeSet<String> = main.found.iter().map(|g| g.graph6.clone()).collect();
    let label = |gs: &[crate::census::NamedGraph]| {
        gs.iter()
            .map(|g| g.name.clone().unwrap_or_else(|| g.graph6.clone()))
            .collect::<Vec<_>>()
            .join(", ")
    };
    ensure!(
        got == want,
        "property holds for [{}]; missing [{}], unexpected [{}]",
        label(&main.found),
        label(&main.missing),
        label(&main.unexpected)
    );
    ensure!(main.passed && census.summary.passed, "verdict failed");
    ensure!(census.summary.capacity_errors.is_empty(), "capacity errors during census");
    Ok(format!(
        "{} claw-free bricks, property holds for exactly the 4 family members; {}",
        main.claw_free_bricks, census.summary.label
    ))
}

fn two_edges_census(opts: &Options) -> Result<String, String> {
    let cfg = CensusConfig {
        checks: vec![Check::Thm11],
        jobs: opts.jobs,
        ..CensusConfig::generate(8)
    };
    let census = run_census(&cfg).map_err(|e| e.to_string())?;
    let t = census.summary.thm11.as_ref().ok_or("verdict missing")?;
    ensure!(t.violations.is_empty(), "violations: {:?}", t.violations);
    ensure!(census.summary.capacity_errors.is_empty(), "capacity errors during census");
    let mut notes = Vec::new();
    for e in &t.exceptions {
        match e.status {
            ExceptionStatus::BelowBound => notes.push(format!("{} has {}", e.name, e.b_invariant.unwrap_or(0))),
            ExceptionStatus::MeetsBound => return Err(format!("{} meets the bound", e.name)),
            ExceptionStatus::NotInRange => notes.push(format!("{} out of range", e.name)),
        }
    }
    // the exceptions themselves, directly
    for name in THIN_BRICKS {
        let r = classify_all(&get(name)).map_err(|e| e.to_string())?;
        ensure!(r.summary.b_invariant < 2, "{name} has {} b-invariant edges", r.summary.b_invariant);
    }
    ensure!(t.passed, "verdict failed");
    Ok(format!("{} bricks, no violations; {}", t.bricks, notes.join(", ")))
}

/// A connected graph with exactly one perfect matching on `n` vertices.
pub fn random_unique_matching_graph(rng: &mut impl Rng, n: usize) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut g = Graph::new(n, perm.chunks(2).map(|p| (p[0], p[1]))).expect("valid pairs");
    let mut pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    pairs.shuffle(rng);
    let density = rng.gen_range(0.05..0.9);
    for (u, v) in pairs {
        if g.has_edge(u, v) || !rng.gen_bool(density) {
            continue;
        }
        let h = g.with_edge(u, v).expect("valid pair");
        if count_perfect_matchings(&h, Some(2)).expect("small graph") == 1 {
            g = h;
        }
    }
    // one edge between two components cannot create a second matching
    loop {
        let comps = g.components();
        if comps.len() < 2 {
            return g;
        }
        let a: Vec<usize> = comps[0].iter().collect();
        let b: Vec<usize> = comps[1].iter().collect();
        g = g.with_edge(*a.choose(rng).unwrap(), *b.choose(rng).unwrap()).expect("valid pair");
    }
}

fn unique_matching_bridges(_: &Options) -> Result<String, String> {
    let results: Vec<Result<(), String>> = (0..1000u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(0x6b07_2161 + i);
            let n = 2 * rng.gen_range(1..=6);
            let g = random_unique_matching_graph(&mut rng, n);
            ensure!(oracle::dp_count_perfect_matchings(n, g.edges()) == 1, "sample {i}: matching not unique");
            ensure!(oracle::connected_without(n, g.edges(), None), "sample {i}: disconnected");
            let e = unique_pm_bridge(&g)
                .map_err(|e| e.to_string())?
                .ok_or(format!("sample {i}: no bridge returned"))?;
            ensure!(!oracle::connected_without(n, g.edges(), Some(e)), "sample {i}: edge {e} is not a bridge");
            let (u, v) = g.edge(e);
            ensure!(
                oracle::dp_count_without(n, g.edges(), u, v) == 1,
                "sample {i}: edge {e} is not in the perfect matching"
            );
            Ok(())
        })
        .collect();
    results.into_iter().collect::<Result<(), String>>()?;
    Ok("1000 graphs, n <= 12, each returned a matching bridge".into())
}

fn random_graph(rng: &mut impl Rng, n: usize, density: f64) -> Graph {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    Graph::new(n, pairs.into_iter().filter(|_| rng.gen_bool(density))).expect("valid pairs")
}

fn random_bipartite(rng: &mut impl Rng, n: usize, density: f64) -> Graph {
    let h = n / 2;
    let pairs = (0..h).flat_map(|i| (h..n).map(move |j| (i, j)));
    let forced: Vec<_> = (0..h).map(|i| (i, h + i)).collect();
    let extra: Vec<_> = pairs.filter(|&(i, j)| j != h + i && rng.gen_bool(density)).collect();
    Graph::new(n, forced.into_iter().chain(extra)).expect("valid pairs")
}

/// Replaces `x` in `a` and `y` in `b` (of equal degree) by a bijection
/// between their neighborhoods.
fn splice(rng: &mut impl Rng, a: &Graph, x: usize, b: &Graph, y: usize) -> Graph {
    let (a2, map_a) = a.without_vertices(VertexSet::singleton(x));
    let (b2, map_b) = b.without_vertices(VertexSet::singleton(y));
    let shift = a2.n();
    let mut nb: Vec<usize> = b.neighbors(y).iter().map(|v| map_b[v].unwrap() + shift).collect();
    nb.shuffle(rng);
    let pairs = a2
        .edges()
        .iter()
        .copied()
        .chain(b2.edges().iter().map(|&(u, v)| (u + shift, v + shift)))
        .chain(a.neighbors(x).iter().map(|v| map_a[v].unwrap()).zip(nb));
    Graph::new(shift + b2.n(), pairs).expect("valid pairs")
}

/// A random matching covered graph on at most `max_n` vertices, mixing
/// dense random graphs, bipartite graphs and splices.
pub fn random_matching_covered(rng: &mut impl Rng, max_n: usize) -> Graph {
    loop {
        let g = match rng.gen_range(0..3) {
            0 => {
                let n = 2 * rng.gen_range(2..=max_n / 2);
                let density = rng.gen_range(0.3..0.9);
                random_graph(rng, n, density)
            }
            1 => {
                let n = 2 * rng.gen_range(2..=max_n / 2);
                let density = rng.gen_range(0.2..0.8);
                random_bipartite(rng, n, density)
            }
            _ if max_n < 6 => continue,
            _ => {
                let n1 = 2 * rng.gen_range(2..=max_n / 4 + 1);
                let n2 = 2 * rng.gen_range(2..=(max_n + 2 - n1) / 2);
                let a = random_matching_covered(rng, n1);
                let b = random_matching_covered(rng, n2);
                let x = rng.gen_range(0..a.n());
                let Some(y) = (0..b.n()).find(|&y| b.degree(y) == a.degree(x)) else {
                    continue;
                };
                splice(rng, &a, x, &b, y)
            }
        };
        if g.n() <= max_n && is_matching_covered(&g).expect("small graph") {
            return g;
        }
    }
}

fn order_invariance(_: &Options) -> Result<String, String> {
    let results: Vec<Result<bool, String>> = (0..200u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(0x10_7a52 + i);
            let g = random_matching_covered(&mut rng, 12);
            ensure!(oracle::is_matching_covered(g.n(), g.edges()), "sample {i} is not matching covered");
            let base = decompose(&g).map_err(|e| e.to_string())?;
            ensure!((base.b == 0) == g.is_bipartite(), "sample {i}: b = {} disagrees with bipartiteness", base.b);
            let sig = base.signature();
            for round in 0..10 {
                let d = decompose_with(&g, |_, cuts| rng.gen_range(0..cuts.len())).map_err(|e| e.to_string())?;
                ensure!(d.signature() == sig, "sample {i} order {round}: pieces differ");
            }
            Ok(base.pieces.len() > 1)
        })
        .collect();
    let split = results.into_iter().collect::<Result<Vec<bool>, String>>()?;
    let nontrivial = split.iter().filter(|&&s| s).count();
    ensure!(nontrivial >= 20, "only {nontrivial} samples had a nontrivial tight cut");
    Ok(format!("200 graphs x 10 orders agree; {nontrivial} had a nontrivial tight cut"))
}

fn fixtures(_: &Options) -> Result<String, String> {
    let f3 = get("F3");
    let a = edge(&f3, 0, 5)?;
    let b = edge(&f3, 1, 7)?;
    let stripped = f3
        .without_edge(a.max(b))
        .and_then(|g| g.without_edge(a.min(b)))
        .map_err(|e| e.to_string())?;
    ensure!(is_isomorphic(&stripped, &get("R8")), "F3 - {{05, 17}} is not R8");
    let (rest, _) = get("F4").without_vertices(VertexSet::from_vertices([0, 7]));
    let pms = enumerate_perfect_matchings(&rest, Some(2)).map_err(|e| e.to_string())?;
    ensure!(pms.len() >= 2, "F4 - {{0, 7}} has {} perfect matchings", pms.len());
    ensure!(is_isomorphic(&get("F1"), &get("C6BAR_PLUS")), "F1 is not C6BAR_PLUS");
    ensure!(is_isomorphic(&get("F2"), &get("W6")), "F2 is not W6");
    Ok("F3 - {05, 17} = R8, F4 - {0, 7} has >= 2 matchings, F1 = C6BAR_PLUS, F2 = W6".into())
}

fn oracle_equivalence(_: &Options) -> Result<String, String> {
    let connected = GenerationFilter {
        connected: true,
        ..GenerationFilter::default()
    };
    let mut graphs = Vec::new();
    for n in 1..=8 {
        graphs.extend(generate_all_graphs(n, connected).map_err(|e| e.to_string())?);
    }
    let results: Vec<Result<usize, String>> = graphs
        .par_iter()
        .map(|g| {
            let want = oracle::dp_count_perfect_matchings(g.n(), g.edges());
            let got = count_perfect_matchings(g, None).map_err(|e| e.to_string())?;
            let listed = enumerate_perfect_matchings(g, None).map_err(|e| e.to_string())?.len() as u64;
            ensure!(got == want && listed == want, "count {got}/{listed}, oracle {want}");
            if !is_matching_covered(g).map_err(|e| e.to_string())? {
                return Ok(0);
            }
            let flagged = triangle_nonremovable_edges(g);
            for &e in &flagged {
                ensure!(
                    !bricklab_core::classify::is_removable(g, e).map_err(|e| e.to_string())?,
                    "edge {e} reported removable"
                );
                ensure!(!oracle::is_removable(g.n(), g.edges(), e), "oracle finds edge {e} removable");
            }
            Ok(flagged.len())
        })
        .collect();
    let flagged: usize = results.into_iter().collect::<Result<Vec<_>, _>>()?.iter().sum();
    Ok(format!("{} connected graphs; {flagged} triangle-flagged edges all nonremovable", graphs.len()))
}

use std::fs;
use std::io::Cursor;

use bricklab::census::{run_census, run_census_with_stats, CensusConfig, Check, Source};
use bricklab::ingest::{ingest_graph6, Graph6Reader};
use bricklab::report::{emit_report, write_csv, write_jsonl, Format, CSV_HEADER};
use bricklab_core::catalog::{catalog, FAMILY_G};
use bricklab_core::generate::{generate_all_graphs, GenerationFilter};
use bricklab_core::graph6::{parse_graph6, to_graph6};
use bricklab_core::matching::is_brick;
use bricklab_core::{canonical_form, Graph};

fn family_forms() -> Vec<String> {
    FAMILY_G
        .iter()
        .map(|n| canonical_form(&catalog(n).unwrap().graph).into_string())
        .collect()
}

// complement of P4 + K2 on six vertices
const EXTRA: &str = "EL~o";

fn claw_free_main(max_n: usize, jobs: usize) -> CensusConfig {
    CensusConfig {
        claw_free: true,
        checks: vec![Check::Main, Check::Thm11],
        jobs,
        ..CensusConfig::generate(max_n)
    }
}

#[test]
fn ingest_examples() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("in.g6");
    fs::write(&path, "C~\n").unwrap();
    let got = ingest_graph6(&path).unwrap();
    assert_eq!(got.graphs.len(), 1);
    assert_eq!(got.graphs[0].1, Graph::complete(4));

    fs::write(&path, "@\nA_\n").unwrap();
    let got = ingest_graph6(&path).unwrap();
    let orders: Vec<usize> = got.graphs.iter().map(|(_, g)| g.n()).collect();
    assert_eq!(orders, [1, 2]);
    assert_eq!(got.graphs[1].1.edge_count(), 1);

    fs::write(&path, "C~\ngarbage\n").unwrap();
    let got = ingest_graph6(&path).unwrap();
    assert_eq!(got.graphs.len(), 1);
    assert_eq!(got.skipped.len(), 1);
    assert_eq!(got.skipped[0].line, 2);

    assert!(ingest_graph6(dir.path().join("missing.g6")).is_err());
}

#[test]
fn reader_keeps_line_numbers_and_skips_blanks() {
    let text = ">>graph6<<\n\nC~\r\n\nA_\n";
    let lines: Vec<usize> = Graph6Reader::new(Cursor::new(text))
        .map(|r| r.unwrap().unwrap().0)
        .collect();
    assert_eq!(lines, [3, 5]);
}

#[test]
fn six_vertex_claw_free_bricks() {
    let census = run_census(&claw_free_main(6, 2)).unwrap();
    let main = census.summary.main.as_ref().unwrap();
    // 14 claw-free bricks on at most 6 vertices, checked independently
    // against the networkx graph atlas
    assert_eq!(main.claw_free_bricks, 14);
    let mut want = family_forms();
    want.push(EXTRA.to_string());
    want.sort();
    let got: Vec<String> = main.found.iter().map(|g| g.graph6.clone()).collect();
    assert_eq!(got, want);
    assert!(!main.passed);
    assert_eq!(main.unexpected.len(), 1);
    assert_eq!(main.unexpected[0].graph6, EXTRA);
    assert!(main.missing.is_empty());
    assert_eq!(census.summary.label, "verified up to n = 6");
    assert!(census.summary.thm11.as_ref().unwrap().passed);
}

#[test]
fn extra_graph_is_the_complement_of_p4_plus_k2() {
    let complement = Graph::new(6, [(0, 1), (1, 2), (2, 3), (4, 5)]).unwrap();
    let pairs = (1..6).flat_map(|j| (0..j).map(move |i| (i, j)));
    let g = Graph::new(6, pairs.filter(|&(i, j)| !complement.has_edge(i, j))).unwrap();
    assert_eq!(canonical_form(&g).as_str(), EXTRA);
    assert!(is_brick(&g).unwrap() && g.is_claw_free());
    let r = bricklab_core::classify_all(&g).unwrap();
    assert_eq!(r.summary.b_invariant, 4);
    assert!(r.every_b_invariant_solitary());
}

#[test]
fn expected_set_accounts_for_the_extra_graph() {
    let mut cfg = claw_free_main(8, 2);
    cfg.expected.push(parse_graph6(EXTRA).unwrap());
    let census = run_census(&cfg).unwrap();
    assert!(census.summary.passed);
}

#[test]
fn fake_expected_set_fails() {
    let mut cfg = claw_free_main(6, 1);
    cfg.expected.push(parse_graph6(EXTRA).unwrap());
    cfg.expected.retain(|g| canonical_form(g) != canonical_form(&catalog("W6").unwrap().graph));
    let census = run_census(&cfg).unwrap();
    let main = census.summary.main.unwrap();
    assert!(!main.passed);
    assert_eq!(main.unexpected.len(), 1);
    assert_eq!(main.unexpected[0].name.as_deref(), Some("W6"));
}

#[test]
fn expected_set_is_compared_up_to_isomorphism() {
    let mut cfg = claw_free_main(6, 1);
    cfg.expected = FAMILY_G
        .iter()
        .map(|n| {
            let g = catalog(n).unwrap().graph;
            let perm: Vec<usize> = (0..g.n()).rev().collect();
            g.relabel(&perm)
        })
        .chain([parse_graph6(EXTRA).unwrap().relabel(&[3, 1, 4, 0, 5, 2])])
        .collect();
    assert!(run_census(&cfg).unwrap().summary.passed);
}

#[test]
fn odd_order_has_no_bricks() {
    let census = run_census(&CensusConfig {
        checks: vec![Check::Thm11],
        ..CensusConfig::generate(7)
    })
    .unwrap();
    assert!(census.records.iter().all(|r| r.n % 2 == 0));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("seven.g6");
    let sevens = generate_all_graphs(7, GenerationFilter::all()).unwrap();
    let text: String = sevens.iter().map(|g| to_graph6(g).unwrap() + "\n").collect();
    fs::write(&path, text).unwrap();
    let census = run_census(&CensusConfig {
        source: Source::Files {
            paths: vec![path],
            max_n: None,
        },
        checks: vec![Check::Thm11],
        ..CensusConfig::generate(7)
    })
    .unwrap();
    assert!(census.records.is_empty());
    assert_eq!(census.summary.stages[0].count, 1044);
}

#[test]
fn records_agree_with_predicates() {
    let census = run_census(&CensusConfig {
        checks: vec![Check::Main, Check::Thm11],
        ..CensusConfig::generate(8)
    })
    .unwrap();
    assert!(!census.records.is_empty());
    for r in &census.records {
        let g = parse_graph6(&r.graph6).unwrap();
        assert_eq!(canonical_form(&g).as_str(), r.graph6);
        assert_eq!((g.n(), g.edge_count()), (r.n, r.edges));
        assert_eq!(g.is_claw_free(), r.claw_free);
        assert_eq!(is_brick(&g).unwrap(), r.brick);
        let report = bricklab_core::classify_all(&g).unwrap();
        assert_eq!(report.summary.b_invariant, r.b_invariant);
        assert_eq!(report.summary.solitary, r.solitary);
    }
    let sorted = census.records.windows(2).all(|w| w[0].graph6 < w[1].graph6);
    assert!(sorted);
}

fn jsonl(census: &bricklab::Census) -> String {
    let mut buf = Vec::new();
    write_jsonl(&mut buf, &census.summary, &census.records).unwrap();
    String::from_utf8(buf).unwrap()
}

#[test]
fn report_independent_of_worker_count() {
    let one = run_census(&claw_free_main(8, 1)).unwrap();
    let four = run_census(&claw_free_main(8, 4)).unwrap();
    assert_eq!(jsonl(&one), jsonl(&four));
    let again = run_census(&claw_free_main(8, 3)).unwrap();
    assert_eq!(jsonl(&one), jsonl(&again));
}

#[test]
fn warm_cache_gives_identical_report() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.jsonl");
    let cfg = CensusConfig {
        cache: Some(cache.clone()),
        ..claw_free_main(8, 2)
    };
    let (cold, cold_stats) = run_census_with_stats(&cfg).unwrap();
    let size = fs::metadata(&cache).unwrap().len();
    let (warm, warm_stats) = run_census_with_stats(&cfg).unwrap();
    assert_eq!(jsonl(&cold), jsonl(&warm));
    assert_eq!(cold_stats.cache_hits, 0);
    assert_eq!(warm_stats.cache_misses, 0);
    assert_eq!(warm_stats.cache_hits, cold.records.len());
    assert_eq!(fs::metadata(&cache).unwrap().len(), size);

    // a damaged line is ignored and recomputed
    let text = fs::read_to_string(&cache).unwrap();
    let mut lines: Vec<&str> = text.lines().collect();
    lines[0] = "{not json";
    fs::write(&cache, lines.join("\n") + "\n").unwrap();
    let (repaired, stats) = run_census_with_stats(&cfg).unwrap();
    assert_eq!(stats.cache_malformed, 1);
    assert_eq!(stats.cache_misses, 1);
    assert_eq!(jsonl(&cold), jsonl(&repaired));
}

#[test]
fn file_source_dedups_and_counts() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mixed.g6");
    let w6 = catalog("W6").unwrap().graph;
    let relabeled = w6.relabel(&[5, 4, 3, 2, 1, 0]);
    let lines = [
        to_graph6(&w6).unwrap(),
        to_graph6(&relabeled).unwrap(),
        "not graph6".to_string(),
        to_graph6(&catalog("PETERSEN").unwrap().graph).unwrap(),
        to_graph6(&catalog("C6BAR_PLUS").unwrap().graph).unwrap(),
    ];
    fs::write(&path, lines.join("\n")).unwrap();
    let census = run_census(&CensusConfig {
        source: Source::Files {
            paths: vec![path.clone()],
            max_n: Some(8),
        },
        checks: vec![Check::Main],
        ..CensusConfig::generate(1)
    })
    .unwrap();
    let s = &census.summary;
    assert_eq!((s.skipped_lines, s.duplicates, s.out_of_range), (1, 1, 1));
    assert_eq!(s.max_n, 6);
    assert!(s.label.contains("input corpus"));
    // only members present in the input are expected
    let main = s.main.as_ref().unwrap();
    assert_eq!(main.expected.len(), 2);
    assert!(main.passed);
}

#[test]
fn capacity_errors_are_recorded_per_graph() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("big.g6");
    let lines = [to_graph6(&Graph::complete(34)).unwrap(), "C~".to_string()];
    fs::write(&path, lines.join("\n")).unwrap();
    let census = run_census(&CensusConfig {
        source: Source::Files {
            paths: vec![path],
            max_n: None,
        },
        checks: vec![Check::Thm11],
        ..CensusConfig::generate(1)
    })
    .unwrap();
    assert_eq!(census.summary.capacity_errors.len(), 1);
    assert_eq!(census.summary.capacity_errors[0].n, 34);
    assert_eq!(census.records.len(), 1);
}

#[test]
fn config_validation() {
    assert!(run_census(&CensusConfig::generate(11)).is_err());
    assert!(run_census(&CensusConfig {
        checks: vec![],
        ..CensusConfig::generate(4)
    })
    .is_err());
    assert!(run_census(&CensusConfig {
        jobs: 0,
        ..CensusConfig::generate(4)
    })
    .is_err());
}

#[test]
fn report_formats() {
    let census = run_census(&claw_free_main(4, 1)).unwrap();
    assert_eq!(census.records.len(), 1);
    let mut two = census.clone();
    two.records.push(census.records[0].clone());
    let text = jsonl(&two);
    assert_eq!(text.lines().count(), 3);
    let last: serde_json::Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
    assert!(last["summary"]["label"].as_str().unwrap().starts_with("verified up to"));
    let first: serde_json::Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
    let keys: Vec<&str> = first.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    let mut want = CSV_HEADER.to_vec();
    want.sort();
    let mut keys = keys;
    keys.sort();
    assert_eq!(keys, want);

    let mut empty = census.clone();
    empty.records.clear();
    assert_eq!(jsonl(&empty).lines().count(), 1);

    let mut buf = Vec::new();
    write_csv(&mut buf, &census.summary, &census.records).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "\"graph6\",\"n\",\"edges\",\"claw_free\",\"brick\",\"b_invariant\",\"solitary\",\"every_b_invariant_solitary\",\"verdicts\""
    );
    assert!(lines.next().unwrap().starts_with("\"C~\",4,6,"));
    assert!(lines.all(|l| l.starts_with("# ")));

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.csv");
    emit_report(&out, Format::Csv, &census.summary, &census.records).unwrap();
    assert!(fs::read_to_string(&out).unwrap().contains("# "));
    assert!(emit_report(&dir.path().join("no/such/dir.jsonl"), Format::Jsonl, &census.summary, &[]).is_err());
}

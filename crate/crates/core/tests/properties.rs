use bricklab_core::generate::{generate_all_graphs, GenerationFilter};
use bricklab_core::graph6::{parse_graph6, to_graph6};
use bricklab_core::matching::{count_perfect_matchings, count_pm_containing, enumerate_perfect_matchings, is_brick, is_matching_covered};
use bricklab_core::tight_cut::{decompose, is_tight};
use bricklab_core::{classify_all, Graph, VertexSet};
use proptest::prelude::*;

fn simple_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let m = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), m).prop_map(move |bits| {
            let pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
            Graph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p)).unwrap()
        })
    })
}

fn matching_covered(max_n: usize) -> impl Strategy<Value = Graph> {
    simple_graph(max_n).prop_filter("matching covered", |g| is_matching_covered(g).unwrap())
}

fn all_graphs_up_to(n: usize) -> Vec<Graph> {
    (1..=n)
        .flat_map(|k| generate_all_graphs(k, GenerationFilter::all()).unwrap())
        .collect()
}

fn brute_claw_free(g: &Graph) -> bool {
    let n = g.n();
    for c in 0..n {
        for a in 0..n {
            for b in a + 1..n {
                for d in b + 1..n {
                    if [a, b, d].contains(&c) {
                        continue;
                    }
                    let star = g.has_edge(c, a) && g.has_edge(c, b) && g.has_edge(c, d);
                    let independent = !g.has_edge(a, b) && !g.has_edge(a, d) && !g.has_edge(b, d);
                    if star && independent {
                        return false;
                    }
                }
            }
        }
    }
    true
}

proptest! {
    #[test]
    fn graph6_round_trip(g in simple_graph(10)) {
        let s = to_graph6(&g).unwrap();
        prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
        let back = parse_graph6(&s).unwrap();
        prop_assert_eq!(back.adjacency(), g.adjacency());
    }

    #[test]
    fn contraction_arithmetic(g in simple_graph(9), mask in any::<u64>()) {
        let n = g.n();
        let x = VertexSet(mask & VertexSet::full(n).0);
        prop_assume!(!x.is_empty() && x.len() < n);
        let inside = g.edges().iter().filter(|&&(u, v)| x.contains(u) && x.contains(v)).count();
        let (h, map) = g.contract(x).unwrap();
        prop_assert_eq!(h.n(), n - x.len() + 1);
        prop_assert_eq!(h.edge_count(), g.edge_count() - inside);
        prop_assert!(x.iter().all(|v| map[v] == h.n() - 1));
    }

    #[test]
    fn incident_counts_partition_matchings(g in simple_graph(10), v in 0usize..10) {
        let v = v % g.n();
        let total = count_perfect_matchings(&g, None).unwrap();
        let through: u64 = g.edges().iter().enumerate()
            .filter(|(_, &(a, b))| a == v || b == v)
            .map(|(e, _)| count_pm_containing(&g, e, u64::MAX).unwrap())
            .sum();
        prop_assert_eq!(through, total);
    }

    #[test]
    fn tightness_is_symmetric(g in matching_covered(10), mask in any::<u64>()) {
        let n = g.n();
        let pms = enumerate_perfect_matchings(&g, None).unwrap();
        for v in 0..n {
            prop_assert!(is_tight(&g, VertexSet::singleton(v), &pms).unwrap());
            prop_assert!(is_tight(&g, VertexSet::singleton(v).complement(n), &pms).unwrap());
        }
        let x = VertexSet(mask & VertexSet::full(n).0);
        prop_assume!(!x.is_empty() && x.len() < n);
        prop_assert_eq!(is_tight(&g, x, &pms).unwrap(), is_tight(&g, x.complement(n), &pms).unwrap());
    }

    #[test]
    fn decomposition_flags(g in matching_covered(10)) {
        let d = decompose(&g).unwrap();
        prop_assert_eq!(d.b == 0, g.is_bipartite());
        prop_assert_eq!(d.b + d.braces, d.pieces.len());
        for p in &d.pieces {
            prop_assert_eq!(p.nonbipartite, !p.graph.is_bipartite());
        }
        if is_brick(&g).unwrap() {
            prop_assert_eq!(d.pieces.len(), 1);
            prop_assert_eq!(&d.pieces[0].graph, &g);
        }
        // both contractions of every chosen cut stay matching covered
        for step in &d.trace {
            let n = step.host.n();
            for shore in [step.cut.shore, step.cut.shore.complement(n)] {
                let (h, _) = step.host.contract(shore).unwrap();
                prop_assert!(is_matching_covered(&h).unwrap());
            }
        }
    }
}

#[test]
fn claw_free_matches_brute_force_up_to_eight() {
    for g in all_graphs_up_to(8) {
        assert_eq!(g.is_claw_free(), brute_claw_free(&g), "{}", to_graph6(&g).unwrap());
    }
}

#[test]
fn bricks_have_even_order_and_min_degree_three() {
    for g in all_graphs_up_to(8) {
        if g.is_connected() && is_brick(&g).unwrap() {
            assert!(g.n() >= 4 && g.n() % 2 == 0 && g.min_degree() >= 3);
        }
    }
}

#[test]
fn filtered_generation_counts() {
    let connected_claw_free = GenerationFilter {
        connected: true,
        claw_free: true,
        min_degree: 0,
    };
    let counts: Vec<usize> = (1..=7)
        .map(|n| generate_all_graphs(n, connected_claw_free).unwrap().len())
        .collect();
    assert_eq!(counts, [1, 1, 2, 5, 14, 50, 191]);

    let cubic_up = GenerationFilter {
        connected: true,
        claw_free: false,
        min_degree: 3,
    };
    let counts: Vec<usize> = (4..=7)
        .map(|n| generate_all_graphs(n, cubic_up).unwrap().len())
        .collect();
    assert_eq!(counts, [1, 3, 19, 150]);

    let eight = generate_all_graphs(8, GenerationFilter::all()).unwrap();
    assert_eq!(eight.len(), 12346);
    let post_hoc = eight.iter().filter(|g| g.is_connected() && g.min_degree() >= 3).count();
    assert_eq!(generate_all_graphs(8, cubic_up).unwrap().len(), post_hoc);
}

#[test]
fn edge_classes_agree_with_enumeration() {
    for g in all_graphs_up_to(8) {
        if !is_matching_covered(&g).unwrap() {
            continue;
        }
        let pms = enumerate_perfect_matchings(&g, None).unwrap();
        let report = classify_all(&g).unwrap();
        for c in &report.edges {
            let through = pms.iter().filter(|m| m.contains(c.edge)).count();
            assert_eq!(c.solitary, through == 1);
            assert_eq!(c.pm_count_capped, through.min(2) as u64);
            if c.b_invariant.is_some() {
                assert!(c.removable);
            }
        }
    }
}

//! Named graphs with fixed labelings.
//!
//! The four small bricks, the four members of the family 𝒢 of claw-free
//! bricks whose `b`-invariant edges are all solitary, and the spanning
//! subgraphs `F1`–`F4` that arise in the case analysis of that family.
//! Labelings are our own; pictures elsewhere may use different names for
//! the same vertices, so comparisons should go through
//! [`is_isomorphic`](crate::canon::is_isomorphic).

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub graph: Graph,
    pub provenance: &'static str,
}

pub const CATALOG_NAMES: &[&str] = &[
    "K4",
    "C6BAR",
    "C6BAR_PLUS",
    "PETERSEN",
    "R8",
    "W6",
    "W6_PLUS",
    "W6_PLUSPLUS",
    "F1",
    "F2",
    "F3",
    "F4",
    "K33",
];

/// Members of 𝒢, in catalog order.
pub const FAMILY_G: &[&str] = &["C6BAR_PLUS", "W6", "W6_PLUS", "W6_PLUSPLUS"];

/// Bricks with fewer than two `b`-invariant edges.
pub const THIN_BRICKS: &[&str] = &["K4", "C6BAR", "R8", "PETERSEN"];

const PRISM: [(usize, usize); 9] = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)];

// vertices: 0=u 1=v 2=x1 3=x2 4=x11 5=x12 6=x21 7=x22
const R8: [(usize, usize); 12] = [
    (0, 1),
    (0, 4),
    (0, 7),
    (1, 5),
    (1, 6),
    (2, 3),
    (2, 4),
    (2, 5),
    (3, 6),
    (3, 7),
    (4, 5),
    (6, 7),
];

const WHEEL_RIM: [(usize, usize); 5] = [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)];

/// Looks up a named graph, ignoring ASCII case.
pub fn catalog(name: &str) -> Result<CatalogEntry> {
    let key = name.to_ascii_uppercase();
    let (name, pairs, provenance): (&'static str, Vec<(usize, usize)>, &'static str) = match key.as_str() {
        "K4" => ("K4", Graph::complete(4).edges().to_vec(), "complete graph on 4 vertices"),
        "C6BAR" => (
            "C6BAR",
            PRISM.to_vec(),
            "triangular prism: triangles {0,1,2}, {3,4,5}, rungs i-(i+3); equals the complement of C6",
        ),
        "C6BAR_PLUS" => (
            "C6BAR_PLUS",
            PRISM.iter().copied().chain([(0, 4)]).collect(),
            "prism plus one non-edge; all prism non-edges are equivalent under its automorphisms",
        ),
        "PETERSEN" => (
            "PETERSEN",
            (0..5)
                .map(|i| (i, (i + 1) % 5))
                .chain([(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)])
                .chain((0..5).map(|i| (i, i + 5)))
                .collect(),
            "outer 5-cycle 0..4, inner pentagram 5-7-9-6-8, spokes i-(i+5)",
        ),
        "R8" => (
            "R8",
            R8.to_vec(),
            "F3 minus {0-5, 1-7}; vertices (u, v, x1, x2, x11, x12, x21, x22)",
        ),
        "W6" => (
            "W6",
            WHEEL_RIM.iter().copied().chain((1..6).map(|i| (0, i))).collect(),
            "hub 0, rim cycle 1-2-3-4-5-1",
        ),
        "W6_PLUS" => (
            "W6_PLUS",
            WHEEL_RIM
                .iter()
                .copied()
                .chain((1..6).map(|i| (0, i)))
                .chain([(1, 3)])
                .collect(),
            "W6 plus rim chord 1-3; every rim non-edge is a distance-2 chord",
        ),
        "W6_PLUSPLUS" => (
            "W6_PLUSPLUS",
            [(0, 1)]
                .into_iter()
                .chain([0, 1].into_iter().flat_map(|h| (2..6).map(move |i| (h, i))))
                .chain([(2, 3), (3, 4), (4, 5)])
                .collect(),
            "join of edge 0-1 with path 2-3-4-5; hubs are y0, y1 and y3y4 is edge 3-4",
        ),
        "F1" => (
            "F1",
            [(0, 1), (0, 2), (0, 3), (0, 5), (1, 2), (1, 4), (1, 5), (2, 3), (3, 4), (4, 5)].to_vec(),
            "0=u 1=v 2=u1 3=u2 4=a 5=u4",
        ),
        "F2" => (
            "F2",
            [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 5), (2, 3), (3, 4), (4, 5)].to_vec(),
            "0=u 1=v 2=u1 3=u2 4=u3 5=u4",
        ),
        "F3" => ("F3", R8.iter().copied().chain([(0, 5), (1, 7)]).collect(), "R8 plus ux12 (0-5) and vx22 (1-7)"),
        "F4" => ("F4", R8.iter().copied().chain([(0, 6), (1, 7)]).collect(), "R8 plus ux21 (0-6) and vx22 (1-7)"),
        "K33" => (
            "K33",
            (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect(),
            "parts {0,1,2} and {3,4,5}",
        ),
        _ => {
            return Err(Error::UnknownName {
                name: name.to_string(),
                valid: CATALOG_NAMES.join(", "),
            })
        }
    };
    let n = pairs.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let graph = Graph::new(n, pairs).expect("catalog edge lists are valid");
    Ok(CatalogEntry { name, graph, provenance })
}

/// Names of catalog graphs isomorphic to `g`.
pub fn identify(g: &Graph) -> Vec<&'static str> {
    let form = crate::canon::canonical_form(g);
    CATALOG_NAMES
        .iter()
        .copied()
        .filter(|name| {
            let h = catalog(name).expect("listed name").graph;
            h.n() == g.n() && crate::canon::canonical_form(&h) == form
        })
        .collect()
}

/// Comma separated list of catalog names, for messages.
pub fn names_list() -> String {
    CATALOG_NAMES.join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;

    fn get(name: &str) -> Graph {
        catalog(name).unwrap().graph
    }

    #[test]
    fn lookup_is_case_insensitive() {
        assert_eq!(catalog("w6_plus").unwrap().name, "W6_PLUS");
        let err = catalog("K5").unwrap_err();
        assert!(alloc::format!("{err}").contains("PETERSEN"));
    }

    #[test]
    fn prism_shape() {
        let g = get("C6BAR");
        assert_eq!((g.n(), g.edge_count()), (6, 9));
        assert!((0..6).all(|v| g.degree(v) == 3));
        // complement of the 6-cycle
        let c6 = Graph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let comp: Vec<u64> = (0..6).map(|v| !c6.adjacency()[v] & 0b111111 & !(1 << v)).collect();
        assert!(is_isomorphic(&g, &Graph::from_adjacency(&comp)));
    }

    #[test]
    fn r8_shape() {
        let g = get("R8");
        assert_eq!(g.n(), 8);
        assert!((0..8).all(|v| g.degree(v) == 3));
        assert_eq!(g.triangles().len(), 2);
        assert!(!is_isomorphic(&g, &get("PETERSEN")));
    }

    #[test]
    fn proof_subgraphs_match_family() {
        assert!(is_isomorphic(&get("F1"), &get("C6BAR_PLUS")));
        assert!(is_isomorphic(&get("F2"), &get("W6")));
        // F1 with exactly one of ua (0-4), vu2 (1-3)
        assert!(is_isomorphic(&get("F1").with_edge(0, 4).unwrap(), &get("W6_PLUS")));
        assert!(is_isomorphic(&get("F1").with_edge(1, 3).unwrap(), &get("W6_PLUS")));
        let both = get("F1").with_edge(0, 4).unwrap().with_edge(1, 3).unwrap();
        assert!(is_isomorphic(&both, &get("W6_PLUSPLUS")));
        assert!(is_isomorphic(&get("F2").with_edge(1, 3).unwrap(), &get("W6_PLUS")));
    }

    #[test]
    fn named_bricks_have_min_degree_three_and_are_three_connected() {
        for name in ["K4", "C6BAR", "C6BAR_PLUS", "PETERSEN", "R8", "W6", "W6_PLUS", "W6_PLUSPLUS"] {
            let g = get(name);
            assert!(g.is_three_connected(), "{name}");
            assert!(g.min_degree() >= 3, "{name}");
        }
    }

    #[test]
    fn identify_finds_names() {
        assert_eq!(identify(&get("F2")), ["W6", "F2"]);
        assert_eq!(identify(&Graph::complete(4)), ["K4"]);
        assert!(identify(&Graph::complete(5)).is_empty());
    }
}

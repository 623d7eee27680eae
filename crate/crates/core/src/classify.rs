//! Per-edge classification of matching covered graphs.
//!
//! An edge `e` is removable when `G - e` is still matching covered, and a
//! removable edge is `b`-invariant when `b(G - e) = b(G)`. An edge is
//! solitary when exactly one perfect matching contains it.

use alloc::vec::Vec;

use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::Graph;
use crate::matching::{check_capacity, check_edge, count_pm_containing, every_edge_admissible, is_matching_covered};
use crate::tight_cut::b_count;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeClass {
    pub edge: usize,
    pub removable: bool,
    /// `None` for nonremovable edges, where `b`-invariance is undefined.
    pub b_invariant: Option<bool>,
    pub solitary: bool,
    /// Perfect matchings through the edge, counted up to 2.
    pub pm_count_capped: u64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ClassSummary {
    pub removable: usize,
    pub b_invariant: usize,
    pub solitary: usize,
    pub b_invariant_and_solitary: usize,
}

#[derive(Debug, Clone)]
pub struct EdgeClassReport {
    pub certificate: CanonicalForm,
    /// `b(G)` of the host.
    pub b: usize,
    pub edges: Vec<EdgeClass>,
    pub summary: ClassSummary,
}

impl EdgeClassReport {
    /// Every `b`-invariant edge is solitary (vacuous if there are none).
    pub fn every_b_invariant_solitary(&self) -> bool {
        self.edges
            .iter()
            .all(|c| c.b_invariant != Some(true) || c.solitary)
    }

    pub fn b_invariant_edges(&self) -> Vec<usize> {
        self.edges
            .iter()
            .filter(|c| c.b_invariant == Some(true))
            .map(|c| c.edge)
            .collect()
    }

    pub fn removable_edges(&self) -> Vec<usize> {
        self.edges.iter().filter(|c| c.removable).map(|c| c.edge).collect()
    }

    pub fn solitary_edges(&self) -> Vec<usize> {
        self.edges.iter().filter(|c| c.solitary).map(|c| c.edge).collect()
    }
}

fn require_matching_covered(g: &Graph) -> Result<()> {
    if !is_matching_covered(g)? {
        return Err(Error::Precondition("graph is not matching covered".into()));
    }
    Ok(())
}

/// `g - e` connected with every edge in a perfect matching. Assumes `g` is
/// matching covered.
fn removable_unchecked(g: &Graph, e: usize) -> Result<(bool, Graph)> {
    let h = g.without_edge(e)?;
    let ok = h.edge_count() > 0 && h.is_connected() && every_edge_admissible(&h);
    Ok((ok, h))
}

pub fn is_removable(g: &Graph, e: usize) -> Result<bool> {
    check_capacity(g)?;
    check_edge(g, e)?;
    require_matching_covered(g)?;
    Ok(removable_unchecked(g, e)?.0)
}

pub fn is_b_invariant(g: &Graph, e: usize) -> Result<bool> {
    check_capacity(g)?;
    check_edge(g, e)?;
    require_matching_covered(g)?;
    let (removable, h) = removable_unchecked(g, e)?;
    Ok(removable && b_count(&h)? == b_count(g)?)
}

pub fn is_solitary(g: &Graph, e: usize) -> Result<bool> {
    Ok(count_pm_containing(g, e, 2)? == 1)
}

/// Classifies every edge, in edge-index order.
pub fn classify_all(g: &Graph) -> Result<EdgeClassReport> {
    check_capacity(g)?;
    require_matching_covered(g)?;
    let b = b_count(g)?;
    let mut edges = Vec::with_capacity(g.edge_count());
    for e in 0..g.edge_count() {
        let (removable, h) = removable_unchecked(g, e)?;
        let b_invariant = if removable { Some(b_count(&h)? == b) } else { None };
        let pm_count_capped = count_pm_containing(g, e, 2)?;
        edges.push(EdgeClass {
            edge: e,
            removable,
            b_invariant,
            solitary: pm_count_capped == 1,
            pm_count_capped,
        });
    }
    let mut summary = ClassSummary::default();
    for c in &edges {
        let bi = c.b_invariant == Some(true);
        summary.removable += c.removable as usize;
        summary.b_invariant += bi as usize;
        summary.solitary += c.solitary as usize;
        summary.b_invariant_and_solitary += (bi && c.solitary) as usize;
    }
    Ok(EdgeClassReport {
        certificate: canonical_form(g),
        b,
        edges,
        summary,
    })
}

/// Whether every `b`-invariant edge of `g` is solitary.
pub fn every_b_invariant_solitary(g: &Graph) -> Result<bool> {
    Ok(classify_all(g)?.every_b_invariant_solitary())
}

/// Edges `xv` where `x` lies on a triangle `C` and `v` is the only
/// neighbor of `x` outside `C`. Each such edge is nonremovable in a
/// matching covered graph: every perfect matching using the edge of `C`
/// opposite `x` must also use `xv`. An edge with a parallel copy is skipped
/// since the copy can stand in for it.
pub fn triangle_nonremovable_edges(g: &Graph) -> Vec<usize> {
    let mut out = Vec::new();
    for tri in g.triangles() {
        let on = tri.iter().fold(0u64, |m, &v| m | 1 << v);
        for &x in &tri {
            let outside = g.adjacency()[x] & !on;
            if outside.count_ones() == 1 {
                let v = outside.trailing_zeros() as usize;
                let mut between = g.edges_between(x, v);
                if let (Some(e), None) = (between.next(), between.next()) {
                    out.push(e);
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::matching::enumerate_perfect_matchings;

    fn get(name: &str) -> Graph {
        catalog(name).unwrap().graph
    }

    fn edge(g: &Graph, u: usize, v: usize) -> usize {
        g.edges_between(u, v).next().unwrap()
    }

    /// Removability straight from the definition: enumerate the matchings
    /// of `g - e` and check coverage and connectivity.
    fn brute_removable(g: &Graph, e: usize) -> bool {
        let h = g.without_edge(e).unwrap();
        if !h.is_connected() {
            return false;
        }
        let pms = enumerate_perfect_matchings(&h, None).unwrap();
        (0..h.edge_count()).all(|f| pms.iter().any(|m| m.contains(f)))
    }

    #[test]
    fn removable_examples() {
        let plus = get("C6BAR_PLUS");
        // vertex 2 sits on triangle {0,1,2} with lone outside neighbor 5
        assert!(!is_removable(&plus, edge(&plus, 2, 5)).unwrap());
        let w6 = get("W6");
        for (u, v) in [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)] {
            assert!(!is_removable(&w6, edge(&w6, u, v)).unwrap());
        }
        let spoke = edge(&w6, 0, 1);
        assert!(brute_removable(&w6, spoke));
        assert!(is_removable(&w6, spoke).unwrap());
        assert!(is_removable(&w6, 99).is_err());
        assert!(matches!(
            is_removable(&Graph::complete(4).without_edge(0).unwrap(), 0),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn b_invariant_examples() {
        let w = get("W6_PLUSPLUS");
        assert!(!is_b_invariant(&w, edge(&w, 3, 4)).unwrap());
        let w6 = get("W6");
        assert!(is_b_invariant(&w6, edge(&w6, 0, 1)).unwrap());
        let k4 = Graph::complete(4);
        for e in 0..6 {
            assert!(!brute_removable(&k4, e));
            assert!(!is_b_invariant(&k4, e).unwrap());
        }
    }

    #[test]
    fn solitary_examples() {
        let k4 = Graph::complete(4);
        assert!((0..6).all(|e| is_solitary(&k4, e).unwrap()));
        let prism = get("C6BAR");
        for i in 0..3 {
            assert!(!is_solitary(&prism, edge(&prism, i, i + 3)).unwrap());
        }
        let w = get("W6_PLUSPLUS");
        assert!(is_solitary(&w, edge(&w, 0, 1)).unwrap());
    }

    #[test]
    fn wheel_report() {
        let w6 = get("W6");
        let r = classify_all(&w6).unwrap();
        assert_eq!(r.summary.b_invariant, 5);
        assert_eq!(r.summary.b_invariant_and_solitary, 5);
        let spokes: Vec<usize> = (1..6).map(|i| edge(&w6, 0, i)).collect();
        let mut got = r.b_invariant_edges();
        got.sort_unstable();
        let mut want = spokes.clone();
        want.sort_unstable();
        assert_eq!(got, want);
        assert!(r.every_b_invariant_solitary());
    }

    #[test]
    fn prism_plus_report() {
        let r = classify_all(&get("C6BAR_PLUS")).unwrap();
        assert_eq!(r.summary.b_invariant, 3);
        assert_eq!(r.summary.b_invariant_and_solitary, 3);
        assert_eq!(r.summary.solitary, 5);
    }

    #[test]
    fn double_hub_wheel_a_set() {
        let w = get("W6_PLUSPLUS");
        let r = classify_all(&w).unwrap();
        let mut want: Vec<usize> = [(0, 1), (0, 3), (0, 4), (1, 3), (1, 4)]
            .iter()
            .map(|&(u, v)| edge(&w, u, v))
            .collect();
        want.sort_unstable();
        assert_eq!(r.b_invariant_edges(), want);
        assert!(r.every_b_invariant_solitary());
    }

    #[test]
    fn family_members_all_solitary_but_prism_is_vacuous() {
        for name in crate::catalog::FAMILY_G {
            assert!(every_b_invariant_solitary(&get(name)).unwrap(), "{name}");
        }
        // the prism has no removable edge at all
        let prism = classify_all(&get("C6BAR")).unwrap();
        assert_eq!(prism.summary.removable, 0);
        assert!(prism.every_b_invariant_solitary());
        assert!(every_b_invariant_solitary(&Graph::complete(4)).unwrap());
    }

    #[test]
    fn report_invariants() {
        for name in ["R8", "W6_PLUS", "PETERSEN", "K33"] {
            let g = get(name);
            let r = classify_all(&g).unwrap();
            assert_eq!(r.edges.len(), g.edge_count());
            for c in &r.edges {
                assert_eq!(c.b_invariant.is_some(), c.removable);
                assert_eq!(c.solitary, c.pm_count_capped == 1);
            }
        }
    }

    #[test]
    fn triangle_rule_examples() {
        let w6 = get("W6");
        let got = triangle_nonremovable_edges(&w6);
        assert!(got.contains(&edge(&w6, 1, 5)));
        assert_eq!(got.len(), 5);
        let k4 = Graph::complete(4);
        assert_eq!(triangle_nonremovable_edges(&k4), [0, 1, 2, 3, 4, 5]);
        assert!(triangle_nonremovable_edges(&get("PETERSEN")).is_empty());
        for name in crate::CATALOG_NAMES {
            let g = get(name);
            if is_matching_covered(&g).unwrap() {
                for e in triangle_nonremovable_edges(&g) {
                    assert!(!brute_removable(&g, e), "{name} edge {e}");
                }
            }
        }
    }
}

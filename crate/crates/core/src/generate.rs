//! Isomorph-free generation of small simple graphs by canonical
//! augmentation.
//!
//! Graphs on `k + 1` vertices are built from canonical graphs on `k`
//! vertices by adding one vertex joined to a subset of the old ones. A child
//! `H` is kept only when its new vertex could be the canonical deletion: the
//! vertex chosen among the non-cut vertices of minimum degree, breaking ties
//! by the largest canonical label. The check is accepted when deleting the
//! chosen vertex gives a graph isomorphic to the parent. Each isomorphism
//! class then has exactly one parent class, and duplicates from one parent
//! are removed by canonical form.
//!
//! Deleting a non-cut vertex keeps a connected graph connected, and
//! deleting any vertex keeps a claw-free graph claw-free, so both filters
//! prune at every level. A minimum degree filter only applies at the last
//! level.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::canon::{canonize, canonical_form, CanonicalForm};
use crate::graph::Graph;
use crate::{Error, Result};

/// Largest order the generator accepts.
pub const MAX_GENERATION_ORDER: usize = 10;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GenerationFilter {
    pub connected: bool,
    pub claw_free: bool,
    /// Applied to graphs of the final order only.
    pub min_degree: usize,
}

impl GenerationFilter {
    pub fn all() -> GenerationFilter {
        GenerationFilter::default()
    }

    /// Whether `g` passes the hereditary filters.
    pub fn hereditary_ok(&self, g: &Graph) -> bool {
        (!self.connected || g.is_connected()) && (!self.claw_free || g.is_claw_free())
    }
}

/// The single-vertex seed level.
pub fn seed() -> Vec<(CanonicalForm, Graph)> {
    let g = Graph::empty(1);
    alloc::vec![(canonical_form(&g), g)]
}

/// Canonical children of one canonical parent. `final_level` enables the
/// minimum degree filter. Children are returned as canonical graphs in
/// order of canonical form.
pub fn children(
    parent: &Graph,
    parent_form: &CanonicalForm,
    filter: &GenerationFilter,
    final_level: bool,
) -> Vec<(CanonicalForm, Graph)> {
    let n = parent.n();
    let min_degree = if final_level { filter.min_degree } else { 0 };
    let mut required = 0u64;
    for v in 0..n {
        let d = parent.degree(v);
        if d + 1 < min_degree {
            return Vec::new();
        }
        if d < min_degree {
            required |= 1 << v;
        }
    }
    let mut found: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    for s in 0u64..(1u64 << n) {
        if s & required != required || (s.count_ones() as usize) < min_degree {
            continue;
        }
        if filter.connected && s == 0 && n > 0 {
            continue;
        }
        let child = attach(parent, s);
        if filter.claw_free && !child.is_claw_free() {
            continue;
        }
        if let Some(form) = accept(&child, parent_form) {
            found.entry(form).or_insert_with_key(|f| f.to_graph());
        }
    }
    found.into_iter().collect()
}

fn attach(parent: &Graph, s: u64) -> Graph {
    let n = parent.n();
    let mut adj = parent.adjacency().to_vec();
    adj.push(s);
    for v in VertexSet(s) {
        adj[v] |= 1 << n;
    }
    Graph::from_adjacency(&adj)
}

/// Canonical form of `child` if its last vertex passes the canonical
/// deletion test.
fn accept(child: &Graph, parent_form: &CanonicalForm) -> Option<CanonicalForm> {
    let new = child.n() - 1;
    let all = child.vertices();
    let comps = child.components_within(all);
    let mut candidates = VertexSet::EMPTY;
    for x in 0..child.n() {
        let mut rest = all;
        rest.remove(x);
        if child.components_within(rest) <= comps {
            candidates.insert(x);
        }
    }
    if !candidates.contains(new) {
        return None;
    }
    let dmin = candidates.iter().map(|x| child.degree(x)).min()?;
    if child.degree(new) != dmin {
        return None;
    }
    let tied = VertexSet::from_vertices(candidates.iter().filter(|&x| child.degree(x) == dmin));
    let (labeling, form) = canonize(child);
    if tied.len() == 1 {
        return Some(form);
    }
    let chosen = tied.iter().max_by_key(|&x| labeling[x])?;
    if chosen == new {
        return Some(form);
    }
    let (rest, _) = child.without_vertices(VertexSet::singleton(chosen));
    (canonical_form(&rest) == *parent_form).then_some(form)
}

/// One generation step over a whole level.
pub fn extend_level(
    parents: &[(CanonicalForm, Graph)],
    filter: &GenerationFilter,
    final_level: bool,
) -> Vec<(CanonicalForm, Graph)> {
    let mut out: Vec<_> = parents
        .iter()
        .flat_map(|(f, g)| children(g, f, filter, final_level))
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

pub fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_GENERATION_ORDER {
        return Err(Error::Capacity(format!(
            "generation order {n} outside 1..={MAX_GENERATION_ORDER}"
        )));
    }
    Ok(())
}

/// One canonical representative of every isomorphism class of simple
/// graphs on `n` vertices that passes `filter`, ordered by canonical form.
pub fn generate_all_graphs(n: usize, filter: GenerationFilter) -> Result<Vec<Graph>> {
    check_order(n)?;
    let mut level = seed();
    for k in 1..n {
        level = extend_level(&level, &filter, k + 1 == n);
    }
    if n == 1 {
        level.retain(|(_, g)| g.min_degree() >= filter.min_degree);
    }
    Ok(level.into_iter().map(|(_, g)| g).collect())
}

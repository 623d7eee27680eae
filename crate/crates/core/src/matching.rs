//! Perfect matchings: existence, enumeration, counting and the predicates
//! built on them (matching covered, bicritical, brick).
//!
//! Existence uses Edmonds' blossom algorithm on the simple view.
//! Enumeration and counting backtrack over edges, so parallel edges are
//! distinct choices and are counted separately.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::{EdgeSet, VertexSet};
use crate::graph::Graph;
use crate::{Error, Result, MAX_MATCHING_EDGES, MAX_MATCHING_VERTICES};

/// A perfect matching, as a set of edge indices of its host graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    edges: EdgeSet,
}

impl Matching {
    pub fn edge_set(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn contains(&self, e: usize) -> bool {
        self.edges.contains(e)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter()
    }

    /// Checks that the edges are pairwise disjoint and cover every vertex
    /// of `g`.
    pub fn is_perfect_in(&self, g: &Graph) -> bool {
        let mut covered = 0u64;
        for e in self.edges.iter() {
            if e >= g.edge_count() {
                return false;
            }
            let (u, v) = g.edge(e);
            let bits = 1u64 << u | 1u64 << v;
            if covered & bits != 0 {
                return false;
            }
            covered |= bits;
        }
        covered == g.vertices().0
    }
}

/// Perfect matchings of `host` in enumeration order. `complete` is false
/// when enumeration stopped at a cap.
#[derive(Debug, Clone)]
pub struct MatchingSet<'g> {
    pub host: &'g Graph,
    pub matchings: Vec<Matching>,
    pub complete: bool,
}

impl MatchingSet<'_> {
    pub fn len(&self) -> usize {
        self.matchings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matchings.is_empty()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Matching> {
        self.matchings.iter()
    }
}

pub(crate) fn check_capacity(g: &Graph) -> Result<()> {
    if g.n() > MAX_MATCHING_VERTICES {
        return Err(Error::Capacity(format!(
            "{} vertices exceeds the exact matching bound of {MAX_MATCHING_VERTICES}",
            g.n()
        )));
    }
    if g.edge_count() > MAX_MATCHING_EDGES {
        return Err(Error::Capacity(format!(
            "{} edges exceeds the edge set width of {MAX_MATCHING_EDGES}",
            g.edge_count()
        )));
    }
    Ok(())
}

pub fn has_perfect_matching(g: &Graph) -> Result<bool> {
    check_capacity(g)?;
    Ok(perfect_within(g.adjacency(), g.vertices().0))
}

/// Size of a maximum matching of the simple view.
pub fn maximum_matching_size(g: &Graph) -> Result<usize> {
    check_capacity(g)?;
    let mate = blossom(g.adjacency(), g.vertices().0);
    Ok(mate.iter().filter(|m| m.is_some()).count() / 2)
}

/// Whether the subgraph induced by `within` has a perfect matching.
pub(crate) fn perfect_within(adj: &[u64], within: u64) -> bool {
    if within.count_ones() % 2 == 1 {
        return false;
    }
    if within == 0 {
        return true;
    }
    let mut w = within;
    while w != 0 {
        let v = w.trailing_zeros() as usize;
        w &= w - 1;
        if adj[v] & within == 0 {
            return false;
        }
    }
    let mate = blossom(adj, within);
    VertexSet(within).iter().all(|v| mate[v].is_some())
}

/// Edmonds' blossom algorithm restricted to the vertices of `within`.
/// Returns the mate of every vertex.
fn blossom(adj: &[u64], within: u64) -> Vec<Option<usize>> {
    let n = adj.len();
    let mut mate: Vec<Option<usize>> = vec![None; n];
    for v in VertexSet(within) {
        if mate[v].is_none() {
            if let Some(w) = VertexSet(adj[v] & within).iter().find(|&w| mate[w].is_none()) {
                mate[v] = Some(w);
                mate[w] = Some(v);
            }
        }
    }
    let mut state = BlossomState {
        adj,
        within,
        parent: vec![None; n],
        base: (0..n).collect(),
        used: vec![false; n],
        queue: VecDeque::new(),
    };
    for root in VertexSet(within) {
        if mate[root].is_none() {
            if let Some(mut v) = state.find_path(root, &mate) {
                loop {
                    let pv = state.parent[v].expect("augmenting path is linked");
                    let next = mate[pv];
                    mate[v] = Some(pv);
                    mate[pv] = Some(v);
                    match next {
                        Some(x) => v = x,
                        None => break,
                    }
                }
            }
        }
    }
    mate
}

struct BlossomState<'a> {
    adj: &'a [u64],
    within: u64,
    parent: Vec<Option<usize>>,
    base: Vec<usize>,
    used: Vec<bool>,
    queue: VecDeque<usize>,
}

impl BlossomState<'_> {
    fn find_path(&mut self, root: usize, mate: &[Option<usize>]) -> Option<usize> {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = None);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.used[root] = true;
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for to in VertexSet(self.adj[v] & self.within) {
                if self.base[v] == self.base[to] || mate[v] == Some(to) {
                    continue;
                }
                let odd_cycle = to == root || mate[to].is_some_and(|m| self.parent[m].is_some());
                if odd_cycle {
                    let cur = self.lca(v, to, mate);
                    let mut in_blossom = vec![false; n];
                    self.mark_path(v, cur, to, mate, &mut in_blossom);
                    self.mark_path(to, cur, v, mate, &mut in_blossom);
                    for i in VertexSet(self.within) {
                        if in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to].is_none() {
                    self.parent[to] = Some(v);
                    match mate[to] {
                        None => return Some(to),
                        Some(m) => {
                            self.used[m] = true;
                            self.queue.push_back(m);
                        }
                    }
                }
            }
        }
        None
    }

    fn lca(&self, mut a: usize, mut b: usize, mate: &[Option<usize>]) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            match mate[a] {
                None => break,
                Some(m) => a = self.parent[m].expect("even vertex has a tree parent"),
            }
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            let m = mate[b].expect("path to the root alternates");
            b = self.parent[m].expect("even vertex has a tree parent");
        }
    }

    fn mark_path(
        &mut self,
        mut v: usize,
        b: usize,
        mut child: usize,
        mate: &[Option<usize>],
        in_blossom: &mut [bool],
    ) {
        while self.base[v] != b {
            let m = mate[v].expect("blossom path is matched");
            in_blossom[self.base[v]] = true;
            in_blossom[self.base[m]] = true;
            self.parent[v] = Some(child);
            child = m;
            v = self.parent[m].expect("even vertex has a tree parent");
        }
    }
}

/// Incidence lists `(edge, other end)` in edge-index order.
fn incidence(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let mut inc = vec![Vec::new(); g.n()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        inc[u].push((e, v));
        inc[v].push((e, u));
    }
    inc
}

struct Backtrack<'a> {
    adj: &'a [u64],
    inc: Vec<Vec<(usize, usize)>>,
}

impl Backtrack<'_> {
    fn stranded(&self, unmatched: u64) -> bool {
        VertexSet(unmatched).iter().any(|v| self.adj[v] & unmatched == 0)
    }

    fn enumerate(&self, unmatched: u64, chosen: &mut EdgeSet, out: &mut Vec<Matching>, cap: usize) {
        if out.len() >= cap {
            return;
        }
        if unmatched == 0 {
            out.push(Matching { edges: *chosen });
            return;
        }
        if self.stranded(unmatched) {
            return;
        }
        let v = unmatched.trailing_zeros() as usize;
        for &(e, w) in &self.inc[v] {
            if unmatched >> w & 1 == 1 {
                chosen.insert(e);
                self.enumerate(unmatched & !(1 << v | 1 << w), chosen, out, cap);
                chosen.remove(e);
                if out.len() >= cap {
                    return;
                }
            }
        }
    }

    fn count(&self, unmatched: u64, cap: u64) -> u64 {
        if unmatched == 0 {
            return 1;
        }
        if self.stranded(unmatched) {
            return 0;
        }
        let v = unmatched.trailing_zeros() as usize;
        let mut total = 0;
        for &(_, w) in &self.inc[v] {
            if unmatched >> w & 1 == 1 {
                total += self.count(unmatched & !(1 << v | 1 << w), cap - total);
                if total >= cap {
                    return cap;
                }
            }
        }
        total
    }
}

/// All perfect matchings in a fixed order: the lowest unmatched vertex is
/// matched next, trying its incident edges by increasing index. With a cap
/// the set holds at most `cap` matchings and `complete` is false if more
/// exist.
pub fn enumerate_perfect_matchings(g: &Graph, cap: Option<usize>) -> Result<MatchingSet<'_>> {
    check_capacity(g)?;
    let bt = Backtrack {
        adj: g.adjacency(),
        inc: incidence(g),
    };
    let mut out = Vec::new();
    let limit = cap.map_or(usize::MAX, |c| c.saturating_add(1));
    if g.n() % 2 == 0 {
        bt.enumerate(g.vertices().0, &mut EdgeSet::new(), &mut out, limit);
    }
    let complete = match cap {
        Some(c) if out.len() > c => {
            out.truncate(c);
            false
        }
        _ => true,
    };
    Ok(MatchingSet {
        host: g,
        matchings: out,
        complete,
    })
}

/// Number of perfect matchings, stopping at `cap` if given.
pub fn count_perfect_matchings(g: &Graph, cap: Option<u64>) -> Result<u64> {
    check_capacity(g)?;
    if g.n() % 2 == 1 {
        return Ok(0);
    }
    let bt = Backtrack {
        adj: g.adjacency(),
        inc: incidence(g),
    };
    Ok(bt.count(g.vertices().0, cap.unwrap_or(u64::MAX)))
}

/// Number of perfect matchings containing edge `e`, stopping at `cap`.
pub fn count_pm_containing(g: &Graph, e: usize, cap: u64) -> Result<u64> {
    check_capacity(g)?;
    check_edge(g, e)?;
    if g.n() % 2 == 1 || cap == 0 {
        return Ok(0);
    }
    let (u, v) = g.edge(e);
    let bt = Backtrack {
        adj: g.adjacency(),
        inc: incidence(g),
    };
    Ok(bt.count(g.vertices().0 & !(1 << u | 1 << v), cap))
}

pub(crate) fn check_edge(g: &Graph, e: usize) -> Result<()> {
    if e >= g.edge_count() {
        return Err(Error::Argument(format!(
            "edge index {e} out of range (graph has {} edges)",
            g.edge_count()
        )));
    }
    Ok(())
}

/// Connected, at least one edge, and every edge lies in a perfect matching.
pub fn is_matching_covered(g: &Graph) -> Result<bool> {
    check_capacity(g)?;
    if g.edge_count() == 0 || !g.is_connected() || g.n() % 2 == 1 {
        return Ok(false);
    }
    Ok(every_edge_admissible(g))
}

pub(crate) fn every_edge_admissible(g: &Graph) -> bool {
    let all = g.vertices().0;
    let adj = g.adjacency();
    // parallel copies share an answer, so test each adjacent pair once
    (0..g.n()).all(|u| {
        VertexSet(adj[u] & !((2u64 << u) - 1))
            .iter()
            .all(|v| perfect_within(adj, all & !(1 << u | 1 << v)))
    })
}

/// `g - {u, v}` has a perfect matching for every pair of distinct vertices.
pub fn is_bicritical(g: &Graph) -> Result<bool> {
    check_capacity(g)?;
    let n = g.n();
    if n % 2 == 1 || n < 2 {
        return Ok(false);
    }
    let all = g.vertices().0;
    let adj = g.adjacency();
    Ok((0..n).all(|u| (u + 1..n).all(|v| perfect_within(adj, all & !(1 << u | 1 << v)))))
}

/// 3-connected and bicritical.
pub fn is_brick(g: &Graph) -> Result<bool> {
    check_capacity(g)?;
    Ok(g.is_three_connected() && is_bicritical(g)?)
}

/// For a connected graph with exactly one perfect matching, a bridge that
/// belongs to that matching. Such a bridge always exists (Kotzig), so
/// `Ok(None)` would signal a counterexample.
pub fn unique_pm_bridge(g: &Graph) -> Result<Option<usize>> {
    check_capacity(g)?;
    if !g.is_connected() {
        return Err(Error::Precondition("graph is disconnected".into()));
    }
    let pms = enumerate_perfect_matchings(g, Some(2))?;
    if pms.len() != 1 {
        return Err(Error::Precondition(format!(
            "expected a unique perfect matching, found {}{}",
            pms.len(),
            if pms.complete { "" } else { " or more" }
        )));
    }
    let m = &pms.matchings[0];
    Ok(g.bridges().into_iter().find(|&e| m.contains(e)))
}

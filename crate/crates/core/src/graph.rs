//! Labeled multigraphs and structural predicates.
//!
//! Vertices are `0..n`. Edges are kept in insertion order and an edge index
//! always names the same pair. Parallel edges are allowed because
//! contracting a shore of a cut produces them; loops are not.
//! Structural predicates (connectivity, bipartiteness, claw-freeness,
//! 3-connectivity) look at the simple view only, while [`Graph::bridges`]
//! respects multiplicity.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::error::GraphError;
use crate::{Error, Result, MAX_VERTICES};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from vertex pairs, keeping their order and
    /// multiplicity. Pairs are stored with the smaller endpoint first.
    pub fn new<I>(n: usize, pairs: I) -> core::result::Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut g = Graph::empty(n);
        for (u, v) in pairs {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.push_edge(u, v);
        }
        Ok(g)
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Graph {
        assert!(n <= MAX_VERTICES, "graph order {n} exceeds {MAX_VERTICES}");
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![0; n],
        }
    }

    /// Complete graph on `n` vertices, edges in graph6 column order.
    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for j in 1..n {
            for i in 0..j {
                g.push_edge(i, j);
            }
        }
        g
    }

    /// Builds a simple graph from symmetric adjacency rows. Edges are listed
    /// in graph6 column order: (0,1), (0,2), (1,2), (0,3), ...
    pub fn from_adjacency(adj: &[u64]) -> Graph {
        let n = adj.len();
        let mut g = Graph::empty(n);
        for (j, row) in adj.iter().enumerate().skip(1) {
            for i in 0..j {
                if row >> i & 1 == 1 {
                    g.push_edge(i, j);
                }
            }
        }
        g
    }

    pub(crate) fn push_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.edges.push((u.min(v), u.max(v)));
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// Simple adjacency rows, one bit per distinct neighbor.
    #[inline]
    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Number of distinct neighbors of `v`.
    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Minimum simple degree, `0` for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        let key = (u.min(v), u.max(v));
        self.edges.iter().filter(|&&e| e == key).count()
    }

    pub fn is_simple(&self) -> bool {
        let simple: usize = self.adj.iter().map(|r| r.count_ones() as usize).sum();
        simple == 2 * self.edges.len()
    }

    /// Indices of edges joining `u` and `v`.
    pub fn edges_between(&self, u: usize, v: usize) -> impl Iterator<Item = usize> + '_ {
        let key = (u.min(v), u.max(v));
        self.edges
            .iter()
            .enumerate()
            .filter(move |(_, &e)| e == key)
            .map(|(i, _)| i)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Copy without edge `e`. Later edge indices shift down by one.
    pub fn without_edge(&self, e: usize) -> Result<Graph> {
        if e >= self.edges.len() {
            return Err(Error::Argument(alloc::format!(
                "edge index {e} out of range (graph has {} edges)",
                self.edges.len()
            )));
        }
        let mut g = Graph::empty(self.n);
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if i != e {
                g.push_edge(u, v);
            }
        }
        Ok(g)
    }

    /// Copy with edge `(u, v)` appended.
    pub fn with_edge(&self, u: usize, v: usize) -> core::result::Result<Graph, GraphError> {
        Graph::new(self.n, self.edges.iter().copied().chain(core::iter::once((u, v))))
    }

    /// Deletes the vertices in `removed`; survivors keep their relative
    /// order. Returns the new graph and the old-to-new vertex map.
    pub fn without_vertices(&self, removed: VertexSet) -> (Graph, Vec<Option<usize>>) {
        let mut map = vec![None; self.n];
        let mut next = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if !removed.contains(v) {
                *slot = Some(next);
                next += 1;
            }
        }
        let mut g = Graph::empty(next);
        for &(u, v) in &self.edges {
            if let (Some(a), Some(b)) = (map[u], map[v]) {
                g.push_edge(a, b);
            }
        }
        (g, map)
    }

    /// Renames vertex `v` to `perm[v]`. Edge order is kept.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for &(u, v) in &self.edges {
            g.push_edge(perm[u], perm[v]);
        }
        g
    }

    /// Shrinks `x` to a single vertex, which gets the highest index.
    ///
    /// Edges inside `x` disappear, edges of the cut `∂(x)` survive with their
    /// multiplicity and edges outside `x` are untouched. Returns the
    /// contracted graph and the old-to-new vertex map.
    pub fn contract(&self, x: VertexSet) -> Result<(Graph, Vec<usize>)> {
        let x = VertexSet(x.0 & self.vertices().0);
        if x.is_empty() || x.len() == self.n {
            return Err(Error::Argument(alloc::format!(
                "contraction set {x} must be a nonempty proper subset of 0..{}",
                self.n
            )));
        }
        let new_n = self.n - x.len() + 1;
        let hub = new_n - 1;
        let mut map = vec![hub; self.n];
        let mut next = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if !x.contains(v) {
                *slot = next;
                next += 1;
            }
        }
        let mut g = Graph::empty(new_n);
        for &(u, v) in &self.edges {
            let (a, b) = (map[u], map[v]);
            if a != b {
                g.push_edge(a, b);
            }
        }
        Ok((g, map))
    }

    /// Same vertices, one edge per adjacent pair.
    pub fn underlying_simple(&self) -> Graph {
        Graph::from_adjacency(&self.adj)
    }

    /// Edges with exactly one end in `x`.
    pub fn boundary(&self, x: VertexSet) -> crate::bitset::EdgeSet {
        let mut s = crate::bitset::EdgeSet::new();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if x.contains(u) != x.contains(v) {
                s.insert(i);
            }
        }
        s
    }

    /// Vertices reachable from `start` without leaving `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & within.0 & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        VertexSet(seen)
    }

    /// Number of connected components of the subgraph induced by `within`.
    pub fn components_within(&self, within: VertexSet) -> usize {
        let mut left = within;
        let mut count = 0;
        while let Some(v) = left.first() {
            let c = self.reach(v, within);
            left = VertexSet(left.0 & !c.0);
            count += 1;
        }
        count
    }

    /// Components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let all = self.vertices();
        let mut left = all;
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.reach(v, all);
            left = VertexSet(left.0 & !c.0);
            out.push(c);
        }
        out
    }

    pub fn is_connected_within(&self, within: VertexSet) -> bool {
        match within.first() {
            None => true,
            Some(v) => self.reach(v, within) == within,
        }
    }

    /// The null graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// A proper 2-coloring as the set of color-1 vertices, if one exists.
    pub fn two_coloring(&self) -> Option<VertexSet> {
        let mut color = vec![u8::MAX; self.n];
        let mut stack = Vec::new();
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        stack.push(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some(VertexSet::from_vertices((0..self.n).filter(|&v| color[v] == 1)))
    }

    /// Edges whose removal disconnects their component. A pair joined by
    /// parallel edges never contributes a bridge.
    pub fn bridges(&self) -> Vec<usize> {
        let mut inc: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            inc[u].push((v, i));
            inc[v].push((u, i));
        }
        let mut disc = vec![usize::MAX; self.n];
        let mut low = vec![0; self.n];
        let mut time = 0;
        let mut out = Vec::new();
        for root in 0..self.n {
            if disc[root] == usize::MAX {
                bridge_dfs(root, usize::MAX, &inc, &mut disc, &mut low, &mut time, &mut out);
            }
        }
        out.sort_unstable();
        out
    }

    /// True iff `n ≥ 4` and no set of at most two vertices separates the
    /// simple view.
    pub fn is_three_connected(&self) -> bool {
        if self.n < 4 || !self.is_connected() {
            return false;
        }
        let all = self.vertices();
        for a in 0..self.n {
            let mut rest = all;
            rest.remove(a);
            if !self.is_connected_within(rest) {
                return false;
            }
            for b in a + 1..self.n {
                let mut rest2 = rest;
                rest2.remove(b);
                if !self.is_connected_within(rest2) {
                    return false;
                }
            }
        }
        true
    }

    /// A claw `(center, [leaves])` in the simple view, if any.
    pub fn find_claw(&self) -> Option<(usize, [usize; 3])> {
        for c in 0..self.n {
            let nb = self.adj[c];
            for a in VertexSet(nb) {
                let after_a = nb & !self.adj[a] & !((2u64 << a) - 1);
                for b in VertexSet(after_a) {
                    let after_b = after_a & !self.adj[b] & !((2u64 << b) - 1);
                    if let Some(d) = VertexSet(after_b).first() {
                        return Some((c, [a, b, d]));
                    }
                }
            }
        }
        None
    }

    /// No induced `K_{1,3}`.
    pub fn is_claw_free(&self) -> bool {
        self.find_claw().is_none()
    }

    /// Triangles `a < b < c` of the simple view.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for a in 0..self.n {
            let up_a = self.adj[a] & !((2u64 << a) - 1);
            for b in VertexSet(up_a) {
                let up_b = up_a & self.adj[b] & !((2u64 << b) - 1);
                for c in VertexSet(up_b) {
                    out.push([a, b, c]);
                }
            }
        }
        out
    }
}

fn bridge_dfs(
    v: usize,
    via: usize,
    inc: &[Vec<(usize, usize)>],
    disc: &mut [usize],
    low: &mut [usize],
    time: &mut usize,
    out: &mut Vec<usize>,
) {
    disc[v] = *time;
    low[v] = *time;
    *time += 1;
    for &(w, e) in &inc[v] {
        if e == via {
            continue;
        }
        if disc[w] == usize::MAX {
            bridge_dfs(w, e, inc, disc, low, time, out);
            low[v] = low[v].min(low[w]);
            if low[w] > disc[v] {
                out.push(e);
            }
        } else {
            low[v] = low[v].min(disc[w]);
        }
    }
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

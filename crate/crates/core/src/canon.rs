//! Canonical labeling for small graphs.
//!
//! Equitable partition refinement followed by a search over
//! individualizations. Leaves are compared by their relabeled adjacency
//! rows and the largest one wins. Automorphisms found at equal leaves prune
//! sibling branches that lie in an already explored orbit of the pointwise
//! stabilizer of the current path.
//!
//! Only the simple view is labeled; parallel edges are ignored.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;
use crate::graph6::{encode_adjacency, parse_graph6};

/// graph6 encoding of the canonically relabeled simple graph. Two graphs
/// have equal forms iff their underlying simple graphs are isomorphic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        parse_graph6(&self.0).expect("canonical forms are valid graph6")
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({:?})", self.0)
    }
}

/// Canonical labeling `labeling[v]` together with the resulting form.
pub fn canonize(g: &Graph) -> (Vec<usize>, CanonicalForm) {
    let n = g.n();
    if n == 0 {
        return (Vec::new(), CanonicalForm(encode_adjacency(&[])));
    }
    let mut s = Search {
        adj: g.adjacency(),
        n,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    let mut path = Vec::new();
    s.search(Partition::unit(n), &mut path);
    let best = s.best.expect("search visits at least one leaf");
    (best.labeling, CanonicalForm(encode_adjacency(&best.rows)))
}

/// `labeling[v]` is the canonical position of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    canonize(g).0
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonize(g).1
}

/// Isomorphism of the underlying simple graphs.
pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    if g1.n() != g2.n() {
        return false;
    }
    let mut d1: Vec<usize> = (0..g1.n()).map(|v| g1.degree(v)).collect();
    let mut d2: Vec<usize> = (0..g2.n()).map(|v| g2.degree(v)).collect();
    d1.sort_unstable();
    d2.sort_unstable();
    d1 == d2 && canonical_form(g1) == canonical_form(g2)
}

/// Ordered partition of the vertices. Cell `k` is
/// `order[starts[k]..starts[k + 1]]`.
#[derive(Clone)]
struct Partition {
    order: Vec<usize>,
    starts: Vec<usize>,
}

impl Partition {
    fn unit(n: usize) -> Partition {
        Partition {
            order: (0..n).collect(),
            starts: vec![0, n],
        }
    }

    fn cells(&self) -> usize {
        self.starts.len() - 1
    }

    fn cell(&self, k: usize) -> &[usize] {
        &self.order[self.starts[k]..self.starts[k + 1]]
    }

    fn is_discrete(&self) -> bool {
        self.cells() == self.order.len()
    }

    /// Splits every cell by neighbor counts into each splitter cell until
    /// the partition is equitable.
    fn refine(&mut self, adj: &[u64]) {
        let mut k = 0;
        while k < self.cells() {
            let splitter = self.cell(k).iter().fold(0u64, |m, &v| m | 1 << v);
            let key = |v: usize| (adj[v] & splitter).count_ones();
            let mut split = false;
            let mut c = 0;
            while c < self.cells() {
                let (s, e) = (self.starts[c], self.starts[c + 1]);
                if e - s > 1 {
                    self.order[s..e].sort_unstable_by_key(|&v| (key(v), v));
                    let cuts: Vec<usize> = (s + 1..e)
                        .filter(|&i| key(self.order[i]) != key(self.order[i - 1]))
                        .collect();
                    if !cuts.is_empty() {
                        let added = cuts.len();
                        self.starts.splice(c + 1..c + 1, cuts);
                        c += added;
                        split = true;
                    }
                }
                c += 1;
            }
            k = if split { 0 } else { k + 1 };
        }
    }

    /// Moves `v` into its own cell in front of the rest of cell `k`.
    fn individualize(&self, k: usize, v: usize) -> Partition {
        let mut p = self.clone();
        let (s, e) = (p.starts[k], p.starts[k + 1]);
        let i = (s..e).find(|&i| p.order[i] == v).expect("vertex in cell");
        p.order.swap(s, i);
        p.order[s + 1..e].sort_unstable();
        p.starts.insert(k + 1, s + 1);
        p
    }
}

#[derive(Clone)]
struct Leaf {
    rows: Vec<u64>,
    labeling: Vec<usize>,
    inverse: Vec<usize>,
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn search(&mut self, mut p: Partition, path: &mut Vec<usize>) {
        p.refine(self.adj);
        if p.is_discrete() {
            self.leaf(&p);
            return;
        }
        let k = (0..p.cells())
            .find(|&k| p.cell(k).len() > 1)
            .expect("non-discrete partition has a nontrivial cell");
        let mut candidates = p.cell(k).to_vec();
        candidates.sort_unstable();
        let mut tried: Vec<usize> = Vec::new();
        for v in candidates {
            if !tried.is_empty() {
                let orbit = self.stabilizer_orbits(path);
                if tried.iter().any(|&t| orbit[t] == orbit[v]) {
                    continue;
                }
            }
            tried.push(v);
            let child = p.individualize(k, v);
            path.push(v);
            self.search(child, path);
            path.pop();
        }
    }

    fn leaf(&mut self, p: &Partition) {
        let n = self.n;
        let mut labeling = vec![0; n];
        for (pos, &v) in p.order.iter().enumerate() {
            labeling[v] = pos;
        }
        let rows: Vec<u64> = p
            .order
            .iter()
            .map(|&v| {
                let mut row = 0u64;
                let mut nb = self.adj[v];
                while nb != 0 {
                    let w = nb.trailing_zeros() as usize;
                    nb &= nb - 1;
                    row |= 1 << labeling[w];
                }
                row
            })
            .collect();
        let leaf = Leaf {
            rows,
            labeling,
            inverse: p.order.clone(),
        };
        let Some(first) = &self.first else {
            self.first = Some(leaf.clone());
            self.best = Some(leaf);
            return;
        };
        if leaf.rows == first.rows {
            let gamma = compose_auto(first, &leaf);
            self.record(gamma);
            return;
        }
        let best = self.best.as_ref().expect("best set with first");
        if leaf.rows == best.rows {
            let gamma = compose_auto(best, &leaf);
            self.record(gamma);
        } else if leaf.rows > best.rows {
            self.best = Some(leaf);
        }
    }

    fn record(&mut self, gamma: Vec<usize>) {
        if gamma.iter().enumerate().any(|(i, &g)| i != g) {
            self.autos.push(gamma);
        }
    }

    /// Orbit representatives of the group generated by the known
    /// automorphisms that fix every vertex on `path`.
    fn stabilizer_orbits(&self, path: &[usize]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for gamma in &self.autos {
            if path.iter().any(|&v| gamma[v] != v) {
                continue;
            }
            for (v, &w) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, w));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..self.n).map(|v| find(&mut parent, v)).collect()
    }
}

/// Two labelings giving the same relabeled graph differ by the
/// automorphism `v -> reference⁻¹(other(v))`.
fn compose_auto(reference: &Leaf, other: &Leaf) -> Vec<usize> {
    other.labeling.iter().map(|&l| reference.inverse[l]).collect()
}

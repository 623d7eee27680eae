//! Tight cuts and the tight cut decomposition.
//!
//! A cut `∂(X)` is tight when every perfect matching uses exactly one of
//! its edges. Tightness is tested against the complete list of perfect
//! matchings, and nontrivial tight cuts are found by scanning odd shores
//! exhaustively, so this module is limited to
//! [`MAX_TIGHT_CUT_VERTICES`](crate::MAX_TIGHT_CUT_VERTICES) vertices.
//!
//! Decomposing along a tight cut replaces the graph by its two cut
//! contractions, which are again matching covered. When no nontrivial tight
//! cut remains, a piece is a brick if it is nonbipartite and a brace
//! otherwise. The resulting multiset of pieces, up to multiple edges, does
//! not depend on which cuts are chosen; [`decompose_with`] exposes the
//! choice so that this can be checked.

use alloc::format;
use alloc::vec::Vec;

use crate::bitset::{EdgeSet, VertexSet};
use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::Graph;
use crate::matching::{enumerate_perfect_matchings, is_matching_covered, MatchingSet};
use crate::{Error, Result, MAX_TIGHT_CUT_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cut {
    /// The shore `X`.
    pub shore: VertexSet,
    /// `∂(X)` as edge indices of the host graph.
    pub boundary: EdgeSet,
    /// `|X| = 1` or `|X̄| = 1`.
    pub trivial: bool,
}

impl Cut {
    pub fn new(g: &Graph, shore: VertexSet) -> Result<Cut> {
        let n = g.n();
        if shore.is_empty() || shore.0 & !g.vertices().0 != 0 || shore.len() == n {
            return Err(Error::Argument(format!(
                "cut shore {shore} must be a nonempty proper subset of 0..{n}"
            )));
        }
        Ok(Cut {
            shore,
            boundary: g.boundary(shore),
            trivial: shore.len() == 1 || shore.len() == n - 1,
        })
    }

    /// The same cut seen from the other shore.
    pub fn complement(&self, n: usize) -> Cut {
        Cut {
            shore: self.shore.complement(n),
            boundary: self.boundary,
            trivial: self.trivial,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Piece {
    /// The piece with its parallel edges.
    pub graph: Graph,
    /// Certificate of the underlying simple graph.
    pub certificate: CanonicalForm,
    pub nonbipartite: bool,
}

impl Piece {
    fn new(graph: Graph) -> Piece {
        Piece {
            certificate: canonical_form(&graph),
            nonbipartite: !graph.is_bipartite(),
            graph,
        }
    }

    pub fn is_brick(&self) -> bool {
        self.nonbipartite
    }
}

/// One cut chosen during decomposition, on the graph it was chosen in.
#[derive(Debug, Clone)]
pub struct TraceStep {
    pub depth: usize,
    pub host: Graph,
    pub cut: Cut,
}

#[derive(Debug, Clone)]
pub struct DecompositionResult {
    pub pieces: Vec<Piece>,
    /// Number of bricks.
    pub b: usize,
    /// Number of braces.
    pub braces: usize,
    pub trace: Vec<TraceStep>,
}

impl DecompositionResult {
    /// Sorted `(certificate, is brick)` pairs, for order-independent
    /// comparison of two decompositions.
    pub fn signature(&self) -> Vec<(CanonicalForm, bool)> {
        let mut sig: Vec<_> = self
            .pieces
            .iter()
            .map(|p| (p.certificate.clone(), p.nonbipartite))
            .collect();
        sig.sort();
        sig
    }
}

/// Whether every matching in `pms` meets `∂(x)` exactly once.
pub fn is_tight(g: &Graph, x: VertexSet, pms: &MatchingSet<'_>) -> Result<bool> {
    if !pms.complete {
        return Err(Error::Precondition(
            "tightness needs the complete set of perfect matchings".into(),
        ));
    }
    let cut = Cut::new(g, x)?;
    Ok(cut_is_tight(&cut.boundary, pms))
}

fn cut_is_tight(boundary: &EdgeSet, pms: &MatchingSet<'_>) -> bool {
    pms.iter().all(|m| m.edge_set().intersection_len(boundary) == 1)
}

fn check_tight_cut_input(g: &Graph) -> Result<()> {
    if g.n() > MAX_TIGHT_CUT_VERTICES {
        return Err(Error::Capacity(format!(
            "{} vertices exceeds the exhaustive tight cut bound of {MAX_TIGHT_CUT_VERTICES}",
            g.n()
        )));
    }
    if !is_matching_covered(g)? {
        return Err(Error::Precondition("graph is not matching covered".into()));
    }
    Ok(())
}

/// Odd shores with `3 ≤ |X| ≤ |X̄|`, by size and then numeric value.
fn candidate_shores(n: usize) -> impl Iterator<Item = VertexSet> {
    (3..=n / 2).step_by(2).flat_map(move |k| {
        let limit = 1u64.checked_shl(n as u32).unwrap_or(0).wrapping_sub(1);
        let mut next = Some((1u64 << k) - 1);
        core::iter::from_fn(move || {
            let cur = next?;
            // Gosper's hack: next larger integer with the same popcount
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            let succ = (((r ^ cur) >> 2) / c) | r;
            next = (r != 0 && succ & !limit == 0).then_some(succ);
            Some(VertexSet(cur))
        })
    })
}

/// Every nontrivial tight cut with `|X| ≤ |X̄|`, in scan order. When
/// `|X| = |X̄|` both shores of the same cut appear.
pub fn nontrivial_tight_cuts(g: &Graph, pms: &MatchingSet<'_>) -> Result<Vec<Cut>> {
    if !pms.complete {
        return Err(Error::Precondition(
            "tightness needs the complete set of perfect matchings".into(),
        ));
    }
    Ok(candidate_shores(g.n())
        .map(|x| Cut {
            shore: x,
            boundary: g.boundary(x),
            trivial: false,
        })
        .filter(|c| cut_is_tight(&c.boundary, pms))
        .collect())
}

/// The first nontrivial tight cut in scan order, if any.
pub fn find_nontrivial_tight_cut(g: &Graph) -> Result<Option<Cut>> {
    check_tight_cut_input(g)?;
    let pms = enumerate_perfect_matchings(g, None)?;
    Ok(first_tight(g, &pms))
}

fn first_tight(g: &Graph, pms: &MatchingSet<'_>) -> Option<Cut> {
    candidate_shores(g.n()).find_map(|x| {
        let boundary = g.boundary(x);
        cut_is_tight(&boundary, pms).then_some(Cut {
            shore: x,
            boundary,
            trivial: false,
        })
    })
}

/// Tight cut decomposition, always taking the first cut in scan order.
pub fn decompose(g: &Graph) -> Result<DecompositionResult> {
    check_tight_cut_input(g)?;
    let mut out = Builder::default();
    out.run(g.clone(), 0, &mut |h, pms| Ok(first_tight(h, pms)))?;
    Ok(out.finish())
}

/// Tight cut decomposition where `select` picks which of the available
/// nontrivial tight cuts to split along at every step.
pub fn decompose_with<F>(g: &Graph, mut select: F) -> Result<DecompositionResult>
where
    F: FnMut(&Graph, &[Cut]) -> usize,
{
    check_tight_cut_input(g)?;
    let mut out = Builder::default();
    out.run(g.clone(), 0, &mut |h, pms| {
        let cuts = nontrivial_tight_cuts(h, pms)?;
        if cuts.is_empty() {
            return Ok(None);
        }
        let i = select(h, &cuts);
        Ok(Some(cuts.into_iter().nth(i).ok_or_else(|| {
            Error::Argument(format!("cut selector returned index {i} out of range"))
        })?))
    })?;
    Ok(out.finish())
}

/// Number of bricks in the tight cut decomposition.
pub fn b_count(g: &Graph) -> Result<usize> {
    Ok(decompose(g)?.b)
}

type Chooser<'a> = dyn FnMut(&Graph, &MatchingSet<'_>) -> Result<Option<Cut>> + 'a;

#[derive(Default)]
struct Builder {
    pieces: Vec<Piece>,
    trace: Vec<TraceStep>,
}

impl Builder {
    fn run(&mut self, g: Graph, depth: usize, choose: &mut Chooser<'_>) -> Result<()> {
        let pms = enumerate_perfect_matchings(&g, None)?;
        let Some(cut) = choose(&g, &pms)? else {
            self.pieces.push(Piece::new(g));
            return Ok(());
        };
        let (inner, _) = g.contract(cut.shore.complement(g.n()))?;
        let (outer, _) = g.contract(cut.shore)?;
        self.trace.push(TraceStep {
            depth,
            host: g,
            cut,
        });
        self.run(inner, depth + 1, choose)?;
        self.run(outer, depth + 1, choose)
    }

    fn finish(self) -> DecompositionResult {
        let b = self.pieces.iter().filter(|p| p.nonbipartite).count();
        DecompositionResult {
            braces: self.pieces.len() - b,
            b,
            pieces: self.pieces,
            trace: self.trace,
        }
    }
}

//! Slow reference computations that share no code with the core algorithms.
//! They work from the edge list alone.

use std::collections::HashMap;

/// Number of perfect matchings, by memoized recursion over vertex subsets.
/// Parallel edges each count separately.
pub fn dp_count_perfect_matchings(n: usize, edges: &[(usize, usize)]) -> u64 {
    assert!(n <= 24, "oracle limited to 24 vertices");
    let mut mult = vec![vec![0u64; n]; n];
    for &(u, v) in edges {
        mult[u][v] += 1;
        mult[v][u] += 1;
    }
    let mut memo = HashMap::new();
    count_within(&mult, (1u32 << n) - 1, &mut memo)
}

/// Matchings covering exactly the vertex set `mask`.
fn count_within(mult: &[Vec<u64>], mask: u32, memo: &mut HashMap<u32, u64>) -> u64 {
    if mask == 0 {
        return 1;
    }
    if mask.count_ones() % 2 == 1 {
        return 0;
    }
    if let Some(&c) = memo.get(&mask) {
        return c;
    }
    let v = mask.trailing_zeros() as usize;
    let rest = mask & !(1 << v);
    let mut total = 0;
    for u in 0..mult.len() {
        if rest >> u & 1 == 1 && mult[v][u] > 0 {
            total += mult[v][u] * count_within(mult, rest & !(1 << u), memo);
        }
    }
    memo.insert(mask, total);
    total
}

/// Perfect matchings of the graph with vertices `a` and `b` deleted.
pub fn dp_count_without(n: usize, edges: &[(usize, usize)], a: usize, b: usize) -> u64 {
    let mut mult = vec![vec![0u64; n]; n];
    for &(u, v) in edges {
        mult[u][v] += 1;
        mult[v][u] += 1;
    }
    let full = (1u32 << n) - 1;
    count_within(&mult, full & !(1 << a) & !(1 << b), &mut HashMap::new())
}

/// Breadth-first connectivity, ignoring the edge at index `skip`.
pub fn connected_without(n: usize, edges: &[(usize, usize)], skip: Option<usize>) -> bool {
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut queue = vec![0];
    seen[0] = true;
    while let Some(x) = queue.pop() {
        for (i, &(u, v)) in edges.iter().enumerate() {
            if Some(i) == skip {
                continue;
            }
            let other = if u == x {
                v
            } else if v == x {
                u
            } else {
                continue;
            };
            if !seen[other] {
                seen[other] = true;
                queue.push(other);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Matching covered straight from the definition: connected, at least one
/// edge, and each edge `uv` leaves a perfectly matchable `G - u - v`.
pub fn is_matching_covered(n: usize, edges: &[(usize, usize)]) -> bool {
    !edges.is_empty()
        && connected_without(n, edges, None)
        && edges.iter().all(|&(u, v)| dp_count_without(n, edges, u, v) > 0)
}

/// Whether deleting the edge at index `e` leaves a matching covered graph.
pub fn is_removable(n: usize, edges: &[(usize, usize)], e: usize) -> bool {
    let rest: Vec<_> = edges
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != e)
        .map(|(_, &p)| p)
        .collect();
    is_matching_covered(n, &rest)
}

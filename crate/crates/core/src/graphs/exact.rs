//! Exact cutwidth and pathwidth by dynamic programming over vertex subsets.
//!
//! Both widths are the best peak of a per-prefix cost over vertex orders:
//! the prefix cut for cutwidth, the prefix boundary `∂(S)` (vertices of `S`
//! with a neighbour outside `S`) for pathwidth. Each connected component is
//! solved on its own and the results are concatenated.

use super::{LinearArrangement, MultiGraph, PathDecomposition};
use crate::error::{check_cap, Result};

/// Largest connected component `cutwidth_exact` accepts by default.
pub const CUTWIDTH_VERTEX_CAP: usize = 24;
/// Largest connected component `pathwidth_exact` accepts by default.
pub const PATHWIDTH_VERTEX_CAP: usize = 22;

/// Smallest peak of `cost` over all orders of `0..n`, with the
/// lexicographically smallest order reaching it. `cost[S]` is the cost of the
/// prefix whose vertex set is the bitmask `S`.
fn min_peak_order(n: usize, cost: &[u32]) -> (u32, Vec<usize>) {
    let full = (1usize << n) - 1;
    let mut c = vec![0u32; full + 1];
    for set in (0..full).rev() {
        let mut best = u32::MAX;
        let mut free = !set & full;
        while free != 0 {
            let next = set | (free & free.wrapping_neg());
            free &= free - 1;
            best = best.min(cost[next].max(c[next]));
        }
        c[set] = best;
    }
    let opt = c[0];
    let mut order = Vec::with_capacity(n);
    let mut set = 0usize;
    while set != full {
        let v = (0..n)
            .find(|&v| set >> v & 1 == 0 && cost[set | 1 << v].max(c[set | 1 << v]) <= opt)
            .expect("an optimal completion always exists");
        order.push(v);
        set |= 1 << v;
    }
    (opt, order)
}

fn cut_table(g: &MultiGraph) -> Vec<u32> {
    let adj = g.adjacency();
    let size = 1usize << g.n();
    let mut cut = vec![0u32; size];
    for set in 1..size {
        let x = set.trailing_zeros() as usize;
        let prev = set & (set - 1);
        let inner = adj[x].iter().filter(|&&u| prev >> u & 1 == 1).count() as u32;
        cut[set] = cut[prev] + adj[x].len() as u32 - 2 * inner;
    }
    cut
}

fn boundary_table(g: &MultiGraph) -> Vec<u32> {
    let n = g.n();
    let mut nb = vec![0usize; n];
    for &(u, v) in g.edges() {
        nb[u] |= 1 << v;
        nb[v] |= 1 << u;
    }
    let size = 1usize << n;
    (0..size)
        .map(|set| {
            (0..n)
                .filter(|&v| set >> v & 1 == 1 && nb[v] & !set != 0)
                .count() as u32
        })
        .collect()
}

/// Exact cutwidth with an optimal arrangement (lexicographically smallest
/// within each component; components in order of their smallest vertex).
pub fn cutwidth_exact(g: &MultiGraph) -> Result<(usize, LinearArrangement)> {
    cutwidth_exact_capped(g, CUTWIDTH_VERTEX_CAP)
}

pub fn cutwidth_exact_capped(g: &MultiGraph, cap: usize) -> Result<(usize, LinearArrangement)> {
    let comps = g.components();
    let largest = comps.iter().map(Vec::len).max().unwrap_or(0);
    check_cap("component size", largest, cap.min(30))?;
    let mut width = 0;
    let mut order = Vec::with_capacity(g.n());
    for comp in comps {
        let sub = g.induced(&comp);
        let (w, local) = min_peak_order(sub.n(), &cut_table(&sub));
        width = width.max(w as usize);
        order.extend(local.into_iter().map(|i| comp[i]));
    }
    Ok((width, LinearArrangement(order)))
}

/// Exact pathwidth with an optimal decomposition. Parallel edges are ignored.
///
/// The width is computed as the vertex separation number; the order is turned
/// into bags `∂(v_1..v_{i-1}) ∪ {v_i}`.
pub fn pathwidth_exact(g: &MultiGraph) -> Result<(usize, PathDecomposition)> {
    pathwidth_exact_capped(g, PATHWIDTH_VERTEX_CAP)
}

pub fn pathwidth_exact_capped(g: &MultiGraph, cap: usize) -> Result<(usize, PathDecomposition)> {
    let g = g.simplified();
    let comps = g.components();
    let largest = comps.iter().map(Vec::len).max().unwrap_or(0);
    check_cap("component size", largest, cap.min(30))?;
    let mut width = 0;
    let mut bags = Vec::with_capacity(g.n());
    for comp in comps {
        let sub = g.induced(&comp);
        let boundary = boundary_table(&sub);
        let (w, local) = min_peak_order(sub.n(), &boundary);
        width = width.max(w as usize);
        let adj = sub.adjacency();
        let mut prefix = 0usize;
        for &v in &local {
            let mut bag: Vec<usize> = (0..sub.n())
                .filter(|&u| prefix >> u & 1 == 1 && adj[u].iter().any(|&x| prefix >> x & 1 == 0))
                .collect();
            bag.push(v);
            bags.push(bag.into_iter().map(|i| comp[i]).collect());
            prefix |= 1 << v;
        }
    }
    Ok((width, PathDecomposition::new(bags)))
}

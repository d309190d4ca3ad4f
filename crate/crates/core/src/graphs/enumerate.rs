//! Exhaustive lists of small graphs up to isomorphism.

use itertools::Itertools;

use super::MultiGraph;

/// All pairs `(u, v)`, `u < v`, of `0..n` in lexicographic order.
fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).tuple_combinations().collect()
}

/// One representative per isomorphism class of simple graphs on `n` vertices
/// (`n ≤ 6`). The representative is the graph whose edge mask, over the
/// lexicographic pair order, is smallest among all relabellings.
pub fn non_isomorphic_graphs(n: usize) -> Vec<MultiGraph> {
    assert!(n <= 6, "enumeration is only meant for n <= 6");
    let all = pairs(n);
    let mut index = vec![vec![0usize; n]; n];
    for (i, &(u, v)) in all.iter().enumerate() {
        index[u][v] = i;
        index[v][u] = i;
    }
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let relabel = |mask: u32, p: &[usize]| -> u32 {
        all.iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .fold(0u32, |acc, (_, &(u, v))| acc | 1 << index[p[u]][p[v]])
    };
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << all.len()) {
        if perms.iter().all(|p| relabel(mask, p) >= mask) {
            let edges = all
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            out.push(MultiGraph::new_simple(n, edges).expect("pairs are distinct"));
        }
    }
    out
}

/// The connected members of [`non_isomorphic_graphs`].
pub fn connected_graphs(n: usize) -> Vec<MultiGraph> {
    non_isomorphic_graphs(n)
        .into_iter()
        .filter(MultiGraph::is_connected)
        .collect()
}

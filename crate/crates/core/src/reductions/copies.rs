//! The edge-copy graph `G′` and translations between arrangements of a graph
//! and path decompositions of its `G′`.
//!
//! Every edge instance `i = {u, v}` gets two copies, `u_v` (vertex `2i`,
//! owned by the smaller endpoint) and `v_u` (vertex `2i + 1`). Copies of one
//! edge are joined, and the copies owned by one vertex form a clique.

use super::{LabeledReduction, PathwidthSolver, VertexLabel};
use crate::error::{Error, Result};
use crate::graphs::{
    check_path_decomposition, cutwidth_of_arrangement, prefix_cuts,
    second_order_cutwidth_of_arrangement, LinearArrangement, MultiGraph, PathDecomposition,
};

/// Copy vertex of `owner` for edge instance `edge`.
fn copy_of(g: &MultiGraph, edge: usize, owner: usize) -> usize {
    if g.edges()[edge].0 == owner {
        2 * edge
    } else {
        2 * edge + 1
    }
}

/// Copies owned by each vertex of `g`.
fn owned_copies(g: &MultiGraph) -> Vec<Vec<usize>> {
    let mut owned = vec![Vec::new(); g.n()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        owned[u].push(2 * i);
        owned[v].push(2 * i + 1);
    }
    owned
}

/// `G′` of a graph with at least one edge. Parallel edges get their own copies.
pub fn build_g_prime(g: &MultiGraph) -> Result<LabeledReduction> {
    if g.edge_count() == 0 {
        return Err(Error::Precondition("the graph has no edges".into()));
    }
    let mut edges: Vec<(usize, usize)> = (0..g.edge_count()).map(|i| (2 * i, 2 * i + 1)).collect();
    for copies in owned_copies(g) {
        for (a, &c) in copies.iter().enumerate() {
            edges.extend(copies[a + 1..].iter().map(|&d| (c, d)));
        }
    }
    let graph = MultiGraph::new_simple(2 * g.edge_count(), edges)?;
    let labels = g
        .edges()
        .iter()
        .enumerate()
        .flat_map(|(i, &(u, v))| {
            [
                VertexLabel::Copy {
                    owner: u,
                    other: v,
                    edge: i,
                },
                VertexLabel::Copy {
                    owner: v,
                    other: u,
                    edge: i,
                },
            ]
        })
        .collect();
    Ok(LabeledReduction::new(graph, labels, None))
}

/// Decomposition of `G′` of width at most `socw(L)` from an arrangement of `g`.
///
/// Vertex `v` at position `i` contributes the bag `(i, 0)` (all copies owned
/// by `v`) and one bag `(i, r)` per edge instance to a later vertex, ranked by
/// the position of the other endpoint. Bag `(i, r)` keeps `v`'s copies of
/// rank `≥ r` and the far copies of rank `≤ r`. Every bag also holds the far
/// copy of each edge passing strictly over `i`.
pub fn arrangement_to_pd_gprime(
    g: &MultiGraph,
    l: &LinearArrangement,
) -> Result<PathDecomposition> {
    l.validate(g.n())?;
    let pos = l.positions();
    let n = g.n();
    // right[v]: (far position, edge) for edges to later vertices, in rank order.
    let mut right: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        let (near, far) = if pos[a] < pos[b] { (a, b) } else { (b, a) };
        right[near].push((pos[far], e));
    }
    for list in &mut right {
        list.sort_unstable();
    }
    let owned = owned_copies(g);
    let mut bags = Vec::new();
    for (i, &v) in l.order().iter().enumerate() {
        let crossing: Vec<usize> = g
            .edges()
            .iter()
            .enumerate()
            .filter_map(|(e, &(a, b))| {
                let (near, far) = if pos[a] < pos[b] { (a, b) } else { (b, a) };
                (pos[near] < i && i < pos[far]).then(|| copy_of(g, e, far))
            })
            .collect();
        let mut base = owned[v].clone();
        base.extend(&crossing);
        bags.push(base);
        for r in 0..right[v].len() {
            let mut bag = crossing.clone();
            bag.extend(right[v][r..].iter().map(|&(_, e)| copy_of(g, e, v)));
            bag.extend(
                right[v][..=r]
                    .iter()
                    .map(|&(p, e)| copy_of(g, e, l.order()[p])),
            );
            bags.push(bag);
        }
    }
    let q = PathDecomposition::new(bags);
    let gp = build_g_prime(g)?.graph;
    check_path_decomposition(&gp, &q)
        .map_err(|v| Error::ContractViolation(format!("bag family is not a decomposition: {v}")))?;
    let socw = second_order_cutwidth_of_arrangement(g, l)?;
    if q.width() > socw {
        return Err(Error::ContractViolation(format!(
            "decomposition width {} exceeds socw(L) = {socw}",
            q.width()
        )));
    }
    Ok(q)
}

/// `(max cut, how many cuts reach it)`; smaller is better.
fn score(g: &MultiGraph, order: &[usize]) -> (usize, usize) {
    let cuts = prefix_cuts(g, &LinearArrangement(order.to_vec())).expect("valid permutation");
    let max = cuts.iter().copied().max().unwrap_or(0);
    (max, cuts.iter().filter(|&&c| c == max).count())
}

fn moved(order: &[usize], from: usize, to: usize) -> Vec<usize> {
    let mut out = order.to_vec();
    let v = out.remove(from);
    out.insert(to, v);
    out
}

/// Lowers the cutwidth of `order` until it is at most `bound`.
///
/// Each round looks at the maximum cuts: a vertex `v_t` ending one is moved
/// just right of its leftmost neighbour, or just left of it. If neither move
/// improves `(max cut, count)`, any single-vertex move that does is taken.
fn repair(g: &MultiGraph, mut order: Vec<usize>, bound: usize) -> Option<Vec<usize>> {
    let adj = g.adjacency();
    loop {
        let current = score(g, &order);
        if current.0 <= bound {
            return Some(order);
        }
        let cuts = prefix_cuts(g, &LinearArrangement(order.clone())).ok()?;
        let mut next: Option<Vec<usize>> = None;
        'targeted: for t in 1..order.len() {
            if cuts[t] != current.0 {
                continue;
            }
            let v = order[t - 1];
            let pos = LinearArrangement(order.clone()).positions();
            let Some(&leftmost) = adj[v].iter().min_by_key(|&&u| pos[u]) else {
                continue;
            };
            let p = pos[leftmost];
            let from = t - 1;
            let candidates = if p > from {
                [moved(&order, from, p), moved(&order, from, p - 1)]
            } else {
                [moved(&order, from, p + 1), moved(&order, from, p)]
            };
            for cand in candidates {
                if score(g, &cand) < current {
                    next = Some(cand);
                    break 'targeted;
                }
            }
        }
        if next.is_none() {
            'any: for from in 0..order.len() {
                for to in 0..order.len() {
                    if to != from {
                        let cand = moved(&order, from, to);
                        if score(g, &cand) < current {
                            next = Some(cand);
                            break 'any;
                        }
                    }
                }
            }
        }
        order = next?;
    }
}

/// Arrangement of `g` with cutwidth at most `width(q)` from a decomposition of `G′`.
///
/// Vertices are ordered by `φ(v)`, the first bag holding all copies of `v`
/// (isolated vertices use 0), ties by id; the result is then repaired if needed.
pub fn pd_gprime_to_arrangement(
    g: &MultiGraph,
    q: &PathDecomposition,
) -> Result<LinearArrangement> {
    let gp = build_g_prime(g)?.graph;
    check_path_decomposition(&gp, q).map_err(|v| Error::InvalidCertificate(v.to_string()))?;
    let width = q.width();
    let owned = owned_copies(g);
    let phi: Vec<usize> = owned
        .iter()
        .map(|copies| {
            q.bags
                .iter()
                .position(|bag| copies.iter().all(|c| bag.binary_search(c).is_ok()))
                .unwrap_or(0)
        })
        .collect();
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (phi[v], v));
    let fixed = repair(g, order, width).ok_or_else(|| {
        Error::ContractViolation(format!("no arrangement within width {width} was reached"))
    })?;
    let l = LinearArrangement(fixed);
    debug_assert!(cutwidth_of_arrangement(g, &l)? <= width);
    Ok(l)
}

/// Cutwidth through pathwidth: build `G′`, ask the backend for a
/// decomposition, validate it and translate it. With an exact backend the
/// result lies between `cw(g)` and `2 cw(g)`.
pub fn cutwidth_via_pathwidth<P: PathwidthSolver + ?Sized>(
    g: &MultiGraph,
    backend: &P,
) -> Result<(usize, LinearArrangement)> {
    if g.edge_count() == 0 {
        return Ok((0, LinearArrangement((0..g.n()).collect())));
    }
    let gp = build_g_prime(g)?.graph;
    let (_, q) = backend.solve(&gp)?;
    let l = pd_gprime_to_arrangement(g, &q)?;
    Ok((cutwidth_of_arrangement(g, &l)?, l))
}

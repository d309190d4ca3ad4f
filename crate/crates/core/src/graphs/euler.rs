//! Eulerian cycles in multigraphs (Hierholzer).

use super::MultiGraph;
use crate::error::{Error, Result};

/// One directed traversal of an edge instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Traversal {
    pub from: usize,
    pub to: usize,
    /// Index into `MultiGraph::edges`.
    pub edge: usize,
}

/// A closed walk using every edge instance once.
///
/// The walk starts at the smallest vertex with an incident edge and always
/// continues along the lowest unused neighbour, so the output is deterministic.
pub fn eulerian_cycle(g: &MultiGraph) -> Result<Vec<Traversal>> {
    let degrees = g.degrees();
    if let Some(v) = degrees.iter().position(|d| d % 2 == 1) {
        return Err(Error::Precondition(format!("vertex {v} has odd degree")));
    }
    let Some(start) = degrees.iter().position(|&d| d > 0) else {
        return Ok(Vec::new());
    };
    let with_edges = g
        .components()
        .into_iter()
        .filter(|c| c.iter().any(|&v| degrees[v] > 0))
        .count();
    if with_edges > 1 {
        return Err(Error::Precondition("edges are not connected".into()));
    }

    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); g.n()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        adj[u].push((v, i));
        adj[v].push((u, i));
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let mut next = vec![0usize; g.n()];
    let mut used = vec![false; g.edge_count()];
    let mut stack: Vec<(usize, Option<Traversal>)> = vec![(start, None)];
    let mut circuit = Vec::with_capacity(g.edge_count());
    while let Some(&(v, arrived)) = stack.last() {
        while next[v] < adj[v].len() && used[adj[v][next[v]].1] {
            next[v] += 1;
        }
        if let Some(&(u, e)) = adj[v].get(next[v]) {
            used[e] = true;
            stack.push((
                u,
                Some(Traversal {
                    from: v,
                    to: u,
                    edge: e,
                }),
            ));
        } else {
            stack.pop();
            circuit.extend(arrived);
        }
    }
    circuit.reverse();
    Ok(circuit)
}

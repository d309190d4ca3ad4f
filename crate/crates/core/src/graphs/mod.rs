//! Multigraphs, linear arrangements and path decompositions, with exact
//! cutwidth and pathwidth solvers for small instances.

mod decomposition;
pub mod enumerate;
mod euler;
mod exact;
pub mod io;

pub use decomposition::{
    check_path_decomposition, is_valid_path_decomposition, make_nice, Violation,
};
pub use enumerate::{connected_graphs, non_isomorphic_graphs};
pub use euler::{eulerian_cycle, Traversal};
pub use exact::{
    cutwidth_exact, cutwidth_exact_capped, pathwidth_exact, pathwidth_exact_capped,
    CUTWIDTH_VERTEX_CAP, PATHWIDTH_VERTEX_CAP,
};

use crate::error::{Error, Result};

/// An undirected multigraph on vertices `0..n` without loops.
///
/// Edges are stored as `(u, v)` with `u < v`; parallel edges are repeated
/// entries. When `simple` is set, parallel edges are rejected.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    simple: bool,
    labels: Option<Vec<String>>,
}

impl MultiGraph {
    /// A multigraph; parallel edges are allowed, loops are not.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<MultiGraph> {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Precondition(format!(
                    "edge ({u}, {v}) leaves the vertex range 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::Precondition(format!("loop at vertex {u}")));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        Ok(MultiGraph {
            n,
            edges: normalized,
            simple: false,
            labels: None,
        })
    }

    /// A graph that must not contain parallel edges.
    pub fn new_simple(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<MultiGraph> {
        let mut g = MultiGraph::new(n, edges)?;
        let mut sorted = g.edges.clone();
        sorted.sort_unstable();
        if let Some(p) = sorted.windows(2).find(|p| p[0] == p[1]) {
            return Err(Error::Precondition(format!(
                "parallel edge ({}, {}) in a simple graph",
                p[0].0, p[0].1
            )));
        }
        g.simple = true;
        Ok(g)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<MultiGraph> {
        if labels.len() != self.n {
            return Err(Error::Precondition(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_simple(&self) -> bool {
        self.simple
    }

    /// True when no edge is repeated, whether or not the flag is set.
    pub fn has_parallel_edges(&self) -> bool {
        let mut sorted = self.edges.clone();
        sorted.sort_unstable();
        sorted.windows(2).any(|p| p[0] == p[1])
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The label of `v`, or its id when unlabelled.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn vertex_by_label(&self, name: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == name)
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    /// Neighbour lists with multiplicity, each sorted.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// The underlying simple graph: parallel edges collapsed, labels kept.
    pub fn simplified(&self) -> MultiGraph {
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        edges.dedup();
        MultiGraph {
            n: self.n,
            edges,
            simple: true,
            labels: self.labels.clone(),
        }
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                for &u in &adj[members[i]] {
                    if comp[u] == usize::MAX {
                        comp[u] = id;
                        members.push(u);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// The subgraph induced by `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> MultiGraph {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(u, v)| local[u] != usize::MAX && local[v] != usize::MAX)
            .map(|&(u, v)| (local[u], local[v]))
            .collect();
        MultiGraph::new(vertices.len(), edges)
            .map(|mut g| {
                g.simple = self.simple;
                g
            })
            .expect("induced subgraph of a valid graph")
    }
}

/// Doubles the multiplicity of every edge, making every degree even.
pub fn duplicate_edges(g: &MultiGraph) -> MultiGraph {
    let edges = g.edges.iter().flat_map(|&e| [e, e]).collect();
    MultiGraph {
        n: g.n,
        edges,
        simple: false,
        labels: g.labels.clone(),
    }
}

/// A linear order of the vertices of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LinearArrangement(pub Vec<usize>);

impl LinearArrangement {
    pub fn order(&self) -> &[usize] {
        &self.0
    }

    /// Checks that the order is a permutation of `0..n`.
    pub fn validate(&self, n: usize) -> Result<()> {
        if self.0.len() != n {
            return Err(Error::InvalidCertificate(format!(
                "arrangement has {} vertices, graph has {n}",
                self.0.len()
            )));
        }
        let mut seen = vec![false; n];
        for &v in &self.0 {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidCertificate(format!(
                    "vertex {v} is out of range or repeated"
                )));
            }
        }
        Ok(())
    }

    /// `positions()[v]` is the index of `v` in the order.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    pub fn reversed(&self) -> LinearArrangement {
        LinearArrangement(self.0.iter().rev().copied().collect())
    }
}

/// A sequence of bags; each bag is a sorted list of vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PathDecomposition {
    pub bags: Vec<Vec<usize>>,
}

impl PathDecomposition {
    /// Builds a decomposition, sorting and deduplicating each bag.
    pub fn new(bags: Vec<Vec<usize>>) -> PathDecomposition {
        let bags = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        PathDecomposition { bags }
    }

    /// Largest bag size minus one; zero when there are no nonempty bags.
    pub fn width(&self) -> usize {
        self.bags
            .iter()
            .map(Vec::len)
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }

    /// Starts and ends with an empty bag, consecutive bags differ by one vertex.
    pub fn is_nice(&self) -> bool {
        let (Some(first), Some(last)) = (self.bags.first(), self.bags.last()) else {
            return true;
        };
        first.is_empty()
            && last.is_empty()
            && self.bags.windows(2).all(|p| {
                let (a, b) = (&p[0], &p[1]);
                let grow = b.len() == a.len() + 1 && a.iter().all(|v| b.contains(v));
                let shrink = a.len() == b.len() + 1 && b.iter().all(|v| a.contains(v));
                grow || shrink
            })
    }
}

/// Edges, counted with multiplicity, with exactly one endpoint in `left`.
pub fn cut_size(g: &MultiGraph, left: &[usize]) -> usize {
    let mut inside = vec![false; g.n()];
    for &v in left {
        inside[v] = true;
    }
    g.edges()
        .iter()
        .filter(|&&(u, v)| inside[u] != inside[v])
        .count()
}

/// Size of every prefix cut `E_L(0), …, E_L(n)`.
pub fn prefix_cuts(g: &MultiGraph, l: &LinearArrangement) -> Result<Vec<usize>> {
    l.validate(g.n())?;
    let pos = l.positions();
    let mut diff = vec![0isize; g.n() + 2];
    for &(u, v) in g.edges() {
        let (a, b) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
        // crosses cuts a+1 ..= b
        diff[a + 1] += 1;
        diff[b + 1] -= 1;
    }
    let mut cuts = Vec::with_capacity(g.n() + 1);
    let mut run = 0isize;
    for d in diff.iter().take(g.n() + 1) {
        run += d;
        cuts.push(run as usize);
    }
    Ok(cuts)
}

/// Largest prefix cut of the arrangement.
pub fn cutwidth_of_arrangement(g: &MultiGraph, l: &LinearArrangement) -> Result<usize> {
    Ok(prefix_cuts(g, l)?.into_iter().max().unwrap_or(0))
}

/// `max_i |E_L(i-1) ∪ E_L(i)|`, parallel edges counted as distinct elements.
pub fn second_order_cutwidth_of_arrangement(
    g: &MultiGraph,
    l: &LinearArrangement,
) -> Result<usize> {
    l.validate(g.n())?;
    let pos = l.positions();
    let n = g.n();
    let mut diff = vec![0isize; n + 3];
    for &(u, v) in g.edges() {
        let (a, b) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
        // in E(i-1) ∪ E(i) for i in a+1 ..= b+1, clipped to 1..=n
        diff[a + 1] += 1;
        diff[(b + 2).min(n + 1)] -= 1;
    }
    let mut best = 0;
    let mut run = 0isize;
    for d in diff.iter().take(n + 1) {
        run += d;
        best = best.max(run as usize);
    }
    Ok(best)
}

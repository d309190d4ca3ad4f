//! Constructions linking locality, cutwidth and pathwidth, with certificate
//! translation in both directions.
//!
//! * `H_{α,k}` / `H_α`: symbol graph of a word; `cw(H_{α,k}) = 2k` iff `loc(α) ≤ k`.
//! * `α_e`: Eulerian word of a graph with doubled edges; `loc(α_e) ∈ {cw, cw + 1}`.
//! * `G_α`: position graph of a word; `loc ≤ pw(G_α) ≤ 2 loc`.
//! * `G′`: edge-copy graph of a graph; `cw ≤ pw(G′) ≤ 2 cw`.

mod copies;
mod cut;
mod position;

pub use copies::{
    arrangement_to_pd_gprime, build_g_prime, cutwidth_via_pathwidth, pd_gprime_to_arrangement,
};
pub use cut::{
    arrangement_to_marking, build_h_alpha, build_h_alpha_k, cutwidth_via_locality,
    locality_via_cutwidth, marking_to_arrangement, words_from_cycle, words_from_graph,
    words_from_graph_all_edges, EulerWord,
};
pub use position::{
    build_g_alpha, locality_via_pathwidth, marking_to_path_decomposition,
    path_decomposition_to_marking,
};

use crate::error::Result;
use crate::graphs::{self, MultiGraph, PathDecomposition};
use crate::words::{self, MarkingSequence, Symbol, Word};

/// What a vertex of a constructed graph stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexLabel {
    /// A letter of the source word.
    Symbol(Symbol),
    /// The `$` vertex of `H_{α,k}`.
    Dollar,
    /// The `#` vertex of `H_{α,k}`.
    Hash,
    /// A 0-based position of the source word.
    Position(usize),
    /// The copy `owner_other` of `G′` for the edge instance `edge` of the source graph.
    Copy {
        owner: usize,
        other: usize,
        edge: usize,
    },
}

/// A constructed graph together with the meaning of each of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledReduction {
    pub graph: MultiGraph,
    pub labels: Vec<VertexLabel>,
    /// The `k` of `H_{α,k}`; `None` for the other constructions.
    pub k: Option<usize>,
}

impl LabeledReduction {
    pub(crate) fn new(graph: MultiGraph, labels: Vec<VertexLabel>, k: Option<usize>) -> Self {
        debug_assert_eq!(graph.n(), labels.len());
        let names = labels.iter().map(|l| default_name(l, &labels)).collect();
        let graph = graph.with_labels(names).expect("one label per vertex");
        LabeledReduction { graph, labels, k }
    }

    /// The graph relabelled with external symbol names (symbol and position
    /// vertices use the names; copies keep vertex names of the source graph).
    pub fn named_graph(&self, symbol_names: &[String], word: Option<&Word>) -> MultiGraph {
        let names = self
            .labels
            .iter()
            .map(|l| match *l {
                VertexLabel::Symbol(s) => symbol_names.get(s.0).cloned().unwrap_or(s.0.to_string()),
                VertexLabel::Position(p) => match word.and_then(|w| w.symbols().get(p)) {
                    Some(s) => format!(
                        "{}@{}",
                        symbol_names.get(s.0).cloned().unwrap_or(s.0.to_string()),
                        p + 1
                    ),
                    None => default_name(l, &self.labels),
                },
                _ => default_name(l, &self.labels),
            })
            .collect();
        self.graph
            .clone()
            .with_labels(names)
            .expect("one label per vertex")
    }
}

fn default_name(l: &VertexLabel, all: &[VertexLabel]) -> String {
    match *l {
        VertexLabel::Symbol(s) => s.0.to_string(),
        VertexLabel::Dollar => "$".into(),
        VertexLabel::Hash => "#".into(),
        VertexLabel::Position(p) => format!("p{}", p + 1),
        VertexLabel::Copy { owner, other, edge } => {
            let parallel = all.iter().any(|m| {
                matches!(*m, VertexLabel::Copy { owner: o, other: t, edge: e }
                    if o == owner && t == other && e != edge)
            });
            if parallel {
                format!("{owner}_{other}/{edge}")
            } else {
                format!("{owner}_{other}")
            }
        }
    }
}

/// A source of marking sequences for words.
pub trait LocalitySolver {
    fn solve(&self, w: &Word) -> Result<(usize, MarkingSequence)>;
}

/// A source of path decompositions. Pipelines validate whatever comes back.
pub trait PathwidthSolver {
    fn solve(&self, g: &MultiGraph) -> Result<(usize, PathDecomposition)>;
}

/// Exact locality by subset dynamic programming.
#[derive(Clone, Copy, Debug, Default)]
pub struct ExactLocality;

impl LocalitySolver for ExactLocality {
    fn solve(&self, w: &Word) -> Result<(usize, MarkingSequence)> {
        words::locality_subset_dp(w)
    }
}

/// Exact pathwidth by vertex separation.
#[derive(Clone, Copy, Debug, Default)]
pub struct ExactPathwidth;

impl PathwidthSolver for ExactPathwidth {
    fn solve(&self, g: &MultiGraph) -> Result<(usize, PathDecomposition)> {
        graphs::pathwidth_exact(g)
    }
}

impl<F> LocalitySolver for F
where
    F: Fn(&Word) -> Result<(usize, MarkingSequence)>,
{
    fn solve(&self, w: &Word) -> Result<(usize, MarkingSequence)> {
        self(w)
    }
}

/// Wraps a closure as a pathwidth backend.
pub struct PathwidthFn<F>(pub F);

impl<F> PathwidthSolver for PathwidthFn<F>
where
    F: Fn(&MultiGraph) -> Result<(usize, PathDecomposition)>,
{
    fn solve(&self, g: &MultiGraph) -> Result<(usize, PathDecomposition)> {
        (self.0)(g)
    }
}

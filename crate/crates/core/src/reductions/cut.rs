//! Symbol graphs `H_{α,k}` / `H_α` and Eulerian words `α_e`.

use super::{LabeledReduction, LocalitySolver, VertexLabel};
use crate::error::{Error, Result};
use crate::graphs::{
    cutwidth_exact, cutwidth_of_arrangement, duplicate_edges, eulerian_cycle, LinearArrangement,
    MultiGraph, Traversal, CUTWIDTH_VERTEX_CAP,
};
use crate::words::{condense, marking_number, MarkingSequence, Symbol, Word};

fn require_condensed_nonempty(w: &Word) -> Result<()> {
    if w.is_empty() {
        return Err(Error::Precondition("the word is empty".into()));
    }
    if !w.is_condensed() {
        return Err(Error::Precondition("the word is not condensed".into()));
    }
    Ok(())
}

fn symbol_edges(w: &Word) -> impl Iterator<Item = (usize, usize)> + '_ {
    w.symbols().windows(2).map(|p| (p[0].0, p[1].0))
}

/// `H_{α,k}`: one vertex per symbol plus `$` and `#`; an edge per adjacent
/// position pair, `$` joined to the first and last letter, and `2k` parallel
/// `$–#` edges.
pub fn build_h_alpha_k(w: &Word, k: usize) -> Result<LabeledReduction> {
    require_condensed_nonempty(w)?;
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    let sigma = w.alphabet_size();
    let (dollar, hash) = (sigma, sigma + 1);
    let first = w.first().expect("nonempty").0;
    let last = w.last().expect("nonempty").0;
    let edges: Vec<(usize, usize)> = symbol_edges(w)
        .chain([(dollar, first), (dollar, last)])
        .chain(std::iter::repeat((dollar, hash)).take(2 * k))
        .collect();
    let graph = MultiGraph::new(sigma + 2, edges)?;
    let mut labels: Vec<VertexLabel> = (0..sigma).map(|s| VertexLabel::Symbol(Symbol(s))).collect();
    labels.extend([VertexLabel::Dollar, VertexLabel::Hash]);
    Ok(LabeledReduction::new(graph, labels, Some(k)))
}

/// `H_α`: the symbol vertices of `H_{α,k}` and the edges between them.
pub fn build_h_alpha(w: &Word) -> Result<LabeledReduction> {
    require_condensed_nonempty(w)?;
    let sigma = w.alphabet_size();
    let graph = MultiGraph::new(sigma, symbol_edges(w))?;
    let labels = (0..sigma).map(|s| VertexLabel::Symbol(Symbol(s))).collect();
    Ok(LabeledReduction::new(graph, labels, None))
}

/// Reads the symbol vertices of an arrangement of `H_{α,k}` or `H_α` as a
/// marking sequence, dropping `$` and `#`. Guarantees `π ≤ cw(L)/2 + 1`.
pub fn arrangement_to_marking(
    w: &Word,
    r: &LabeledReduction,
    l: &LinearArrangement,
) -> Result<MarkingSequence> {
    let cw = cutwidth_of_arrangement(&r.graph, l)?;
    let seq = MarkingSequence(
        l.order()
            .iter()
            .filter_map(|&v| match r.labels[v] {
                VertexLabel::Symbol(s) => Some(s),
                _ => None,
            })
            .collect(),
    );
    let (pi, _) = marking_number(w, &seq)?;
    if 2 * pi > cw + 2 {
        return Err(Error::ContractViolation(format!(
            "marking number {pi} exceeds cw(L)/2 + 1 for cw(L) = {cw}"
        )));
    }
    Ok(seq)
}

/// Locality through cutwidth: with `ℓ = cw(H_α)`, the answer is the first
/// `k` in `ℓ/2 ≤ k ≤ (ℓ+4)/2` with `cw(H_{α,k}) = 2k`.
pub fn locality_via_cutwidth(w: &Word) -> Result<(usize, MarkingSequence)> {
    crate::error::check_cap("alphabet size", w.alphabet_size(), CUTWIDTH_VERTEX_CAP - 2)?;
    if w.is_empty() {
        return Ok((0, MarkingSequence::default()));
    }
    let w = condense(w);
    let (ell, _) = cutwidth_exact(&build_h_alpha(&w)?.graph)?;
    for k in ell.div_ceil(2).max(1)..=(ell + 4) / 2 {
        let h = build_h_alpha_k(&w, k)?;
        let (cw, mut l) = cutwidth_exact(&h.graph)?;
        if cw != 2 * k {
            continue;
        }
        if matches!(
            l.order().first().map(|&v| h.labels[v]),
            Some(VertexLabel::Hash)
        ) {
            l = l.reversed();
        }
        let seq = arrangement_to_marking(&w, &h, &l)?;
        let (pi, _) = marking_number(&w, &seq)?;
        if pi > k {
            return Err(Error::ContractViolation(format!(
                "arrangement of width {cw} gave marking number {pi} > {k}"
            )));
        }
        return Ok((k, seq));
    }
    Err(Error::ContractViolation(format!(
        "no k in the window of cw(H_α) = {ell} satisfies cw(H_α,k) = 2k"
    )))
}

/// One candidate word of the cutwidth-to-locality reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerWord {
    /// The vertex this word was chosen for (`None` in the all-edges listing).
    pub anchor: Option<usize>,
    /// The deleted traversal of the doubled graph.
    pub deleted: Traversal,
    /// Vertex ids along the remaining Eulerian path; symbol id = vertex id.
    pub word: Word,
}

fn euler_setup(g: &MultiGraph) -> Result<Vec<Traversal>> {
    if g.n() < 2 {
        return Err(Error::Precondition(
            "the graph needs at least two vertices".into(),
        ));
    }
    if !g.is_connected() {
        return Err(Error::Precondition("the graph is not connected".into()));
    }
    eulerian_cycle(&duplicate_edges(g))
}

/// The word of the Eulerian path that remains after deleting `cycle[j]`:
/// it starts at the head of that traversal and ends at its tail.
fn path_word(cycle: &[Traversal], j: usize) -> Word {
    let len = cycle.len();
    let ids = (1..len)
        .map(|d| cycle[(j + d) % len].from)
        .chain(std::iter::once(cycle[j].from));
    Word::new(ids).expect("a connected graph's Eulerian path visits every vertex")
}

fn per_vertex(n: usize, cycle: &[Traversal]) -> Vec<EulerWord> {
    (0..n)
        .map(|v| {
            let j = (0..cycle.len())
                .rev()
                .find(|&j| cycle[j].from == v || cycle[j].to == v)
                .expect("connected vertices have incident edges");
            EulerWord {
                anchor: Some(v),
                deleted: cycle[j],
                word: path_word(cycle, j),
            }
        })
        .collect()
}

fn every_edge(cycle: &[Traversal]) -> Vec<EulerWord> {
    (0..cycle.len())
        .map(|j| EulerWord {
            anchor: None,
            deleted: cycle[j],
            word: path_word(cycle, j),
        })
        .collect()
}

/// One word `α_e` per vertex `v`, where `e` is the last traversal of the
/// Eulerian cycle incident to `v`. The cycle starts at the smallest vertex,
/// whose word therefore reads the cycle from its start.
pub fn words_from_graph(g: &MultiGraph) -> Result<Vec<EulerWord>> {
    let cycle = euler_setup(g)?;
    Ok(per_vertex(g.n(), &cycle))
}

/// `α_e` for every traversal `e` of the Eulerian cycle.
pub fn words_from_graph_all_edges(g: &MultiGraph) -> Result<Vec<EulerWord>> {
    Ok(every_edge(&euler_setup(g)?))
}

/// Like [`words_from_graph`], but along a given closed walk of the doubled
/// graph (vertex sequence, first vertex repeated at the end). The walk must
/// use every edge of `g` exactly twice.
pub fn words_from_cycle(g: &MultiGraph, walk: &[usize], all_edges: bool) -> Result<Vec<EulerWord>> {
    euler_setup(g)?;
    if walk.len() != 2 * g.edge_count() + 1 || walk.first() != walk.last() {
        return Err(Error::InvalidCertificate(format!(
            "a closed walk over the doubled graph has {} vertices",
            2 * g.edge_count() + 1
        )));
    }
    let mut left = vec![2usize; g.edge_count()];
    let mut cycle = Vec::with_capacity(walk.len() - 1);
    for p in walk.windows(2) {
        let key = (p[0].min(p[1]), p[0].max(p[1]));
        let e = g
            .edges()
            .iter()
            .enumerate()
            .position(|(i, &e)| e == key && left[i] > 0)
            .ok_or_else(|| {
                Error::InvalidCertificate(format!("step {} -> {} has no unused edge", p[0], p[1]))
            })?;
        left[e] -= 1;
        // Doubled edge instances are numbered 2e and 2e + 1.
        cycle.push(Traversal {
            from: p[0],
            to: p[1],
            edge: 2 * e + (1 - left[e]),
        });
    }
    Ok(if all_edges {
        every_edge(&cycle)
    } else {
        per_vertex(g.n(), &cycle)
    })
}

/// Reads a marking sequence of `α_e` as a vertex order of `g`.
/// `α_e` must come from `g`; then `cw(L) ≤ π_s(α_e)`.
pub fn marking_to_arrangement(
    g: &MultiGraph,
    alpha_e: &Word,
    s: &MarkingSequence,
) -> Result<LinearArrangement> {
    if alpha_e.alphabet_size() != g.n() {
        return Err(Error::Precondition(format!(
            "word has {} symbols, graph has {} vertices",
            alpha_e.alphabet_size(),
            g.n()
        )));
    }
    let (pi, _) = marking_number(alpha_e, s)?;
    let l = LinearArrangement(s.ids().collect());
    let cw = cutwidth_of_arrangement(g, &l)?;
    if cw > pi {
        return Err(Error::ContractViolation(format!(
            "arrangement has cutwidth {cw} above the marking number {pi}"
        )));
    }
    Ok(l)
}

/// Cutwidth through locality: solve every per-vertex word and keep the best
/// translated arrangement (earliest vertex on ties).
pub fn cutwidth_via_locality<S: LocalitySolver + ?Sized>(
    g: &MultiGraph,
    solver: &S,
) -> Result<(usize, LinearArrangement)> {
    let mut best: Option<(usize, LinearArrangement)> = None;
    for cand in words_from_graph(g)? {
        let (_, s) = solver.solve(&cand.word)?;
        let l = marking_to_arrangement(g, &cand.word, &s)?;
        let cw = cutwidth_of_arrangement(g, &l)?;
        if best.as_ref().map_or(true, |(b, _)| cw < *b) {
            best = Some((cw, l));
        }
    }
    Ok(best.expect("at least two vertices"))
}

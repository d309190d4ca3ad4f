//! The position graph `G_α` and translations between marking sequences of
//! `α` and path decompositions of `G_α`.

use super::{LabeledReduction, PathwidthSolver, VertexLabel};
use crate::error::{Error, Result};
use crate::graphs::{check_path_decomposition, make_nice, MultiGraph, PathDecomposition};
use crate::words::{condense, marking_number, MarkingSequence, Symbol, Word};

fn require_condensed_pair(w: &Word) -> Result<()> {
    if w.len() < 2 {
        return Err(Error::Precondition(
            "the word needs at least two letters".into(),
        ));
    }
    if !w.is_condensed() {
        return Err(Error::Precondition("the word is not condensed".into()));
    }
    Ok(())
}

/// `G_α`: one vertex per position, path edges between neighbouring positions
/// and a clique on the positions of each symbol.
pub fn build_g_alpha(w: &Word) -> Result<LabeledReduction> {
    require_condensed_pair(w)?;
    let m = w.len();
    let mut edges: Vec<(usize, usize)> = (0..m - 1).map(|i| (i, i + 1)).collect();
    for positions in w.position_sets() {
        for (a, &p) in positions.iter().enumerate() {
            edges.extend(positions[a + 1..].iter().map(|&q| (p, q)));
        }
    }
    let graph = MultiGraph::new_simple(m, edges)?;
    let labels = (0..m).map(VertexLabel::Position).collect();
    Ok(LabeledReduction::new(graph, labels, None))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Open,
    Active,
    Closed,
}

/// Records one bag per status change, so the result is nice.
struct Scheme {
    status: Vec<Status>,
    active: Vec<usize>,
    bags: Vec<Vec<usize>>,
}

impl Scheme {
    fn new(m: usize) -> Self {
        Scheme {
            status: vec![Status::Open; m],
            active: Vec::new(),
            bags: vec![Vec::new()],
        }
    }

    fn activate(&mut self, p: usize) {
        if self.status[p] == Status::Open {
            self.status[p] = Status::Active;
            self.active.push(p);
            self.snapshot();
        }
    }

    fn close(&mut self, p: usize) {
        if self.status[p] == Status::Active {
            self.status[p] = Status::Closed;
            self.active.retain(|&q| q != p);
            self.snapshot();
        }
    }

    fn snapshot(&mut self) {
        let mut bag = self.active.clone();
        bag.sort_unstable();
        self.bags.push(bag);
    }
}

/// Path decomposition of `G_α` of width at most `2 π_s(α)`, produced by
/// replaying `s` as open/active/closed events on positions.
///
/// For the next symbol, each occurrence that does not start a new block of
/// size one is activated first, closing a neighbour whose own far side is no
/// longer open; then the remaining occurrences are activated; then every
/// occurrence whose neighbours are all active or closed is closed.
pub fn marking_to_path_decomposition(w: &Word, s: &MarkingSequence) -> Result<PathDecomposition> {
    require_condensed_pair(w)?;
    let (pi, _) = marking_number(w, s)?;
    let m = w.len();
    let syms = w.symbols();
    let positions = w.position_sets();
    let mut marked = vec![false; w.alphabet_size()];
    let mut scheme = Scheme::new(m);
    let is_marked = |marked: &[bool], p: Option<usize>| p.is_some_and(|p| marked[syms[p].0]);
    for (stage, &x) in s.symbols().iter().enumerate() {
        let occ = &positions[x.0];
        if stage > 0 {
            for &j in occ {
                let left = j.checked_sub(1);
                let right = (j + 1 < m).then_some(j + 1);
                if !is_marked(&marked, left) && !is_marked(&marked, right) {
                    continue;
                }
                scheme.activate(j);
                // 1-based: j-1 closes when j > 2 and j-2 is not open.
                if j >= 2
                    && scheme.status[j - 1] == Status::Active
                    && scheme.status[j - 2] != Status::Open
                {
                    scheme.close(j - 1);
                }
                if j + 2 < m
                    && scheme.status[j + 1] == Status::Active
                    && scheme.status[j + 2] != Status::Open
                {
                    scheme.close(j + 1);
                }
            }
        }
        for &j in occ {
            scheme.activate(j);
        }
        marked[x.0] = true;
        if stage > 0 {
            for &j in occ {
                let settled = [j.checked_sub(1), (j + 1 < m).then_some(j + 1)]
                    .into_iter()
                    .flatten()
                    .all(|q| scheme.status[q] != Status::Open);
                if settled {
                    scheme.close(j);
                }
            }
        }
    }
    let rest: Vec<usize> = {
        let mut r = scheme.active.clone();
        r.sort_unstable();
        r
    };
    for p in rest {
        scheme.close(p);
    }
    let q = PathDecomposition { bags: scheme.bags };
    let g = build_g_alpha(w)?.graph;
    check_path_decomposition(&g, &q).map_err(|v| {
        Error::ContractViolation(format!("event stream is not a decomposition: {v}"))
    })?;
    if q.width() > 2 * pi {
        return Err(Error::ContractViolation(format!(
            "decomposition width {} exceeds twice the marking number {pi}",
            q.width()
        )));
    }
    Ok(q)
}

/// Marking sequence with `π ≤ width(q)` from a decomposition of `G_α`.
///
/// Symbols are ordered by the first bag of the nice form of `q` that holds all
/// their positions (ties by id). If that order misses the bound, the first
/// single-symbol deferral (move one symbol to the end) that meets it is used.
pub fn path_decomposition_to_marking(w: &Word, q: &PathDecomposition) -> Result<MarkingSequence> {
    let g = build_g_alpha(w)?.graph;
    check_path_decomposition(&g, q).map_err(|v| Error::InvalidCertificate(v.to_string()))?;
    let width = q.width();
    let nice = make_nice(q)?;
    let positions = w.position_sets();
    let mut first_full = vec![usize::MAX; w.alphabet_size()];
    let mut active = vec![false; w.len()];
    for (i, bag) in nice.bags.iter().enumerate() {
        active.iter_mut().for_each(|a| *a = false);
        for &p in bag {
            active[p] = true;
        }
        for (x, occ) in positions.iter().enumerate() {
            if first_full[x] == usize::MAX && occ.iter().all(|&p| active[p]) {
                first_full[x] = i;
            }
        }
    }
    let mut order: Vec<usize> = (0..w.alphabet_size()).collect();
    order.sort_by_key(|&x| (first_full[x], x));
    let base = MarkingSequence::from_ids(order.iter().copied());
    if marking_number(w, &base)?.0 <= width {
        return Ok(base);
    }
    for s in 0..order.len() {
        let mut deferred = order.clone();
        let x = deferred.remove(s);
        deferred.push(x);
        let cand = MarkingSequence::from_ids(deferred);
        if marking_number(w, &cand)?.0 <= width {
            return Ok(cand);
        }
    }
    Err(Error::ContractViolation(format!(
        "no marking sequence within width {width} was found"
    )))
}

/// Locality through pathwidth: build `G_α`, ask the backend for a
/// decomposition, validate it and translate it. With an exact backend the
/// result is at most `2 loc(α)`.
pub fn locality_via_pathwidth<P: PathwidthSolver + ?Sized>(
    w: &Word,
    backend: &P,
) -> Result<(usize, MarkingSequence)> {
    let w = condense(w);
    match w.len() {
        0 => return Ok((0, MarkingSequence::default())),
        1 => return Ok((1, MarkingSequence(vec![Symbol(0)]))),
        _ => {}
    }
    let g = build_g_alpha(&w)?.graph;
    let (_, q) = backend.solve(&g)?;
    let s = path_decomposition_to_marking(&w, &q)?;
    Ok((marking_number(&w, &s)?.0, s))
}

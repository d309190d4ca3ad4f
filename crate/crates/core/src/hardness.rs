//! The Clique gadget: a word that is `rho`-local exactly when the source graph
//! has a clique of the requested size.
//!
//! For a graph on `v_1 … v_n` and a clique size `l`, the word is
//! `a1 a2 a3` over `x_1 … x_n, z_1, z_2, z_3` with
//!
//! ```text
//! a1 = (z1 z2 z3 z2)^g1
//! a2 = (z1 z2)^(g2 (n - l)) (x1 z2)^g2 … (xn z2)^g2 (z3 z2)^(l g2) z3
//! a3 = prod over edges {i, j}, i < j, of (xi xj)^g3 z3,
//!      then prod over i of (xi z3)^(g3 (D - d(i)))
//! ```
//!
//! where `d(i)` is the degree of `v_i` and `D` the maximum degree.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graphs::MultiGraph;
use crate::words::{locality_subset_dp, marking_number, MarkingSequence, Symbol, Word};

/// The gadget word together with every parameter used to build it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueGadget {
    pub source: MultiGraph,
    pub ell: usize,
    /// `l (l - 1) / 2`, the number of edges of an `l`-clique.
    pub mu: usize,
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    pub gamma1: usize,
    pub gamma2: usize,
    pub gamma3: usize,
    pub rho: usize,
    pub word: Word,
    /// Lengths of the three factors `a1`, `a2`, `a3`.
    pub factor_lengths: [usize; 3],
}

impl CliqueGadget {
    /// Vertex `v_i` (0-based) is the letter with id `i`.
    pub fn x(&self, i: usize) -> Symbol {
        Symbol(i)
    }

    /// Control letters `z_1, z_2, z_3` for `j = 1, 2, 3`.
    pub fn z(&self, j: usize) -> Symbol {
        assert!((1..=3).contains(&j));
        Symbol(self.source.n() + j - 1)
    }

    /// Names `x1 … xn z1 z2 z3` indexed by symbol id.
    pub fn symbol_names(&self) -> Vec<String> {
        let n = self.source.n();
        (1..=n)
            .map(|i| format!("x{i}"))
            .chain((1..=3).map(|j| format!("z{j}")))
            .collect()
    }

    /// `(z1, x1 … xl, z2, z3, x(l+1) … xn)`.
    pub fn baseline_sequence(&self) -> MarkingSequence {
        let n = self.source.n();
        let mut order = vec![self.z(1)];
        order.extend((0..self.ell).map(Symbol));
        order.extend([self.z(2), self.z(3)]);
        order.extend((self.ell..n).map(Symbol));
        MarkingSequence(order)
    }

    /// `g1 + n g2 + |a3|`, which the sequence above stays within whenever the
    /// graph has an edge.
    pub fn baseline_bound(&self) -> usize {
        self.gamma1 + self.source.n() * self.gamma2 + self.factor_lengths[2]
    }
}

/// Builds the gadget with the smallest admissible repetition parameters
/// `g3 = 3`, `g2 = |a3| + 2`, `g1 = |a2 a3| + 1`.
pub fn build_gadget(g: &MultiGraph, ell: usize) -> Result<CliqueGadget> {
    let n = g.n();
    if g.has_parallel_edges() {
        return Err(Error::Precondition(
            "the gadget needs a simple graph".into(),
        ));
    }
    if ell == 0 || ell > n {
        return Err(Error::Precondition(format!(
            "clique size must lie in 1..={n}, got {ell}"
        )));
    }
    let (z1, z2, z3) = (n, n + 1, n + 2);
    let degrees = g.degrees();
    let max_degree = degrees.iter().copied().max().unwrap_or(0);
    let mu = ell * (ell - 1) / 2;

    let gamma3 = 3;
    let mut a3 = Vec::new();
    for &(i, j) in g.edges().iter().sorted() {
        for _ in 0..gamma3 {
            a3.extend([i, j]);
        }
        a3.push(z3);
    }
    for (i, &d) in degrees.iter().enumerate() {
        for _ in 0..gamma3 * (max_degree - d) {
            a3.extend([i, z3]);
        }
    }

    let gamma2 = a3.len() + 2;
    let mut a2 = Vec::new();
    for _ in 0..gamma2 * (n - ell) {
        a2.extend([z1, z2]);
    }
    for i in 0..n {
        for _ in 0..gamma2 {
            a2.extend([i, z2]);
        }
    }
    for _ in 0..ell * gamma2 {
        a2.extend([z3, z2]);
    }
    a2.push(z3);

    let gamma1 = a2.len() + a3.len() + 1;
    let a1: Vec<usize> = [z1, z2, z3, z2].repeat(gamma1);

    assert!(gamma3 > 2);
    assert!(gamma2 > a3.len() + 1);
    assert!(gamma1 > a2.len() + a3.len());

    // `l D - 2 mu` is negative whenever `l > D + 1`.
    let slack = (ell * max_degree) as i64 - (2 * mu) as i64;
    let rho = (gamma1 + n * gamma2 + mu + 1) as i64 + slack * gamma3 as i64;
    let rho = usize::try_from(rho).expect("g1 exceeds every negative term");
    let factor_lengths = [a1.len(), a2.len(), a3.len()];
    let word = Word::new(a1.into_iter().chain(a2).chain(a3))?;
    debug_assert!(word.is_condensed());
    Ok(CliqueGadget {
        source: g.clone(),
        ell,
        mu,
        degrees,
        max_degree,
        gamma1,
        gamma2,
        gamma3,
        rho,
        word,
        factor_lengths,
    })
}

/// Whether `g` has `ell` pairwise adjacent vertices, by trying every subset.
pub fn has_clique(g: &MultiGraph, ell: usize) -> bool {
    let n = g.n();
    if ell > n {
        return false;
    }
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    (0..n)
        .combinations(ell)
        .any(|c| c.iter().tuple_combinations().all(|(&u, &v)| adj[u][v]))
}

/// Outcome of checking one gadget against the exact solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GadgetCheck {
    pub loc: usize,
    pub has_clique: bool,
    /// `(loc <= rho) == has_clique`.
    pub consistent: bool,
    /// Peak of [`CliqueGadget::baseline_sequence`].
    pub baseline_peak: usize,
    /// `baseline_peak <= baseline_bound()`. On edgeless graphs `a3` is empty and
    /// both the peak and `loc` exceed the bound by exactly one.
    pub baseline_within_bound: bool,
}

/// Solves the gadget word exactly and compares the answer with a direct
/// clique search.
pub fn verify_gadget(gadget: &CliqueGadget) -> Result<GadgetCheck> {
    let (loc, _) = locality_subset_dp(&gadget.word)?;
    let clique = has_clique(&gadget.source, gadget.ell);
    let (baseline_peak, _) = marking_number(&gadget.word, &gadget.baseline_sequence())?;
    Ok(GadgetCheck {
        loc,
        has_clique: clique,
        consistent: (loc <= gadget.rho) == clique,
        baseline_peak,
        baseline_within_bound: baseline_peak <= gadget.baseline_bound(),
    })
}

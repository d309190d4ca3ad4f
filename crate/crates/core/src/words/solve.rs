//! Exact locality solvers: permutation enumeration and a subset DP.

use itertools::Itertools;

use super::{condense, Marker, MarkingSequence, Symbol, Word};
use crate::error::{check_cap, Result};

/// Largest alphabet the permutation enumerator accepts by default.
pub const BRUTEFORCE_ALPHABET_CAP: usize = 9;

/// Largest alphabet the subset DP accepts by default. Two `u32` tables of
/// `2^σ` entries are kept, about 128 MiB at the cap; the per-subset work is
/// proportional to the occurrences of one symbol, so `m` is not capped.
pub const SUBSET_DP_ALPHABET_CAP: usize = 24;

/// All marking sequences of an alphabet of size `sigma`, in lexicographic order.
pub(crate) fn all_sequences(sigma: usize) -> impl Iterator<Item = Vec<Symbol>> {
    (0..sigma).map(Symbol).permutations(sigma)
}

/// Peak block count of `order` on `w`, without validation.
pub(crate) fn peak_of(w: &Word, order: &[Symbol]) -> usize {
    let mut marker = Marker::new(w);
    order.iter().map(|&x| marker.mark(x)).max().unwrap_or(0)
}

/// Locality number by enumerating every marking sequence. The witness is the
/// lexicographically smallest optimal sequence.
pub fn locality_bruteforce(w: &Word) -> Result<(usize, MarkingSequence)> {
    locality_bruteforce_capped(w, BRUTEFORCE_ALPHABET_CAP)
}

pub fn locality_bruteforce_capped(w: &Word, cap: usize) -> Result<(usize, MarkingSequence)> {
    check_cap("alphabet size", w.alphabet_size(), cap)?;
    let mut best: Option<(usize, Vec<Symbol>)> = None;
    for order in all_sequences(w.alphabet_size()) {
        let peak = peak_of(w, &order);
        if best.as_ref().map_or(true, |(b, _)| peak < *b) {
            best = Some((peak, order));
        }
    }
    let (k, order) = best.unwrap_or((0, Vec::new()));
    Ok((k, MarkingSequence(order)))
}

/// Locality number by dynamic programming over marked sets.
///
/// `c(S)` is the best peak reachable when completing from the marked set `S`:
/// `c(S) = min_{x ∉ S} max(k(S ∪ {x}), c(S ∪ {x}))` with `c(Σ) = 0`, and
/// `loc = c(∅)`. The witness is read forwards, always taking the smallest
/// symbol that keeps the peak optimal, so it is the lexicographically smallest
/// optimal sequence.
pub fn locality_subset_dp(w: &Word) -> Result<(usize, MarkingSequence)> {
    locality_subset_dp_capped(w, SUBSET_DP_ALPHABET_CAP)
}

pub fn locality_subset_dp_capped(w: &Word, cap: usize) -> Result<(usize, MarkingSequence)> {
    let sigma = w.alphabet_size();
    check_cap("alphabet size", sigma, cap.min(31))?;
    if sigma == 0 {
        return Ok((0, MarkingSequence::default()));
    }
    let w = condense(w);
    let k = block_table(&w);
    let full = (1usize << sigma) - 1;
    let mut c = vec![0u32; full + 1];
    for set in (0..full).rev() {
        let mut best = u32::MAX;
        let mut free = !set & full;
        while free != 0 {
            let next = set | (free & free.wrapping_neg());
            free &= free - 1;
            best = best.min(k[next].max(c[next]));
        }
        c[set] = best;
    }
    let loc = c[0];
    let mut order = Vec::with_capacity(sigma);
    let mut set = 0usize;
    while set != full {
        let x = (0..sigma)
            .find(|&x| set >> x & 1 == 0 && k[set | 1 << x].max(c[set | 1 << x]) <= loc)
            .expect("an optimal completion always exists");
        order.push(Symbol(x));
        set |= 1 << x;
    }
    Ok((loc as usize, MarkingSequence(order)))
}

/// `k[S]` = number of marked blocks once exactly the symbols in `S` are marked.
/// Built from `S` minus its lowest symbol: marking occurrence `p` of `x`
/// changes the count by `1 - #(marked neighbours of p)`.
pub(crate) fn block_table(w: &Word) -> Vec<u32> {
    let sigma = w.alphabet_size();
    let syms = w.symbols();
    let mut neighbours: Vec<Vec<(Option<usize>, Option<usize>)>> = vec![Vec::new(); sigma];
    for (i, s) in syms.iter().enumerate() {
        let left = i.checked_sub(1).map(|j| syms[j].0);
        let right = syms.get(i + 1).map(|t| t.0);
        neighbours[s.0].push((left, right));
    }
    let size = 1usize << sigma;
    let mut k = vec![0u32; size];
    for set in 1..size {
        let x = set.trailing_zeros() as usize;
        let prev = set & (set - 1);
        let in_prev = |y: Option<usize>| y.map_or(0i64, |y| (prev >> y & 1) as i64);
        // Same-symbol neighbours cannot occur here: the DP runs on condensed words.
        let delta: i64 = neighbours[x]
            .iter()
            .map(|&(l, r)| 1 - in_prev(l) - in_prev(r))
            .sum();
        k[set] = (k[prev] as i64 + delta) as u32;
    }
    k
}

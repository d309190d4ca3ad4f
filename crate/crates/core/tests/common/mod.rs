//! Seeded generators and slow reference oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashSet;

use itertools::Itertools;
use locality::graphs::MultiGraph;
use locality::words::Word;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A condensed word with at most `sigma` letters and length in `1..=m_max`,
/// relabelled to dense ids.
pub fn random_condensed_word(rng: &mut ChaCha8Rng, sigma: usize, m_max: usize) -> Word {
    let m = rng.gen_range(1..=m_max);
    let sigma = sigma.max(1);
    let mut ids: Vec<usize> = Vec::with_capacity(m);
    while ids.len() < m {
        let x = rng.gen_range(0..sigma);
        if ids.last() == Some(&x) {
            if sigma == 1 {
                break;
            }
            continue;
        }
        ids.push(x);
    }
    Word::relabelled(ids)
}

/// A word with letters drawn freely (runs allowed).
pub fn random_word(rng: &mut ChaCha8Rng, sigma: usize, m_max: usize) -> Word {
    let m = rng.gen_range(1..=m_max);
    Word::relabelled((0..m).map(|_| rng.gen_range(0..sigma.max(1))))
}

/// Every condensed word of length `1..=m_max` over at most `sigma` letters,
/// one per renaming class (letters numbered in order of first occurrence).
pub fn all_condensed_words(sigma: usize, m_max: usize) -> Vec<Word> {
    fn grow(cur: &mut Vec<usize>, used: usize, sigma: usize, m_max: usize, out: &mut Vec<Word>) {
        if !cur.is_empty() {
            out.push(Word::new(cur.iter().copied()).unwrap());
        }
        if cur.len() == m_max {
            return;
        }
        for x in 0..(used + 1).min(sigma) {
            if cur.last() == Some(&x) {
                continue;
            }
            cur.push(x);
            grow(cur, used.max(x + 1), sigma, m_max, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    grow(&mut Vec::new(), 0, sigma, m_max, &mut out);
    out
}

/// A loop-free multigraph on `n` vertices with `m` edges chosen uniformly
/// among all pairs (repeats allowed).
pub fn random_multigraph(rng: &mut ChaCha8Rng, n: usize, m: usize) -> MultiGraph {
    let edges: Vec<(usize, usize)> = (0..m)
        .map(|_| {
            let u = rng.gen_range(0..n);
            let mut v = rng.gen_range(0..n - 1);
            if v >= u {
                v += 1;
            }
            (u, v)
        })
        .collect();
    MultiGraph::new(n, edges).unwrap()
}

/// A connected multigraph: a random spanning tree plus `extra` random edges.
pub fn random_connected_multigraph(rng: &mut ChaCha8Rng, n: usize, extra: usize) -> MultiGraph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    if n >= 2 {
        for _ in 0..extra {
            let u = rng.gen_range(0..n);
            let mut v = rng.gen_range(0..n - 1);
            if v >= u {
                v += 1;
            }
            edges.push((u, v));
        }
    }
    MultiGraph::new(n, edges).unwrap()
}

/// A simple graph where each pair is an edge with probability `p`.
pub fn random_simple_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> MultiGraph {
    let edges: Vec<(usize, usize)> = (0..n)
        .tuple_combinations()
        .filter(|_| rng.gen_bool(p))
        .collect();
    MultiGraph::new_simple(n, edges).unwrap()
}

/// Marked blocks of `w` when exactly the letters in `marked` are marked,
/// counted by scanning for block starts.
pub fn naive_blocks(w: &Word, marked: &HashSet<usize>) -> usize {
    let ids: Vec<usize> = w.ids().collect();
    (0..ids.len())
        .filter(|&i| marked.contains(&ids[i]) && (i == 0 || !marked.contains(&ids[i - 1])))
        .count()
}

/// Peak block count of the order `seq`, from scratch at every stage.
pub fn naive_peak(w: &Word, seq: &[usize]) -> usize {
    let mut marked = HashSet::new();
    let mut peak = 0;
    for &x in seq {
        marked.insert(x);
        peak = peak.max(naive_blocks(w, &marked));
    }
    peak
}

/// Locality by trying every order of the alphabet.
pub fn locality_oracle(w: &Word) -> usize {
    let sigma = w.alphabet_size();
    (0..sigma)
        .permutations(sigma)
        .map(|p| naive_peak(w, &p))
        .min()
        .unwrap_or(0)
}

/// Cutwidth of the order `order` by counting crossing edges at every gap.
pub fn naive_cutwidth_of(g: &MultiGraph, order: &[usize]) -> usize {
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    (0..g.n().saturating_sub(1))
        .map(|gap| {
            g.edges()
                .iter()
                .filter(|&&(u, v)| pos[u].min(pos[v]) <= gap && pos[u].max(pos[v]) > gap)
                .count()
        })
        .max()
        .unwrap_or(0)
}

/// Cutwidth by trying every vertex order.
pub fn cutwidth_oracle(g: &MultiGraph) -> usize {
    (0..g.n())
        .permutations(g.n())
        .map(|p| naive_cutwidth_of(g, &p))
        .min()
        .unwrap_or(0)
}

/// Pathwidth as a vertex game: each vertex goes open -> active -> closed, a
/// vertex may close only once none of its neighbours is still open, and the
/// cost of a play is the largest number of simultaneously active vertices,
/// minus one. Searches the 3^n states for each candidate width.
pub fn pathwidth_oracle(g: &MultiGraph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let mut nbr = vec![0u32; n];
    for &(u, v) in g.edges() {
        nbr[u] |= 1 << v;
        nbr[v] |= 1 << u;
    }
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    for width in 0..n {
        let mut seen = HashSet::new();
        let mut stack = vec![(0u32, 0u32)];
        while let Some((active, closed)) = stack.pop() {
            if closed == full {
                return width;
            }
            if !seen.insert((active, closed)) {
                continue;
            }
            let open = full & !active & !closed;
            for v in 0..n {
                let bit = 1 << v;
                if open & bit != 0 && (active.count_ones() as usize) < width + 1 {
                    stack.push((active | bit, closed));
                }
                if active & bit != 0 && nbr[v] & open == 0 {
                    stack.push((active & !bit, closed | bit));
                }
            }
        }
    }
    n - 1
}

/// Whether `seq` is a permutation of `0..sigma`.
pub fn is_permutation(seq: &[usize], sigma: usize) -> bool {
    let mut s = seq.to_vec();
    s.sort_unstable();
    s == (0..sigma).collect::<Vec<_>>()
}

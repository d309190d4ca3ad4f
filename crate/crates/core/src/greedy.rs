//! Greedy marking strategies, the exact best run of each strategy, and the
//! word families on which the strategies are known to do badly.
//!
//! Strategies act on the condensed form of the input word, so occurrence
//! counts refer to maximal runs of a letter.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::{check_cap, Error, Result};
use crate::words::solve::block_table;
use crate::words::{condense, locality_subset_dp, marking_number, MarkingSequence, Symbol, Word};

/// Largest alphabet [`greedy_best`] accepts by default.
pub const GREEDY_ALPHABET_CAP: usize = 20;

/// A greedy rule for picking the next letter to mark.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Fewest occurrences.
    So,
    /// Most occurrences.
    Mo,
    /// Fewest marked blocks after marking.
    Snm,
    /// Leftmost first occurrence.
    Lr,
    /// Some occurrence is adjacent to a marked position.
    Be,
    BeSo,
    BeMo,
    BeSnm,
    BeLr,
    /// Among extending letters, most extending occurrences.
    BeMostExt,
    /// Among extending letters, largest share of extending occurrences.
    BeRatio,
}

impl Strategy {
    pub const ALL: [Strategy; 11] = [
        Strategy::So,
        Strategy::Mo,
        Strategy::Snm,
        Strategy::Lr,
        Strategy::Be,
        Strategy::BeSo,
        Strategy::BeMo,
        Strategy::BeSnm,
        Strategy::BeLr,
        Strategy::BeMostExt,
        Strategy::BeRatio,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Strategy::So => "SO",
            Strategy::Mo => "MO",
            Strategy::Snm => "SNM",
            Strategy::Lr => "LR",
            Strategy::Be => "BE",
            Strategy::BeSo => "BE-SO",
            Strategy::BeMo => "BE-MO",
            Strategy::BeSnm => "BE-SNM",
            Strategy::BeLr => "BE-LR",
            Strategy::BeMostExt => "BE-MOSTEXT",
            Strategy::BeRatio => "BE-RATIO",
        }
    }

    fn requires_extension(self) -> bool {
        !matches!(
            self,
            Strategy::So | Strategy::Mo | Strategy::Snm | Strategy::Lr
        )
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Strategy> {
        let wanted = s.trim().to_ascii_uppercase().replace('_', "-");
        Strategy::ALL
            .into_iter()
            .find(|t| t.tag() == wanted)
            .ok_or_else(|| Error::Parse(format!("unknown strategy {s:?}")))
    }
}

/// Per-letter data the strategies consult, for a fixed word.
struct Profile {
    sigma: usize,
    occurrences: Vec<usize>,
    first: Vec<usize>,
    /// `(letter, left neighbour, right neighbour)` for every position.
    neighbours: Vec<(usize, Option<usize>, Option<usize>)>,
    blocks: Vec<u32>,
}

impl Profile {
    fn new(w: &Word) -> Profile {
        let sigma = w.alphabet_size();
        let syms: Vec<usize> = w.ids().collect();
        let mut occurrences = vec![0; sigma];
        let mut first = vec![usize::MAX; sigma];
        let mut neighbours = Vec::with_capacity(syms.len());
        for (i, &x) in syms.iter().enumerate() {
            occurrences[x] += 1;
            first[x] = first[x].min(i);
            let left = i.checked_sub(1).map(|j| syms[j]);
            neighbours.push((x, left, syms.get(i + 1).copied()));
        }
        Profile {
            sigma,
            occurrences,
            first,
            neighbours,
            blocks: block_table(w),
        }
    }

    fn extending(&self, marked: u64) -> Vec<usize> {
        let is_marked = |y: Option<usize>| y.is_some_and(|y| marked >> y & 1 == 1);
        let mut ext = vec![0; self.sigma];
        for &(x, l, r) in &self.neighbours {
            if marked >> x & 1 == 0 && (is_marked(l) || is_marked(r)) {
                ext[x] += 1;
            }
        }
        ext
    }

    fn candidates(&self, marked: u64, strat: Strategy) -> Vec<usize> {
        let unmarked: Vec<usize> = (0..self.sigma).filter(|&x| marked >> x & 1 == 0).collect();
        if unmarked.is_empty() {
            return unmarked;
        }
        if strat == Strategy::Lr {
            return vec![*unmarked.iter().min_by_key(|&&x| self.first[x]).unwrap()];
        }
        if marked == 0 {
            return unmarked;
        }
        let ext = self.extending(marked);
        let pool: Vec<usize> = if strat.requires_extension() {
            unmarked.into_iter().filter(|&x| ext[x] > 0).collect()
        } else {
            unmarked
        };
        let after = |x: usize| self.blocks[(marked | 1 << x) as usize];
        match strat {
            Strategy::Be => pool,
            Strategy::So | Strategy::BeSo => {
                best_by(pool, |x| std::cmp::Reverse(self.occurrences[x]))
            }
            Strategy::Mo | Strategy::BeMo => best_by(pool, |x| self.occurrences[x]),
            Strategy::Snm | Strategy::BeSnm => best_by(pool, |x| std::cmp::Reverse(after(x))),
            Strategy::Lr | Strategy::BeLr => {
                vec![*pool.iter().min_by_key(|&&x| self.first[x]).unwrap()]
            }
            Strategy::BeMostExt => best_by(pool, |x| ext[x]),
            Strategy::BeRatio => {
                let top = *pool
                    .iter()
                    .max_by(|&&a, &&b| {
                        (ext[a] * self.occurrences[b]).cmp(&(ext[b] * self.occurrences[a]))
                    })
                    .unwrap();
                pool.into_iter()
                    .filter(|&x| ext[x] * self.occurrences[top] == ext[top] * self.occurrences[x])
                    .collect()
            }
        }
    }
}

/// All elements of `pool` that maximise `key`, in input order.
fn best_by<K: Ord>(pool: Vec<usize>, key: impl Fn(usize) -> K) -> Vec<usize> {
    let Some(top) = pool.iter().map(|&x| key(x)).max() else {
        return pool;
    };
    pool.into_iter().filter(|&x| key(x) == top).collect()
}

fn mask_of(w: &Word, marked: &[Symbol]) -> Result<u64> {
    let mut mask = 0u64;
    for s in marked {
        if s.0 >= w.alphabet_size() {
            return Err(Error::Precondition(format!(
                "symbol {} is outside the alphabet of size {}",
                s.0,
                w.alphabet_size()
            )));
        }
        mask |= 1 << s.0;
    }
    Ok(mask)
}

/// The letters `strat` may mark next once `marked` is marked, in id order.
/// Before the first mark every strategy except LR may start anywhere.
pub fn candidates(w: &Word, marked: &[Symbol], strat: Strategy) -> Result<Vec<Symbol>> {
    check_cap("alphabet size", w.alphabet_size(), GREEDY_ALPHABET_CAP)?;
    let w = condense(w);
    let mask = mask_of(&w, marked)?;
    Ok(Profile::new(&w)
        .candidates(mask, strat)
        .into_iter()
        .map(Symbol)
        .collect())
}

/// One deterministic run of `strat`, always taking the candidate with the
/// smallest id. Returns the sequence and its peak.
pub fn greedy_run(w: &Word, strat: Strategy) -> Result<(MarkingSequence, usize)> {
    check_cap("alphabet size", w.alphabet_size(), GREEDY_ALPHABET_CAP)?;
    let w = condense(w);
    let profile = Profile::new(&w);
    let mut marked = 0u64;
    let mut order = Vec::with_capacity(w.alphabet_size());
    let mut peak = 0;
    for _ in 0..w.alphabet_size() {
        let x = profile.candidates(marked, strat)[0];
        marked |= 1 << x;
        peak = peak.max(profile.blocks[marked as usize] as usize);
        order.push(Symbol(x));
    }
    Ok((MarkingSequence(order), peak))
}

/// The smallest peak over every marking sequence `strat` can produce, with a
/// witness.
pub fn greedy_best(w: &Word, strat: Strategy) -> Result<(usize, MarkingSequence)> {
    greedy_best_capped(w, strat, GREEDY_ALPHABET_CAP)
}

pub fn greedy_best_capped(
    w: &Word,
    strat: Strategy,
    cap: usize,
) -> Result<(usize, MarkingSequence)> {
    check_cap(
        "alphabet size",
        w.alphabet_size(),
        cap.min(GREEDY_ALPHABET_CAP),
    )?;
    let w = condense(w);
    let sigma = w.alphabet_size();
    let profile = Profile::new(&w);
    let full = (1u64 << sigma) - 1;
    // g[S]: best peak still to come once S is marked; u32::MAX = not computed.
    let mut g = vec![u32::MAX; 1 << sigma];
    let mut choice = vec![0u8; 1 << sigma];
    fn solve(
        set: u64,
        full: u64,
        strat: Strategy,
        profile: &Profile,
        g: &mut [u32],
        choice: &mut [u8],
    ) -> u32 {
        if set == full {
            return 0;
        }
        if g[set as usize] != u32::MAX {
            return g[set as usize];
        }
        let mut best = u32::MAX;
        for x in profile.candidates(set, strat) {
            let next = set | 1 << x;
            let v = profile.blocks[next as usize].max(solve(next, full, strat, profile, g, choice));
            if v < best {
                best = v;
                choice[set as usize] = x as u8;
            }
        }
        g[set as usize] = best;
        best
    }
    let value = solve(0, full, strat, &profile, &mut g, &mut choice);
    let mut order = Vec::with_capacity(sigma);
    let mut set = 0u64;
    while set != full {
        let x = choice[set as usize] as usize;
        order.push(Symbol(x));
        set |= 1 << x;
    }
    let witness = MarkingSequence(order);
    debug_assert_eq!(
        marking_number(&w, &witness).map(|r| r.0).ok(),
        Some(value as usize)
    );
    Ok((value as usize, witness))
}

/// `greedy_best / loc` as an exact fraction.
pub fn psi(w: &Word, strat: Strategy) -> Result<Ratio<usize>> {
    if w.is_empty() {
        return Err(Error::Precondition(
            "the ratio is undefined for the empty word".into(),
        ));
    }
    let (g, _) = greedy_best(w, strat)?;
    let (loc, _) = locality_subset_dp(w)?;
    Ok(Ratio::new(g, loc))
}

/// Named word families on which greedy strategies are far from optimal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `x_1 y x_2 y … x_l y`.
    Be,
    /// `(x_1 … x_l)^2 x_1 b_1 x_2 b_2 … b_{l-1} x_l`, `b_i = (y_{2i-1} y_{2i})^4`.
    Alpha6,
    /// `x_1 … x_l x_1 y_1 x_2 y_2 … y_{l-1} x_l`.
    Gamma,
    /// `x_1 … x_l x_1 x_l x_2 x_{l-1} … x_{l/2} x_{l/2+1}`, even `l` only.
    Delta,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s.trim().to_ascii_lowercase().as_str() {
            "be" => Ok(Family::Be),
            "alpha6" => Ok(Family::Alpha6),
            "gamma" => Ok(Family::Gamma),
            "delta" => Ok(Family::Delta),
            _ => Err(Error::Parse(format!("unknown greedy family {s:?}"))),
        }
    }
}

/// Builds the member of `family` with `l` letters `x_i`. The `x_i` get ids
/// `0..l`; the `y` letters follow.
pub fn family(family: Family, l: usize) -> Result<Word> {
    if l < 2 {
        return Err(Error::Precondition(format!("family needs l >= 2, got {l}")));
    }
    let xs = 0..l;
    let ids: Vec<usize> = match family {
        Family::Be => xs.flat_map(|i| [i, l]).collect(),
        Family::Alpha6 => {
            let mut v: Vec<usize> = xs.clone().chain(xs).chain([0]).collect();
            for i in 1..l {
                let (a, b) = (l + 2 * (i - 1), l + 2 * (i - 1) + 1);
                v.extend([a, b, a, b, a, b, a, b, i]);
            }
            v
        }
        Family::Gamma => {
            let mut v: Vec<usize> = xs.chain([0]).collect();
            for i in 1..l {
                v.extend([l + i - 1, i]);
            }
            v
        }
        Family::Delta => {
            if l % 2 != 0 {
                return Err(Error::Precondition(format!(
                    "delta needs an even l, got {l}"
                )));
            }
            let mut v: Vec<usize> = xs.collect();
            for i in 0..l / 2 {
                v.extend([i, l - 1 - i]);
            }
            v
        }
    };
    Word::new(ids)
}

//! Words over dense integer alphabets and the marking semantics behind the
//! locality number.
//!
//! A word is marked one alphabet letter at a time; after each stage the
//! marked positions form maximal runs ("blocks"). The largest block count
//! seen along a marking sequence is its marking number, and the locality
//! number of a word is the smallest marking number over all sequences.

mod families;
mod laws;
pub(crate) mod solve;
mod text;

pub use families::{tightness_alpha, tightness_beta, zimin, ZIMIN_MAX_ORDER};
pub use laws::{border_priority, is_strictly_k_local, Border};
pub use solve::{
    locality_bruteforce, locality_bruteforce_capped, locality_subset_dp, locality_subset_dp_capped,
    BRUTEFORCE_ALPHABET_CAP, SUBSET_DP_ALPHABET_CAP,
};
pub use text::{SymbolTable, WordMode};

use std::fmt;

use crate::error::{Error, Result};

/// A letter of a word, identified by a dense id `0..alphabet_size`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(pub usize);

impl Symbol {
    #[inline]
    pub fn id(self) -> usize {
        self.0
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite word whose symbols use exactly the ids `0..alphabet_size`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word {
    symbols: Vec<Symbol>,
    alphabet_size: usize,
}

impl Word {
    /// Builds a word from raw ids. The ids must be dense: every id below the
    /// largest one has to occur.
    pub fn new<I: IntoIterator<Item = usize>>(ids: I) -> Result<Word> {
        let symbols: Vec<Symbol> = ids.into_iter().map(Symbol).collect();
        let alphabet_size = symbols.iter().map(|s| s.0 + 1).max().unwrap_or(0);
        let mut seen = vec![false; alphabet_size];
        for s in &symbols {
            seen[s.0] = true;
        }
        if let Some(missing) = seen.iter().position(|&b| !b) {
            return Err(Error::Precondition(format!(
                "symbol ids are not dense: id {missing} is unused"
            )));
        }
        Ok(Word {
            symbols,
            alphabet_size,
        })
    }

    /// Builds a word from arbitrary ids, renaming them to dense ids in order
    /// of first occurrence.
    pub fn relabelled<I: IntoIterator<Item = usize>>(ids: I) -> Word {
        let mut map = std::collections::HashMap::new();
        let symbols = ids
            .into_iter()
            .map(|raw| {
                let next = map.len();
                Symbol(*map.entry(raw).or_insert(next))
            })
            .collect();
        Word {
            symbols,
            alphabet_size: map.len(),
        }
    }

    pub fn empty() -> Word {
        Word::default()
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.symbols.iter().map(|s| s.0)
    }

    pub fn first(&self) -> Option<Symbol> {
        self.symbols.first().copied()
    }

    pub fn last(&self) -> Option<Symbol> {
        self.symbols.last().copied()
    }

    /// 0-based positions of every symbol, indexed by symbol id.
    pub fn position_sets(&self) -> Vec<Vec<usize>> {
        let mut sets = vec![Vec::new(); self.alphabet_size];
        for (i, s) in self.symbols.iter().enumerate() {
            sets[s.0].push(i);
        }
        sets
    }

    /// A word is condensed when no two adjacent positions carry the same symbol.
    pub fn is_condensed(&self) -> bool {
        self.symbols.windows(2).all(|p| p[0] != p[1])
    }

    pub fn reversed(&self) -> Word {
        let mut symbols = self.symbols.clone();
        symbols.reverse();
        Word {
            symbols,
            alphabet_size: self.alphabet_size,
        }
    }

    /// `self` concatenated `times` times; `times = 0` gives the empty word.
    pub fn repeat(&self, times: usize) -> Word {
        if times == 0 {
            return Word::empty();
        }
        Word {
            symbols: self.symbols.repeat(times),
            alphabet_size: self.alphabet_size,
        }
    }

    /// Concatenation. Both words share one id space, so the result is dense
    /// whenever the larger alphabet covers the smaller one.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        Word::new(self.ids().chain(other.ids()))
    }
}

/// Collapses every maximal run `x^k` into a single `x`.
pub fn condense(w: &Word) -> Word {
    let mut symbols = w.symbols.clone();
    symbols.dedup();
    Word {
        symbols,
        alphabet_size: w.alphabet_size,
    }
}

/// An order in which the alphabet of a word is marked.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MarkingSequence(pub Vec<Symbol>);

impl MarkingSequence {
    pub fn from_ids<I: IntoIterator<Item = usize>>(ids: I) -> MarkingSequence {
        MarkingSequence(ids.into_iter().map(Symbol).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|s| s.0)
    }

    /// Checks that the sequence is a permutation of `0..alphabet_size`.
    pub fn validate(&self, alphabet_size: usize) -> Result<()> {
        if self.0.len() != alphabet_size {
            return Err(Error::InvalidCertificate(format!(
                "marking sequence has {} symbols, alphabet has {}",
                self.0.len(),
                alphabet_size
            )));
        }
        let mut seen = vec![false; alphabet_size];
        for s in &self.0 {
            if s.0 >= alphabet_size {
                return Err(Error::InvalidCertificate(format!(
                    "symbol {} is outside the alphabet",
                    s.0
                )));
            }
            if std::mem::replace(&mut seen[s.0], true) {
                return Err(Error::InvalidCertificate(format!(
                    "symbol {} is marked twice",
                    s.0
                )));
            }
        }
        Ok(())
    }
}

/// The reversed marking sequence.
pub fn reverse_sequence(s: &MarkingSequence) -> MarkingSequence {
    let mut order = s.0.clone();
    order.reverse();
    MarkingSequence(order)
}

/// Block counts after each stage of a marking sequence.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MarkingTrace {
    pub counts: Vec<usize>,
}

impl MarkingTrace {
    pub fn peak(&self) -> usize {
        self.counts.iter().copied().max().unwrap_or(0)
    }
}

/// Incremental block counter over the positions of one word.
pub(crate) struct Marker<'a> {
    word: &'a Word,
    positions: Vec<Vec<usize>>,
    marked: Vec<bool>,
    blocks: usize,
}

impl<'a> Marker<'a> {
    pub(crate) fn new(word: &'a Word) -> Self {
        Marker {
            word,
            positions: word.position_sets(),
            marked: vec![false; word.len()],
            blocks: 0,
        }
    }

    /// Marks every occurrence of `x` and returns the new block count.
    pub(crate) fn mark(&mut self, x: Symbol) -> usize {
        let n = self.word.len();
        for &p in &self.positions[x.0] {
            let left = p > 0 && self.marked[p - 1];
            let right = p + 1 < n && self.marked[p + 1];
            self.marked[p] = true;
            match (left, right) {
                (false, false) => self.blocks += 1,
                (true, true) => self.blocks -= 1,
                _ => {}
            }
        }
        self.blocks
    }
}

/// Runs `s` on `w` and returns the marking number together with the block
/// count after every stage.
pub fn marking_number(w: &Word, s: &MarkingSequence) -> Result<(usize, MarkingTrace)> {
    s.validate(w.alphabet_size())?;
    let mut marker = Marker::new(w);
    let counts: Vec<usize> = s.symbols().iter().map(|&x| marker.mark(x)).collect();
    let trace = MarkingTrace { counts };
    Ok((trace.peak(), trace))
}

/// Number of maximal runs of positions whose symbol lies in `marked`.
pub fn blocks_after_marking(w: &Word, marked: &[Symbol]) -> usize {
    let mut in_set = vec![false; w.alphabet_size()];
    for s in marked {
        if s.0 < in_set.len() {
            in_set[s.0] = true;
        }
    }
    let mut blocks = 0;
    let mut prev = false;
    for s in w.symbols() {
        let cur = in_set[s.0];
        if cur && !prev {
            blocks += 1;
        }
        prev = cur;
    }
    blocks
}

/// `blocks_after_marking` for a bitmask of symbol ids (alphabets up to 64).
#[cfg(test)]
pub(crate) fn blocks_in_mask(w: &Word, mask: u64) -> usize {
    let mut blocks = 0;
    let mut prev = false;
    for s in w.symbols() {
        let cur = mask >> s.0 & 1 == 1;
        if cur && !prev {
            blocks += 1;
        }
        prev = cur;
    }
    blocks
}

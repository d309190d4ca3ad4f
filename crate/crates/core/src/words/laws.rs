//! Exhaustive checkers for strict locality and border priority markability.

use super::solve::{all_sequences, BRUTEFORCE_ALPHABET_CAP};
use super::{Marker, Symbol, Word};
use crate::error::{check_cap, Error, Result};

/// Which border letters must stay marked at peak stages.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Border {
    Left,
    Right,
    Both,
}

/// Every marking sequence with its block counts, in lexicographic order.
fn traces(w: &Word) -> Result<Vec<(Vec<Symbol>, Vec<usize>)>> {
    check_cap("alphabet size", w.alphabet_size(), BRUTEFORCE_ALPHABET_CAP)?;
    Ok(all_sequences(w.alphabet_size())
        .map(|order| {
            let mut marker = Marker::new(w);
            let counts = order.iter().map(|&x| marker.mark(x)).collect();
            (order, counts)
        })
        .collect())
}

fn optimum(traces: &[(Vec<Symbol>, Vec<usize>)]) -> usize {
    traces
        .iter()
        .map(|(_, c)| c.iter().copied().max().unwrap_or(0))
        .min()
        .unwrap_or(0)
}

/// True iff `loc(w) = k` and every optimal marking sequence has a stage with
/// exactly `k` marked blocks.
pub fn is_strictly_k_local(w: &Word, k: usize) -> Result<bool> {
    let all = traces(w)?;
    if optimum(&all) != k {
        return Ok(false);
    }
    Ok(all
        .iter()
        .filter(|(_, c)| c.iter().copied().max().unwrap_or(0) == k)
        .all(|(_, c)| c.contains(&k)))
}

/// Border priority markability: some optimal marking sequence has the chosen
/// border letter(s) marked at every stage with `loc(w)` blocks.
///
/// Only defined for strictly `loc(w)`-local words; other inputs are rejected.
pub fn border_priority(w: &Word, side: Border) -> Result<bool> {
    let (first, last) = match (w.first(), w.last()) {
        (Some(a), Some(b)) => (a, b),
        _ => {
            return Err(Error::Precondition(
                "border priority needs a nonempty word".into(),
            ))
        }
    };
    let all = traces(w)?;
    let k = optimum(&all);
    let optimal: Vec<_> = all
        .iter()
        .filter(|(_, c)| c.iter().copied().max().unwrap_or(0) == k)
        .collect();
    if !optimal.iter().all(|(_, c)| c.contains(&k)) {
        return Err(Error::Precondition(format!(
            "word is not strictly {k}-local"
        )));
    }
    let required: Vec<Symbol> = match side {
        Border::Left => vec![first],
        Border::Right => vec![last],
        Border::Both => vec![first, last],
    };
    Ok(optimal.iter().any(|(order, counts)| {
        let mut marked_at = vec![0usize; w.alphabet_size()];
        for (stage, s) in order.iter().enumerate() {
            marked_at[s.0] = stage;
        }
        counts
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == k)
            .all(|(stage, _)| required.iter().all(|r| marked_at[r.0] <= stage))
    }))
}

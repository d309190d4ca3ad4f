//! Word families with known locality.

use super::Word;
use crate::error::{check_cap, Error, Result};

/// Largest Zimin order produced; `Z_20` already has about a million letters.
pub const ZIMIN_MAX_ORDER: usize = 20;

/// The Zimin word `Z_i`: `Z_1 = x_1`, `Z_{i+1} = Z_i x_{i+1} Z_i`.
pub fn zimin(i: usize) -> Result<Word> {
    if i == 0 {
        return Err(Error::Precondition("zimin order must be at least 1".into()));
    }
    check_cap("zimin order", i, ZIMIN_MAX_ORDER)?;
    // Position p (1-based) of Z_i carries x_{1 + trailing zeros of p}.
    let len = (1usize << i) - 1;
    Word::new((1..=len).map(|p| p.trailing_zeros() as usize))
}

/// `(x_1 x_2 … x_n x_{n-1} … x_2)^k x_1`: 1-local per period, locality `k`,
/// while its position graph needs pathwidth `2k`.
pub fn tightness_alpha(n: usize, k: usize) -> Result<Word> {
    if n < 3 || k < 1 {
        return Err(Error::Precondition(format!(
            "tightness word needs n >= 3 and k >= 1, got n = {n}, k = {k}"
        )));
    }
    let period: Vec<usize> = (0..n).chain((1..n - 1).rev()).collect();
    Word::new(
        period
            .iter()
            .copied()
            .cycle()
            .take(period.len() * k)
            .chain([0]),
    )
}

/// `(x_1 x_2)^k`: locality and position-graph pathwidth both equal `k`.
pub fn tightness_beta(k: usize) -> Result<Word> {
    if k < 1 {
        return Err(Error::Precondition("tightness word needs k >= 1".into()));
    }
    Word::new([0, 1].iter().copied().cycle().take(2 * k))
}

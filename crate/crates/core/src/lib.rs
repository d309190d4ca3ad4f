//! Exact locality number of words, exact cutwidth and pathwidth of small
//! graphs, and the constructive reductions that connect the three parameters.
//!
//! The locality number of a word is the smallest peak number of marked blocks
//! reachable by marking its letters one at a time. [`reductions`] turns words
//! into graphs whose cutwidth or pathwidth tracks that number, turns graphs
//! back into words, and translates certificates across each construction.

pub mod error;
pub mod graphs;
pub mod greedy;
pub mod hardness;
pub mod reductions;
pub mod words;

pub use error::{Error, Result};

//! Interning external tokens into dense symbol ids.

use std::collections::HashMap;

use super::{MarkingSequence, Symbol, Word};
use crate::error::{Error, Result};

/// How a line of text is split into symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordMode {
    /// One symbol per character.
    Chars,
    /// Whitespace-separated tokens.
    Tokens,
}

impl WordMode {
    /// Token mode if the text contains whitespace, character mode otherwise.
    pub fn detect(text: &str) -> WordMode {
        if text.trim().contains(char::is_whitespace) {
            WordMode::Tokens
        } else {
            WordMode::Chars
        }
    }

    fn split(self, text: &str) -> Vec<String> {
        match self {
            WordMode::Chars => text.trim().chars().map(String::from).collect(),
            WordMode::Tokens => text.split_whitespace().map(String::from).collect(),
        }
    }
}

/// Bidirectional map between external names and dense symbol ids, assigned in
/// order of first occurrence.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymbolTable {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl SymbolTable {
    pub fn new() -> SymbolTable {
        SymbolTable::default()
    }

    /// A table naming ids `0..n` as given.
    pub fn from_names<I: IntoIterator<Item = String>>(names: I) -> Result<SymbolTable> {
        let mut table = SymbolTable::new();
        for name in names {
            if table.index.contains_key(&name) {
                return Err(Error::Parse(format!("duplicate symbol name {name:?}")));
            }
            table.intern(&name);
        }
        Ok(table)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn intern(&mut self, name: &str) -> Symbol {
        if let Some(&id) = self.index.get(name) {
            return Symbol(id);
        }
        let id = self.names.len();
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), id);
        Symbol(id)
    }

    pub fn lookup(&self, name: &str) -> Option<Symbol> {
        self.index.get(name).map(|&id| Symbol(id))
    }

    pub fn name(&self, s: Symbol) -> &str {
        &self.names[s.0]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Parses a word, building a fresh table.
    pub fn parse_word(text: &str, mode: WordMode) -> Result<(Word, SymbolTable)> {
        let mut table = SymbolTable::new();
        let ids: Vec<usize> = mode.split(text).iter().map(|t| table.intern(t).0).collect();
        Ok((Word::new(ids)?, table))
    }

    /// Parses a marking sequence against the names already in the table.
    pub fn parse_sequence(&self, text: &str, mode: WordMode) -> Result<MarkingSequence> {
        mode.split(text)
            .iter()
            .map(|t| {
                self.lookup(t)
                    .ok_or_else(|| Error::Parse(format!("unknown symbol {t:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(MarkingSequence)
    }

    fn join<'a>(&self, syms: impl Iterator<Item = &'a Symbol>, mode: WordMode) -> String {
        let parts: Vec<&str> = syms.map(|&s| self.name(s)).collect();
        match mode {
            WordMode::Chars => parts.concat(),
            WordMode::Tokens => parts.join(" "),
        }
    }

    pub fn format_word(&self, w: &Word, mode: WordMode) -> String {
        self.join(w.symbols().iter(), mode)
    }

    pub fn format_sequence(&self, s: &MarkingSequence, mode: WordMode) -> String {
        self.join(s.symbols().iter(), mode)
    }

    /// Character mode is lossless only when every name is a single character.
    pub fn preferred_mode(&self) -> WordMode {
        if self.names.iter().all(|n| n.chars().count() == 1) {
            WordMode::Chars
        } else {
            WordMode::Tokens
        }
    }
}

//! Text forms of certificates.
//!
//! A marking sequence is one line of symbols, an arrangement one line of
//! vertices, and a path decomposition one bag per line (`-` for an empty bag).
//! Vertices may be given by label or by 0-based id.

use anyhow::{anyhow, bail, Result};
use locality::graphs::{LinearArrangement, MultiGraph, PathDecomposition};

pub fn vertex_name(g: &MultiGraph, v: usize) -> String {
    g.label(v)
}

pub fn resolve_vertex(g: &MultiGraph, tok: &str) -> Result<usize> {
    if let Some(v) = g.vertex_by_label(tok) {
        return Ok(v);
    }
    match tok.parse::<usize>() {
        Ok(v) if v < g.n() => Ok(v),
        _ => Err(anyhow!(locality::Error::Parse(format!(
            "unknown vertex {tok:?}"
        )))),
    }
}

pub fn format_arrangement(g: &MultiGraph, l: &LinearArrangement) -> String {
    l.order()
        .iter()
        .map(|&v| vertex_name(g, v))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn parse_arrangement(g: &MultiGraph, text: &str) -> Result<LinearArrangement> {
    let order = text
        .split_whitespace()
        .map(|t| resolve_vertex(g, t))
        .collect::<Result<Vec<_>>>()?;
    let l = LinearArrangement(order);
    l.validate(g.n())?;
    Ok(l)
}

pub fn format_decomposition(g: &MultiGraph, q: &PathDecomposition) -> String {
    q.bags
        .iter()
        .map(|bag| {
            if bag.is_empty() {
                "-".to_string()
            } else {
                bag.iter()
                    .map(|&v| vertex_name(g, v))
                    .collect::<Vec<_>>()
                    .join(" ")
            }
        })
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn parse_decomposition(g: &MultiGraph, text: &str) -> Result<PathDecomposition> {
    let mut bags = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() || line == "-" {
            bags.push(Vec::new());
            continue;
        }
        bags.push(
            line.split_whitespace()
                .map(|t| resolve_vertex(g, t))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    if bags.is_empty() && g.n() > 0 {
        bail!(locality::Error::Parse(
            "the decomposition has no bags".into()
        ));
    }
    Ok(PathDecomposition::new(bags))
}

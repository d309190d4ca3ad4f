//! Plain-text graph format.
//!
//! ```text
//! n m [multi|simple]
//! u v        (m lines, 0-based, parallel edges repeated)
//! # label i name
//! ```
//! Other `#` lines and blank lines are ignored.

use super::MultiGraph;
use crate::error::{Error, Result};

fn parse_usize(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| {
        Error::Parse(format!(
            "line {line}: expected a non-negative integer, got {tok:?}"
        ))
    })
}

pub fn parse_graph(text: &str) -> Result<MultiGraph> {
    let mut header: Option<(usize, usize, bool)> = None;
    let mut edges = Vec::new();
    let mut labels: Vec<(usize, String)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let mut parts = comment.trim().splitn(3, char::is_whitespace);
            if parts.next() == Some("label") {
                let id = parse_usize(parts.next().unwrap_or(""), lineno)?;
                let name = parts.next().unwrap_or("").trim().to_string();
                if name.is_empty() {
                    return Err(Error::Parse(format!("line {lineno}: label without a name")));
                }
                labels.push((id, name));
            }
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match header {
            None => {
                if toks.len() < 2 || toks.len() > 3 {
                    return Err(Error::Parse(format!(
                        "line {lineno}: header must be `n m [multi|simple]`"
                    )));
                }
                let simple = match toks.get(2) {
                    None | Some(&"multi") => false,
                    Some(&"simple") => true,
                    Some(other) => {
                        return Err(Error::Parse(format!(
                            "line {lineno}: unknown graph kind {other:?}"
                        )))
                    }
                };
                header = Some((
                    parse_usize(toks[0], lineno)?,
                    parse_usize(toks[1], lineno)?,
                    simple,
                ));
            }
            Some(_) => {
                if toks.len() != 2 {
                    return Err(Error::Parse(format!("line {lineno}: edge must be `u v`")));
                }
                edges.push((parse_usize(toks[0], lineno)?, parse_usize(toks[1], lineno)?));
            }
        }
    }
    let (n, m, simple) = header.ok_or_else(|| Error::Parse("missing header line".into()))?;
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "header announces {m} edges, found {}",
            edges.len()
        )));
    }
    let to_parse = |e: Error| Error::Parse(e.to_string());
    let g = if simple {
        MultiGraph::new_simple(n, edges).map_err(to_parse)?
    } else {
        MultiGraph::new(n, edges).map_err(to_parse)?
    };
    if labels.is_empty() {
        return Ok(g);
    }
    let mut names: Vec<String> = (0..n).map(|v| v.to_string()).collect();
    for (id, name) in labels {
        if id >= n {
            return Err(Error::Parse(format!(
                "label for vertex {id}, graph has {n} vertices"
            )));
        }
        names[id] = name;
    }
    g.with_labels(names).map_err(to_parse)
}

pub fn format_graph(g: &MultiGraph) -> String {
    let kind = if g.is_simple() { "simple" } else { "multi" };
    let mut out = format!("{} {} {}\n", g.n(), g.edge_count(), kind);
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    if let Some(labels) = g.labels() {
        for (i, name) in labels.iter().enumerate() {
            out.push_str(&format!("# label {i} {name}\n"));
        }
    }
    out
}

//! Path decomposition validity and the nice normal form.

use std::fmt;

use super::{MultiGraph, PathDecomposition};
use crate::error::{Error, Result};

/// The first way in which a bag sequence fails to decompose a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    VertexOutOfRange { bag: usize, vertex: usize },
    VertexMissing(usize),
    EdgeUncovered(usize, usize),
    VertexInterrupted(usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexOutOfRange { bag, vertex } => {
                write!(
                    f,
                    "bag {bag} contains vertex {vertex}, which is out of range"
                )
            }
            Violation::VertexMissing(v) => write!(f, "vertex {v} is in no bag"),
            Violation::EdgeUncovered(u, v) => write!(f, "edge ({u}, {v}) is in no bag"),
            Violation::VertexInterrupted(v) => {
                write!(f, "bags containing vertex {v} are not consecutive")
            }
        }
    }
}

/// Interval `(first, last)` of bag indices per vertex, if the bags are
/// contiguous for every vertex.
fn intervals(
    n: usize,
    q: &PathDecomposition,
) -> std::result::Result<Vec<Option<(usize, usize)>>, Violation> {
    let mut span: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut count = vec![0usize; n];
    for (i, bag) in q.bags.iter().enumerate() {
        for &v in bag {
            if v >= n {
                return Err(Violation::VertexOutOfRange { bag: i, vertex: v });
            }
            count[v] += 1;
            span[v] = Some(match span[v] {
                None => (i, i),
                Some((a, _)) => (a, i),
            });
        }
    }
    for v in 0..n {
        if let Some((a, b)) = span[v] {
            if b - a + 1 != count[v] {
                return Err(Violation::VertexInterrupted(v));
            }
        }
    }
    Ok(span)
}

/// Checks the cover and connectivity properties and that every vertex occurs.
pub fn check_path_decomposition(
    g: &MultiGraph,
    q: &PathDecomposition,
) -> std::result::Result<(), Violation> {
    let span = intervals(g.n(), q)?;
    if let Some(v) = span.iter().position(Option::is_none) {
        return Err(Violation::VertexMissing(v));
    }
    for &(u, v) in g.edges() {
        let (a, b) = (span[u].unwrap(), span[v].unwrap());
        if a.0.max(b.0) > a.1.min(b.1) {
            return Err(Violation::EdgeUncovered(u, v));
        }
    }
    Ok(())
}

pub fn is_valid_path_decomposition(g: &MultiGraph, q: &PathDecomposition) -> bool {
    check_path_decomposition(g, q).is_ok()
}

/// Rewrites `q` so that it starts and ends empty and each step adds or
/// removes one vertex. Before each original bag, departing vertices are
/// removed first, then arriving ones added, both in increasing id order.
pub fn make_nice(q: &PathDecomposition) -> Result<PathDecomposition> {
    let n = q.bags.iter().flatten().map(|&v| v + 1).max().unwrap_or(0);
    intervals(n, q).map_err(|v| Error::InvalidCertificate(v.to_string()))?;
    let mut current: Vec<usize> = Vec::new();
    let mut out = vec![Vec::new()];
    let mut target_bags = q.bags.clone();
    target_bags.push(Vec::new());
    for target in &target_bags {
        let leaving: Vec<usize> = current
            .iter()
            .copied()
            .filter(|v| !target.contains(v))
            .collect();
        for v in leaving {
            current.retain(|&u| u != v);
            out.push(current.clone());
        }
        for &v in target {
            if !current.contains(&v) {
                current.push(v);
                current.sort_unstable();
                out.push(current.clone());
            }
        }
    }
    Ok(PathDecomposition { bags: out })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pd(bags: &[&[usize]]) -> PathDecomposition {
        PathDecomposition::new(bags.iter().map(|b| b.to_vec()).collect())
    }

    #[test]
    fn validity_examples() {
        let k2 = MultiGraph::new(2, [(0, 1)]).unwrap();
        assert!(is_valid_path_decomposition(&k2, &pd(&[&[0, 1]])));
        assert_eq!(
            check_path_decomposition(&k2, &pd(&[&[0], &[1]])),
            Err(Violation::EdgeUncovered(0, 1))
        );
        let p3 = MultiGraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            check_path_decomposition(&p3, &pd(&[&[0, 1], &[2], &[1, 2]])),
            Err(Violation::VertexInterrupted(1))
        );
        assert_eq!(
            check_path_decomposition(&p3, &pd(&[&[0, 1]])),
            Err(Violation::VertexMissing(2))
        );
    }

    #[test]
    fn make_nice_single_bag() {
        let nice = make_nice(&pd(&[&[0, 1]])).unwrap();
        assert_eq!(nice, pd(&[&[], &[0], &[0, 1], &[1], &[]]));
        assert!(nice.is_nice());
    }

    #[test]
    fn make_nice_is_idempotent() {
        let q = pd(&[&[0, 1, 2], &[2, 3], &[3, 4]]);
        let once = make_nice(&q).unwrap();
        assert_eq!(once.width(), q.width());
        assert_eq!(make_nice(&once).unwrap(), once);
        assert!(make_nice(&pd(&[&[0], &[1], &[0]])).is_err());
    }
}

//! Plain-text graph format.
//!
//! ```text
//! # comment lines start with '#'
//! n m
//! u v      (m lines, 0 <= u < v < n)
//! ```
//!
//! The writer emits no comments and sorts edges lexicographically, so a
//! parse/write cycle reproduces a writer-produced file byte for byte.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

/// Non-blank, non-comment lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_fields<const N: usize>(line: usize, s: &str) -> Result<[usize; N]> {
    let mut out = [0usize; N];
    let mut fields = s.split_whitespace();
    for slot in out.iter_mut() {
        let tok = fields.next().ok_or_else(|| Error::Parse {
            line,
            msg: format!("expected {N} integers"),
        })?;
        *slot = tok.parse().map_err(|_| Error::Parse {
            line,
            msg: format!("`{tok}` is not a non-negative integer"),
        })?;
    }
    if fields.next().is_some() {
        return Err(Error::Parse {
            line,
            msg: format!("expected exactly {N} integers"),
        });
    }
    Ok(out)
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        msg: "missing `n m` header".into(),
    })?;
    let [n, m] = parse_fields::<2>(hl, header)?;
    let mut edges = BTreeSet::new();
    for (line, s) in lines {
        let [u, v] = parse_fields::<2>(line, s)?;
        if !(u < v && v < n) {
            return Err(Error::Parse {
                line,
                msg: format!("edge ({u}, {v}) must satisfy 0 <= u < v < {n}"),
            });
        }
        if !edges.insert((u, v)) {
            return Err(Error::Parse {
                line,
                msg: format!("duplicate edge ({u}, {v})"),
            });
        }
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: hl,
            msg: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edges(n, edges)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// One vertex id per line; ids must be `< n`. Returned sorted and
/// deduplicated.
pub fn parse_vertex_set(text: &str, n: usize) -> Result<Vec<usize>> {
    let mut set = BTreeSet::new();
    for (line, s) in content_lines(text) {
        let [v] = parse_fields::<1>(line, s)?;
        if v >= n {
            return Err(Error::Parse {
                line,
                msg: format!("vertex {v} out of range for n = {n}"),
            });
        }
        set.insert(v);
    }
    Ok(set.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_graph("# a 4-cycle\n4 4\n0 1\n1 2\n2 3\n# trailing\n0 3\n").unwrap();
        assert_eq!(g, Graph::cycle(4));
    }

    #[test]
    fn writer_sorts_edges() {
        let g = Graph::from_edges(3, [(2, 1), (0, 2)]).unwrap();
        assert_eq!(write_graph(&g), "3 2\n0 2\n1 2\n");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_graph("").is_err());
        assert!(parse_graph("3 1\n1 0\n").is_err());
        assert!(parse_graph("3 1\n0 3\n").is_err());
        assert!(parse_graph("3 2\n0 1\n0 1\n").is_err());
        assert!(parse_graph("3 2\n0 1\n").is_err());
        assert!(parse_graph("3 1\n0 x\n").is_err());
        assert!(parse_graph("3 1\n0 1 2\n").is_err());
    }

    #[test]
    fn vertex_sets() {
        assert_eq!(parse_vertex_set("3\n# c\n1\n3\n", 4).unwrap(), vec![1, 3]);
        assert!(parse_vertex_set("4\n", 4).is_err());
    }
}

//! Finite posets and the adjacency poset of a graph.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::io::{content_lines, parse_fields};
use crate::graph::Graph;

/// A finite poset on `0..size`, stored as its strict relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    size: usize,
    less: Vec<bool>,
}

impl Poset {
    /// Builds a poset from strict relations `(a, b)` meaning `a < b`. The
    /// relation must already be transitive; reflexive and symmetric pairs
    /// are rejected.
    pub fn from_strict(size: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut less = vec![false; size * size];
        for (a, b) in pairs {
            if a >= size || b >= size || a == b {
                return Err(Error::InvalidParams(format!("bad relation {a} < {b} on {size} elements")));
            }
            less[a * size + b] = true;
        }
        let p = Poset { size, less };
        for a in 0..size {
            for b in 0..size {
                if p.less(a, b) && p.less(b, a) {
                    return Err(Error::InvalidParams(format!("{a} and {b} are mutually below each other")));
                }
                if p.less(a, b) {
                    if let Some(c) = (0..size).find(|&c| p.less(b, c) && !p.less(a, c)) {
                        return Err(Error::InvalidParams(format!("not transitive: {a} < {b} < {c}")));
                    }
                }
            }
        }
        Ok(p)
    }

    pub fn chain(size: usize) -> Self {
        let pairs = (0..size).flat_map(|a| (a + 1..size).map(move |b| (a, b)));
        Poset::from_strict(size, pairs).expect("a chain is a poset")
    }

    pub fn antichain(size: usize) -> Self {
        Poset {
            size,
            less: vec![false; size * size],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn less(&self, a: usize, b: usize) -> bool {
        self.less[a * self.size + b]
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        a == b || self.less(a, b) || self.less(b, a)
    }

    /// Strict relations `(a, b)`, lexicographically ordered.
    pub fn relations(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.size).flat_map(move |a| (0..self.size).filter(move |&b| self.less(a, b)).map(move |b| (a, b)))
    }

    /// Number of elements in a longest chain.
    pub fn height(&self) -> usize {
        let mut longest = vec![1usize; self.size];
        // Repeated relaxation; sizes are small.
        for _ in 0..self.size {
            for (a, b) in self.relations() {
                longest[b] = longest[b].max(longest[a] + 1);
            }
        }
        longest.into_iter().max().unwrap_or(0)
    }

    /// Whether the linear order `order` (lowest first) extends the poset.
    pub fn is_linear_extension(&self, order: &[usize]) -> bool {
        let mut pos = vec![usize::MAX; self.size];
        for (i, &x) in order.iter().enumerate() {
            if x >= self.size || pos[x] != usize::MAX {
                return false;
            }
            pos[x] = i;
        }
        order.len() == self.size && self.relations().all(|(a, b)| pos[a] < pos[b])
    }
}

/// Adjacency poset of a graph on `n` vertices: elements `0..n` are `V`,
/// `n..2n` are the copy `V'`, and `u < v'` exactly when `u` and `v` are
/// adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyPoset {
    n: usize,
    poset: Poset,
}

impl AdjacencyPoset {
    pub fn graph_order(&self) -> usize {
        self.n
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }
}

pub fn adjacency_poset(g: &Graph) -> AdjacencyPoset {
    let n = g.n();
    let pairs = g.edges().flat_map(|(u, v)| [(u, n + v), (v, n + u)]);
    let poset = Poset::from_strict(2 * n, pairs).expect("height-2 relations are transitive");
    debug_assert!(poset.height() <= 2);
    AdjacencyPoset { n, poset }
}

/// `2 * box_dims + chi + 4`, an upper bound on the adjacency poset's
/// dimension whenever `box_dims` is the size of some box representation.
pub fn poset_dim_upper(box_dims: usize, chi: usize) -> Result<usize> {
    if box_dims < 1 || chi < 1 {
        return Err(Error::InvalidParams(format!(
            "need box_dims >= 1 and chi >= 1, got {box_dims} and {chi}"
        )));
    }
    Ok(2 * box_dims + chi + 4)
}

/// `poset N` followed by one `a b` line per strict relation `a < b`.
pub fn write_poset(p: &Poset) -> String {
    let mut out = format!("poset {}\n", p.size());
    for (a, b) in p.relations() {
        writeln!(out, "{a} {b}").unwrap();
    }
    out
}

pub fn parse_poset(text: &str) -> Result<Poset> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        msg: "missing `poset N` header".into(),
    })?;
    let size = header
        .strip_prefix("poset")
        .ok_or_else(|| Error::Parse {
            line: hl,
            msg: "expected `poset N`".into(),
        })
        .and_then(|rest| parse_fields::<1>(hl, rest))?[0];
    let pairs = lines
        .map(|(line, s)| parse_fields::<2>(line, s).map(|[a, b]| (a, b)))
        .collect::<Result<Vec<_>>>()?;
    Poset::from_strict(size, pairs)
}

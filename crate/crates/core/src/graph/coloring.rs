//! Exact colorings for desk-scale graphs.
//!
//! Both searches are plain backtracking with explicit size guards; they
//! exist to produce inputs for the constructions, not to scale.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::io::{content_lines, parse_fields};
use super::{DisjointSets, Graph};
use crate::error::{Error, Result};

pub const CHROMATIC_LIMIT: usize = 20;
pub const ACYCLIC_LIMIT: usize = 16;

/// Vertex coloring with color ids `0..k`, every id used at least once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

impl Coloring {
    /// Compacts arbitrary color labels to `0..k` preserving their relative
    /// order.
    pub fn new(labels: Vec<usize>) -> Self {
        let mut rank: BTreeMap<usize, usize> = labels.iter().map(|&c| (c, 0)).collect();
        for (i, r) in rank.values_mut().enumerate() {
            *r = i;
        }
        let k = rank.len();
        let colors = labels.into_iter().map(|c| rank[&c]).collect();
        Coloring { colors, k }
    }

    pub fn identity(n: usize) -> Self {
        Coloring::new((0..n).collect())
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn class(&self, c: usize) -> Vec<usize> {
        (0..self.colors.len())
            .filter(|&v| self.colors[v] == c)
            .collect()
    }

    /// Restriction to `vertices` (local vertex `i` is `vertices[i]`).
    pub fn restrict(&self, vertices: &[usize]) -> Coloring {
        Coloring::new(vertices.iter().map(|&v| self.colors[v]).collect())
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n() && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }

    /// Proper, and every pair of color classes induces a forest.
    pub fn is_acyclic(&self, g: &Graph) -> bool {
        if !self.is_proper(g) {
            return false;
        }
        for a in 0..self.k {
            for b in a + 1..self.k {
                let mut dsu = DisjointSets::new(g.n());
                let in_pair = |v: usize| self.colors[v] == a || self.colors[v] == b;
                for (u, v) in g.edges() {
                    if in_pair(u) && in_pair(v) && !dsu.union(u, v) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Explains why the coloring is not acyclic for `g`, or `Ok(())`.
    pub fn validate_acyclic(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.n() {
            return Err(Error::InvalidColoring(format!(
                "coloring covers {} vertices, graph has {}",
                self.colors.len(),
                g.n()
            )));
        }
        if let Some((u, v)) = g.edges().find(|&(u, v)| self.colors[u] == self.colors[v]) {
            return Err(Error::InvalidColoring(format!(
                "adjacent vertices {u} and {v} share color {}",
                self.colors[u]
            )));
        }
        if !self.is_acyclic(g) {
            return Err(Error::InvalidColoring(
                "some pair of color classes induces a cycle".into(),
            ));
        }
        Ok(())
    }
}

/// Coloring file: one `v color` pair per line, `#` comments allowed. Every
/// vertex in `0..n` must be listed exactly once.
pub fn parse_coloring(text: &str, n: usize) -> Result<Coloring> {
    let mut labels = vec![None; n];
    for (line, s) in content_lines(text) {
        let [v, c] = parse_fields::<2>(line, s)?;
        if v >= n {
            return Err(Error::Parse {
                line,
                msg: format!("vertex {v} out of range for n = {n}"),
            });
        }
        if labels[v].replace(c).is_some() {
            return Err(Error::Parse {
                line,
                msg: format!("vertex {v} colored twice"),
            });
        }
    }
    let labels = labels
        .into_iter()
        .enumerate()
        .map(|(v, c)| c.ok_or_else(|| Error::InvalidColoring(format!("vertex {v} has no color"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Coloring::new(labels))
}

pub fn write_coloring(c: &Coloring) -> String {
    let mut out = String::new();
    for (v, col) in c.colors.iter().enumerate() {
        writeln!(out, "{v} {col}").unwrap();
    }
    out
}

fn check_limit(what: &'static str, actual: usize, limit: usize) -> Result<()> {
    if actual > limit {
        Err(Error::SizeLimitExceeded {
            what,
            actual,
            limit,
        })
    } else {
        Ok(())
    }
}

fn max_clique_size(g: &Graph) -> usize {
    fn grow(g: &Graph, clique: usize, candidates: &[usize], best: &mut usize) {
        *best = (*best).max(clique);
        if clique + candidates.len() <= *best {
            return;
        }
        for (i, &v) in candidates.iter().enumerate() {
            let next: Vec<usize> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&w| g.has_edge(v, w))
                .collect();
            grow(g, clique + 1, &next, best);
        }
    }
    let mut best = 0;
    let all: Vec<usize> = (0..g.n()).collect();
    grow(g, 0, &all, &mut best);
    best
}

fn colorable(g: &Graph, order: &[usize], k: usize, colors: &mut [usize], idx: usize, used: usize) -> bool {
    if idx == order.len() {
        return true;
    }
    let v = order[idx];
    for c in 0..(used + 1).min(k) {
        if g.neighbors(v).iter().all(|&w| colors[w] != c) {
            colors[v] = c;
            if colorable(g, order, k, colors, idx + 1, used.max(c + 1)) {
                return true;
            }
            colors[v] = usize::MAX;
        }
    }
    false
}

/// Exact chromatic number by backtracking, starting from the clique number.
pub fn chromatic_number(g: &Graph, limit: usize) -> Result<usize> {
    check_limit("vertex count", g.n(), limit)?;
    if g.n() == 0 {
        return Ok(0);
    }
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut k = max_clique_size(g).max(1);
    loop {
        let mut colors = vec![usize::MAX; g.n()];
        if colorable(g, &order, k, &mut colors, 0, 0) {
            return Ok(k);
        }
        k += 1;
    }
}

struct AcyclicSearch<'a> {
    g: &'a Graph,
    k_max: usize,
    colors: Vec<usize>,
}

impl AcyclicSearch<'_> {
    /// Whether coloring `v` with `a` keeps every two-color subgraph among
    /// vertices `0..=v` a forest and the coloring proper.
    fn fits(&self, v: usize, a: usize) -> bool {
        let nbrs = self.g.neighbors(v);
        if nbrs.iter().any(|&w| w < v && self.colors[w] == a) {
            return false;
        }
        for b in 0..self.k_max {
            if b == a {
                continue;
            }
            let hits: Vec<usize> = nbrs
                .iter()
                .copied()
                .filter(|&w| w < v && self.colors[w] == b)
                .collect();
            if hits.len() < 2 {
                continue;
            }
            let mut dsu = DisjointSets::new(v);
            for (x, y) in self.g.edges() {
                if y < v {
                    let (cx, cy) = (self.colors[x], self.colors[y]);
                    if (cx == a && cy == b) || (cx == b && cy == a) {
                        dsu.union(x, y);
                    }
                }
            }
            let mut roots: Vec<usize> = hits.iter().map(|&w| dsu.find(w)).collect();
            roots.sort_unstable();
            if roots.windows(2).any(|w| w[0] == w[1]) {
                return false;
            }
        }
        true
    }

    fn search(&mut self, v: usize, used: usize) -> bool {
        if v == self.g.n() {
            return true;
        }
        for a in 0..(used + 1).min(self.k_max) {
            if self.fits(v, a) {
                self.colors[v] = a;
                if self.search(v + 1, used.max(a + 1)) {
                    return true;
                }
                self.colors[v] = usize::MAX;
            }
        }
        false
    }
}

/// An acyclic coloring with at most `k_max` colors, if one exists.
pub fn acyclic_coloring(g: &Graph, k_max: usize, limit: usize) -> Result<Option<Coloring>> {
    check_limit("vertex count", g.n(), limit)?;
    let mut s = AcyclicSearch {
        g,
        k_max,
        colors: vec![usize::MAX; g.n()],
    };
    Ok(s.search(0, 0).then(|| Coloring::new(s.colors)))
}

/// Acyclic coloring with the fewest colors.
pub fn min_acyclic_coloring(g: &Graph, limit: usize) -> Result<Coloring> {
    check_limit("vertex count", g.n(), limit)?;
    for k in 1..=g.n().max(1) {
        if let Some(c) = acyclic_coloring(g, k, limit)? {
            return Ok(c);
        }
    }
    Ok(Coloring::new(Vec::new()))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Tries every assignment of `k` colors; independent of the search.
    fn brute_acyclic_exists(g: &Graph, k: usize) -> bool {
        let n = g.n();
        let total = k.pow(n as u32);
        (0..total).any(|mut code| {
            let labels: Vec<usize> = (0..n)
                .map(|_| {
                    let c = code % k;
                    code /= k;
                    c
                })
                .collect();
            Coloring::new(labels).is_acyclic(g)
        })
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&Graph::complete(4), CHROMATIC_LIMIT).unwrap(), 4);
        assert_eq!(chromatic_number(&Graph::cycle(5), CHROMATIC_LIMIT).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::petersen(), CHROMATIC_LIMIT).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::empty(3), CHROMATIC_LIMIT).unwrap(), 1);
        assert!(matches!(
            chromatic_number(&Graph::empty(21), CHROMATIC_LIMIT),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }

    #[test]
    fn acyclic_examples() {
        let p4 = Graph::path(4);
        let c = acyclic_coloring(&p4, 2, ACYCLIC_LIMIT).unwrap().unwrap();
        assert!(c.is_acyclic(&p4));
        assert_eq!(c.k(), 2);

        assert!(acyclic_coloring(&Graph::cycle(4), 2, ACYCLIC_LIMIT)
            .unwrap()
            .is_none());
        assert!(!brute_acyclic_exists(&Graph::cycle(4), 2));

        let k4 = Graph::complete(4);
        assert_eq!(
            acyclic_coloring(&k4, 4, ACYCLIC_LIMIT).unwrap().unwrap(),
            Coloring::identity(4)
        );
        assert!(acyclic_coloring(&Graph::empty(17), 3, ACYCLIC_LIMIT).is_err());
    }

    #[test]
    fn acyclic_search_matches_brute_force() {
        let graphs = [
            Graph::cycle(5),
            Graph::cycle(6),
            Graph::complete_bipartite(2, 3),
            Graph::complete_bipartite(3, 3),
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap(),
        ];
        for g in &graphs {
            for k in 1..=4 {
                let found = acyclic_coloring(g, k, ACYCLIC_LIMIT).unwrap();
                assert_eq!(found.is_some(), brute_acyclic_exists(g, k), "{g:?} k={k}");
                if let Some(c) = found {
                    assert!(c.is_acyclic(g));
                }
            }
        }
    }

    #[test]
    fn coloring_compaction_and_io() {
        let c = Coloring::new(vec![7, 3, 7, 9]);
        assert_eq!(c.colors(), &[1, 0, 1, 2]);
        assert_eq!(c.k(), 3);
        let text = write_coloring(&c);
        assert_eq!(parse_coloring(&text, 4).unwrap(), c);
        assert!(parse_coloring("0 1\n", 2).is_err());
        assert!(parse_coloring("0 1\n0 2\n1 1\n", 2).is_err());
    }

    #[test]
    fn validate_reports_reason() {
        let c4 = Graph::cycle(4);
        let bad = Coloring::new(vec![0, 1, 0, 1]);
        assert!(bad.is_proper(&c4));
        assert!(matches!(bad.validate_acyclic(&c4), Err(Error::InvalidColoring(_))));
        assert!(Coloring::new(vec![0, 1, 0, 2]).validate_acyclic(&c4).is_ok());
    }
}

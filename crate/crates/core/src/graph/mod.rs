//! Undirected simple graphs on vertices `0..n` and the structural routines
//! the constructions are built from: orderings, peeling, colorings,
//! quotients and seeded generators.

mod coloring;
pub(crate) mod generate;
pub(crate) mod io;
pub(crate) mod order;
mod quotient;

pub use coloring::{
    acyclic_coloring, chromatic_number, min_acyclic_coloring, parse_coloring, write_coloring, Coloring,
    ACYCLIC_LIMIT, CHROMATIC_LIMIT,
};
pub use generate::{euler_genus_upper, generate, Model, PRNG_NAME};
pub use io::{parse_graph, parse_vertex_set, write_graph};
pub use order::{degeneracy_order, forward_degeneracy, peel, PeelResult, Threshold};
pub use quotient::{assert_k3k, quotient_by_a_neighborhood, K3kReport, QuotientResult};

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// An undirected simple graph with vertex ids `0..n`.
///
/// Adjacency is stored twice: sorted neighbor lists for iteration and a
/// dense matrix for constant-time lookups. All graphs handled by the toolkit
/// are desk-sized, so the quadratic matrix is never the bottleneck.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<usize>>,
    matrix: Vec<bool>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            m: 0,
            adj: vec![Vec::new(); n],
            matrix: vec![false; n * n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse; self-loops and out-of-range endpoints are
    /// rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            g.add_edge_unchecked(u, v);
        }
        g.sort_adjacency();
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge_unchecked(u, v);
            }
        }
        g.sort_adjacency();
        g
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star edges are valid")
    }

    /// Complete bipartite graph with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Graph::from_edges(a + b, edges).expect("bipartite edges are valid")
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edges(10, edges).expect("petersen edges are valid")
    }

    fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        if self.matrix[u * self.n + v] {
            return;
        }
        self.matrix[u * self.n + v] = true;
        self.matrix[v * self.n + u] = true;
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.m += 1;
    }

    fn sort_adjacency(&mut self) {
        for list in &mut self.adj {
            list.sort_unstable();
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.matrix[u * self.n + v]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Non-adjacent pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n)
                .filter(move |&v| !self.has_edge(u, v))
                .map(move |v| (u, v))
        })
    }

    pub fn non_edge_count(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2 - self.m
    }

    /// Subgraph induced on `vertices`; local vertex `i` is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut g = Graph::empty(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = local[w];
                if j != usize::MAX && i < j {
                    g.add_edge_unchecked(i, j);
                }
            }
        }
        g.sort_adjacency();
        g
    }

    /// Same vertex set with every edge between two members of `set` removed.
    pub fn without_edges_inside(&self, set: &[usize]) -> Graph {
        let member = self.membership(set);
        Graph::from_edges(self.n, self.edges().filter(|&(u, v)| !(member[u] && member[v])))
            .expect("subgraph of a valid graph")
    }

    /// Same vertex set with every pair of members of `set` made adjacent.
    pub fn with_clique_on(&self, set: &[usize]) -> Graph {
        let mut g = self.clone();
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                g.add_edge_unchecked(u, v);
            }
        }
        g.sort_adjacency();
        g
    }

    /// Same vertex set with each member of `set` made adjacent to every
    /// other vertex.
    pub fn with_universal(&self, set: &[usize]) -> Graph {
        let mut g = self.clone();
        for &u in set {
            for v in 0..self.n {
                if v != u {
                    g.add_edge_unchecked(u, v);
                }
            }
        }
        g.sort_adjacency();
        g
    }

    /// Applies the vertex permutation `perm` (old id `v` becomes `perm[v]`).
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        Graph::from_edges(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
            .expect("relabeling preserves validity")
    }

    pub fn is_complete(&self) -> bool {
        self.non_edge_count() == 0
    }

    pub fn membership(&self, set: &[usize]) -> Vec<bool> {
        let mut member = vec![false; self.n];
        for &v in set {
            member[v] = true;
        }
        member
    }

    /// Connected components ordered by smallest contained id. Each entry is
    /// the component graph with local ids and the local-to-global map
    /// (ascending).
    pub fn components(&self) -> Vec<(Graph, Vec<usize>)> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut members = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            out.push((self.induced(&members), members));
        }
        out
    }

    /// True when the graph has no cycle.
    pub fn is_forest(&self) -> bool {
        self.cycle_edge().is_none()
    }

    /// First edge (in lexicographic order) that closes a cycle, if any.
    pub fn cycle_edge(&self) -> Option<(usize, usize)> {
        let mut dsu = DisjointSets::new(self.n);
        self.edges().find(|&(u, v)| !dsu.union(u, v))
    }
}

/// Union-find with path halving.
#[derive(Debug, Clone)]
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

//! Brute-force ground truth for small inputs.
//!
//! Exact boxicity uses the cover formulation: a `d`-dimensional
//! representation is the same as `d` interval supergraphs of `G`, and an
//! interval supergraph is determined by which non-edges of `G` it keeps as
//! non-edges. So `box(G)` is the fewest "interval-feasible" sets of
//! non-edges whose union is every non-edge.

mod cover;
mod poset_dim;

pub use poset_dim::{exact_poset_dimension, POSET_LIMIT};

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::clique_path_masks;

/// Environment variable that may override [`SolveLimits::default`].
pub const LIMITS_ENV: &str = "BOXREP_LIMITS";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveLimits {
    pub max_nonedges: usize,
    pub max_vertices: usize,
    pub max_cliques: usize,
}

impl Default for SolveLimits {
    fn default() -> Self {
        SolveLimits {
            max_nonedges: 20,
            max_vertices: 10,
            max_cliques: 12,
        }
    }
}

impl fmt::Display for SolveLimits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "max_nonedges={},max_vertices={},max_cliques={}",
            self.max_nonedges, self.max_vertices, self.max_cliques
        )
    }
}

impl SolveLimits {
    /// Applies comma-separated `key=value` overrides, e.g.
    /// `max_nonedges=22,max_vertices=12`.
    pub fn with_overrides(mut self, spec: &str) -> Result<Self> {
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::InvalidParams(format!("limit `{item}` is not key=value")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParams(format!("limit `{item}` has a non-integer value")))?;
            if value == 0 {
                return Err(Error::InvalidParams(format!("limit `{item}` must be positive")));
            }
            match key.trim() {
                "max_nonedges" if value <= 32 => self.max_nonedges = value,
                "max_vertices" if value <= 32 => self.max_vertices = value,
                "max_cliques" if value <= 32 => self.max_cliques = value,
                "max_nonedges" | "max_vertices" | "max_cliques" => {
                    return Err(Error::InvalidParams(format!("limit `{item}` exceeds 32")))
                }
                other => return Err(Error::InvalidParams(format!("unknown limit `{other}`"))),
            }
        }
        Ok(self)
    }

    /// Flag, then environment, then defaults.
    pub fn resolve(flag: Option<&str>, env: Option<&str>) -> Result<Self> {
        match (flag, env) {
            (Some(f), _) => SolveLimits::default().with_overrides(f),
            (None, Some(e)) => SolveLimits::default().with_overrides(e),
            (None, None) => Ok(SolveLimits::default()),
        }
    }
}

fn exact_connected(g: &Graph, limits: &SolveLimits) -> Result<usize> {
    let n = g.n();
    if g.is_complete() {
        return Ok(1);
    }
    if n > limits.max_vertices {
        return Err(Error::SizeLimitExceeded {
            what: "component vertex count",
            actual: n,
            limit: limits.max_vertices,
        });
    }
    let non_edges: Vec<(usize, usize)> = g.non_edges().collect();
    let e = non_edges.len();
    if e > limits.max_nonedges {
        return Err(Error::SizeLimitExceeded {
            what: "non-edge count",
            actual: e,
            limit: limits.max_nonedges,
        });
    }
    let universe: u32 = if e == 32 { u32::MAX } else { (1u32 << e) - 1 };
    let complete: Vec<u32> = (0..n).map(|v| ((1u32 << n) - 1) & !(1 << v)).collect();
    let feasible = |kept: u32| -> Result<bool> {
        let mut adj = complete.clone();
        for (i, &(u, v)) in non_edges.iter().enumerate() {
            if kept & (1 << i) != 0 {
                adj[u] &= !(1 << v);
                adj[v] &= !(1 << u);
            }
        }
        Ok(clique_path_masks(&adj, limits.max_cliques)?.is_some())
    };
    if feasible(universe)? {
        return Ok(1);
    }
    let sets: Vec<u32> = (1..universe)
        .into_par_iter()
        .map(|kept| feasible(kept).map(|ok| ok.then_some(kept)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let sets = cover::maximal_sets(sets);
    let best = cover::min_cover(&sets, universe).expect("single non-edges are always interval-feasible");
    Ok(best.len())
}

/// Exact boxicity: the maximum over connected components, and 1 for
/// graphs with at most one vertex.
pub fn exact_boxicity(g: &Graph, limits: &SolveLimits) -> Result<usize> {
    let mut best = 1;
    for (comp, _) in g.components() {
        best = best.max(exact_connected(&comp, limits)?);
    }
    Ok(best)
}

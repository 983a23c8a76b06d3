//! Interval-graph recognition by maximal-clique ordering.
//!
//! A graph is an interval graph iff its maximal cliques can be linearly
//! ordered so that the cliques containing any fixed vertex are consecutive.
//! Cliques are enumerated exhaustively and the ordering is found by a
//! dynamic program over (set of placed cliques, last clique), which is
//! exponential in the clique count and therefore size-guarded.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const RECOGNITION_LIMIT: usize = 12;

/// Bron–Kerbosch with pivoting. Returns `None` once more than `cap`
/// maximal cliques have been found.
fn maximal_cliques(adj: &[u32], cap: usize) -> Option<Vec<u32>> {
    fn recurse(adj: &[u32], r: u32, mut p: u32, mut x: u32, out: &mut Vec<u32>, cap: usize) -> bool {
        if p == 0 && x == 0 {
            out.push(r);
            return out.len() <= cap;
        }
        let pool = p | x;
        let pivot = (0..adj.len())
            .filter(|&u| pool & (1 << u) != 0)
            .max_by_key(|&u| (p & adj[u]).count_ones())
            .expect("pool is nonempty");
        let mut candidates = p & !adj[pivot];
        while candidates != 0 {
            let v = candidates.trailing_zeros() as usize;
            let bit = 1u32 << v;
            candidates &= !bit;
            if !recurse(adj, r | bit, p & adj[v], x & adj[v], out, cap) {
                return false;
            }
            p &= !bit;
            x |= bit;
        }
        true
    }
    let n = adj.len();
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut out = Vec::new();
    if n == 0 {
        return Some(out);
    }
    recurse(adj, 0, all, 0, &mut out, cap).then_some(out)
}

/// Maximum-cardinality search followed by a perfect-elimination check.
fn is_chordal(adj: &[u32]) -> bool {
    let n = adj.len();
    let mut weight = vec![0usize; n];
    let mut numbered = 0u32;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| numbered & (1 << v) == 0)
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("an unnumbered vertex remains");
        numbered |= 1 << v;
        order.push(v);
        for (w, wt) in weight.iter_mut().enumerate() {
            if adj[v] & (1 << w) != 0 && numbered & (1 << w) == 0 {
                *wt += 1;
            }
        }
    }
    // `order` reversed is a perfect elimination ordering iff chordal: for
    // each v, its earlier-numbered neighbors minus the latest one must be
    // adjacent to that latest one.
    let mut before = 0u32;
    for &v in &order {
        let earlier = adj[v] & before;
        if earlier != 0 {
            let parent = order
                .iter()
                .rev()
                .find(|&&u| earlier & (1 << u) != 0)
                .copied()
                .expect("earlier is nonempty");
            let rest = earlier & !(1 << parent);
            if rest & !adj[parent] != 0 {
                return false;
            }
        }
        before |= 1 << v;
    }
    true
}

/// Maximal cliques in a consecutive order, or `None` if the graph given by
/// bitmask adjacency is not an interval graph.
pub(crate) fn clique_path_masks(adj: &[u32], max_cliques: usize) -> Result<Option<Vec<u32>>> {
    let n = adj.len();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if !is_chordal(adj) {
        return Ok(None);
    }
    // Interval graphs have at most n maximal cliques.
    let Some(cliques) = maximal_cliques(adj, n) else {
        return Ok(None);
    };
    let c = cliques.len();
    if c > max_cliques {
        return Err(Error::SizeLimitExceeded {
            what: "maximal clique count",
            actual: c,
            limit: max_cliques,
        });
    }
    let full = (1usize << c) - 1;
    let mut union = vec![0u32; 1 << c];
    for mask in 1..=full {
        let low = mask.trailing_zeros() as usize;
        union[mask] = union[mask & (mask - 1)] | cliques[low];
    }
    // reach[mask] has bit `last` when the cliques in `mask` admit a valid
    // ordering ending in `last`; prev records the predecessor.
    let mut reach = vec![0u32; 1 << c];
    let mut prev = vec![u8::MAX; (1 << c) * c];
    for j in 0..c {
        reach[1 << j] |= 1 << j;
    }
    for mask in 1..full {
        let mut lasts = reach[mask];
        while lasts != 0 {
            let last = lasts.trailing_zeros() as usize;
            lasts &= lasts - 1;
            for j in 0..c {
                if mask & (1 << j) != 0 {
                    continue;
                }
                let next = mask | (1 << j);
                if reach[next] & (1 << j) != 0 {
                    continue;
                }
                if cliques[j] & union[mask] & !cliques[last] == 0 {
                    reach[next] |= 1 << j;
                    prev[next * c + j] = last as u8;
                }
            }
        }
    }
    if reach[full] == 0 {
        return Ok(None);
    }
    let mut last = reach[full].trailing_zeros() as usize;
    let mut mask = full;
    let mut rev = Vec::with_capacity(c);
    loop {
        rev.push(cliques[last]);
        let p = prev[mask * c + last];
        mask &= !(1 << last);
        if p == u8::MAX {
            break;
        }
        last = p as usize;
    }
    rev.reverse();
    Ok(Some(rev))
}

fn masks_of(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect()
}

fn guard(g: &Graph, limit: usize) -> Result<()> {
    let limit = limit.min(32);
    if g.n() > limit {
        return Err(Error::SizeLimitExceeded {
            what: "vertex count",
            actual: g.n(),
            limit,
        });
    }
    Ok(())
}

/// Maximal cliques of `g` listed so that each vertex's cliques are
/// consecutive, or `None` when `g` is not an interval graph.
pub fn interval_clique_order(g: &Graph, limit: usize) -> Result<Option<Vec<Vec<usize>>>> {
    guard(g, limit)?;
    let order = clique_path_masks(&masks_of(g), limit.min(32))?;
    Ok(order.map(|cl| {
        cl.into_iter()
            .map(|m| (0..g.n()).filter(|&v| m & (1 << v) != 0).collect())
            .collect()
    }))
}

pub fn is_interval_graph(g: &Graph, limit: usize) -> Result<bool> {
    Ok(interval_clique_order(g, limit)?.is_some())
}

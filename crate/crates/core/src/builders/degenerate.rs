//! Representations of graphs with a bounded-forward-degree vertex order.
//!
//! The reference strategy works in rounds. Each round draws a uniform
//! coloring with `k + 2` colors; a vertex is *good* when no neighbor later in
//! the order shares its color. For each color, the good vertices of that
//! color form an independent set `B` (two adjacent members would make the
//! earlier one bad), so a dimension placing `B` on distinct points and
//! everything else on a span covering them kills every pair inside `B`.
//!
//! A fixed non-edge is killed in a round with probability at least
//! `e^-2 / (k + 2)`, so `ceil(6 e^2 (k + 2) ln n)` rounds leave any given
//! non-edge uncovered with probability at most `n^-6`. Whatever survives the
//! budget gets one dedicated fallback dimension, so the builder always
//! terminates with a valid representation.

use std::f64::consts::E;

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::generate::rng_from_seed;
use crate::graph::order::positions;
use crate::graph::Graph;
use crate::interval::{BoxRepresentation, Interval, IntervalAssignment, RepMetadata};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrategyKind {
    Reference,
    /// Slot for a construction meeting `(k + 2) * ceil(2e ln n)`; not
    /// implemented.
    Lemma1Faithful,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegenerateStrategy {
    pub kind: StrategyKind,
    /// Number of random rounds; `None` uses [`default_budget`].
    pub round_budget: Option<u64>,
    pub seed: u64,
}

impl DegenerateStrategy {
    pub fn reference(seed: u64) -> Self {
        DegenerateStrategy {
            kind: StrategyKind::Reference,
            round_budget: None,
            seed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegenerateStats {
    pub rounds_used: u64,
    pub round_budget: u64,
    pub fallback_count: usize,
    /// Number of `B` sets turned into dimensions.
    pub emitted_sets: usize,
    /// Every emitted `B` set was independent in the input graph.
    pub sets_independent: bool,
    /// `max(1, (k + 2) * round_budget) + fallback_count`; an upper bound on
    /// the dimension count.
    pub size_bound: u64,
}

fn rounds_for(k: usize, n: usize) -> u64 {
    if n < 2 {
        return 0;
    }
    (6.0 * E * E * (k as f64 + 2.0) * (n as f64).ln()).ceil() as u64
}

/// `max(1, ceil(6 e^2 (k + 2) ln n))`.
pub fn default_budget(k: usize, n: usize) -> u64 {
    rounds_for(k, n).max(1)
}

/// Reference size bound `(k + 2) * ceil(6 e^2 (k + 2) ln n) + fallback`,
/// floored at one dimension.
pub fn s_ref(k: usize, n: usize, fallback: usize) -> u64 {
    ((k as u64 + 2) * rounds_for(k, n)).max(1) + fallback as u64
}

pub fn degenerate_rep(
    g: &Graph,
    order: &[usize],
    k: usize,
    strat: &DegenerateStrategy,
) -> Result<(BoxRepresentation, DegenerateStats)> {
    let n = g.n();
    let pos = positions(n, order)?;
    let forward: Vec<Vec<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect())
        .collect();
    if let Some(v) = (0..n).find(|&v| forward[v].len() > k) {
        return Err(Error::InvalidOrder(format!(
            "vertex {v} has {} later neighbors, more than k = {k}",
            forward[v].len()
        )));
    }
    if strat.kind == StrategyKind::Lemma1Faithful {
        return Err(Error::StrategyUnavailable("lemma1_faithful"));
    }
    let budget = strat.round_budget.unwrap_or_else(|| default_budget(k, n));
    if budget == 0 {
        return Err(Error::InvalidParams("round budget must be at least 1".into()));
    }

    let mut uncovered = vec![false; n * n];
    let mut remaining = 0usize;
    for (u, v) in g.non_edges() {
        uncovered[u * n + v] = true;
        remaining += 1;
    }

    let mut stats = DegenerateStats {
        rounds_used: 0,
        round_budget: budget,
        fallback_count: 0,
        emitted_sets: 0,
        sets_independent: true,
        size_bound: 0,
    };
    let mut dims = Vec::new();
    let colors = k + 2;
    let mut rng = rng_from_seed(strat.seed);
    let span = Interval::new(0, n as i64 + 1);

    'rounds: while remaining > 0 && stats.rounds_used < budget {
        stats.rounds_used += 1;
        let f: Vec<usize> = (0..n).map(|_| rng.random_range(0..colors)).collect();
        let good: Vec<bool> = (0..n).map(|v| forward[v].iter().all(|&w| f[w] != f[v])).collect();
        for color in 0..colors {
            let b: Vec<usize> = (0..n).filter(|&v| good[v] && f[v] == color).collect();
            if b.len() < 2 {
                continue;
            }
            stats.emitted_sets += 1;
            let mut dim = IntervalAssignment::uniform(n, span);
            for (i, &u) in b.iter().enumerate() {
                dim.0[u] = Interval::point(pos[u] as i64 + 1);
                for &v in &b[i + 1..] {
                    if g.has_edge(u, v) {
                        stats.sets_independent = false;
                    } else if std::mem::take(&mut uncovered[u * n + v]) {
                        remaining -= 1;
                    }
                }
            }
            dims.push(dim);
            if remaining == 0 {
                break 'rounds;
            }
        }
    }

    if remaining > 0 {
        for (u, v) in g.non_edges() {
            if uncovered[u * n + v] {
                let mut dim = IntervalAssignment::uniform(n, Interval::new(0, 3));
                dim.0[u] = Interval::new(0, 1);
                dim.0[v] = Interval::new(2, 3);
                dims.push(dim);
                stats.fallback_count += 1;
            }
        }
    }
    if dims.is_empty() {
        dims.push(IntervalAssignment::uniform(n, Interval::point(0)));
    }

    stats.size_bound = ((k as u64 + 2) * budget).max(1) + stats.fallback_count as u64;
    let reference = s_ref(k, n, stats.fallback_count);
    let meta = RepMetadata {
        bound: format!("(k+2)*ceil(6e^2 (k+2) ln n) + fallback = {reference}"),
        seed: Some(strat.seed),
        ..RepMetadata::new("degenerate_rep/reference")
    }
    .note("k", k)
    .note("rounds_used", stats.rounds_used)
    .note("round_budget", budget)
    .note("fallback_count", stats.fallback_count)
    .note("s_ref", reference);
    let rep = BoxRepresentation::new(n, dims, meta)?;
    Ok((rep, stats))
}

//! Primitive representation builders. Every builder returns a
//! representation that passes [`verify_representation`] for its input.
//!
//! [`verify_representation`]: crate::interval::verify_representation

mod acyclic;
mod degenerate;
mod forest;
mod roberts;

pub use acyclic::acyclic_rep;
pub use degenerate::{default_budget, degenerate_rep, s_ref, DegenerateStats, DegenerateStrategy, StrategyKind};
pub use forest::forest_rep;
pub use roberts::roberts_rep;

use crate::error::Result;
use crate::graph::Graph;
use crate::interval::{interval_clique_order, BoxRepresentation, Interval, IntervalAssignment, RepMetadata};

/// A one-dimensional representation when `g` is itself an interval graph:
/// vertex `v` spans the positions of its maximal cliques in a consecutive
/// clique order.
pub fn trivial_rep(g: &Graph, limit: usize) -> Result<Option<BoxRepresentation>> {
    let Some(order) = interval_clique_order(g, limit)? else {
        return Ok(None);
    };
    let mut ivs: Vec<Option<Interval>> = vec![None; g.n()];
    for (i, clique) in order.iter().enumerate() {
        let i = i as i64;
        for &v in clique {
            ivs[v] = Some(match ivs[v] {
                None => Interval::point(i),
                Some(iv) => Interval::new(iv.lo, i),
            });
        }
    }
    let dim = IntervalAssignment(ivs.into_iter().map(|iv| iv.expect("every vertex lies in a maximal clique")).collect());
    let meta = RepMetadata {
        bound: "1".into(),
        ..RepMetadata::new("trivial_rep")
    };
    BoxRepresentation::new(g.n(), vec![dim], meta).map(Some)
}

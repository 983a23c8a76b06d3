use std::time::Instant;

use super::{binomial, heawood_degeneracy, PipelineTrace};
use crate::builders::{acyclic_rep, degenerate_rep, DegenerateStrategy};
use crate::combinators::{lemma2_compose, quotient_lift};
use crate::error::{Error, Result};
use crate::graph::{assert_k3k, degeneracy_order, quotient_by_a_neighborhood, Coloring, Graph};
use crate::interval::{concat, extend_universal, verify_representation, BoxRepresentation, RepMetadata};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceTrace {
    pub genus: usize,
    /// Genus at which the asymptotic formulas were evaluated, `max(g, 2)`.
    pub genus_evaluated: usize,
    pub a_size: usize,
    pub colors: usize,
    /// Dimensions of the representation of `G - A` (and of `G_2`).
    pub g2_dims: usize,
    pub k3k_max: usize,
    pub k3k_bound: usize,
    /// Number of classes of `V \ A`.
    pub quotient_classes: usize,
    /// `1 + |A| + C(|A|, 2) + (2g + 2) C(|A|, 3)`.
    pub quotient_class_bound: u128,
    pub quotient_degeneracy: usize,
    pub heawood_bound: u64,
    pub quotient_dims: usize,
    /// Dimensions of the representation of `H_1` and of `G_1`.
    pub g1_dims: usize,
    pub total_dims: usize,
}

/// Builds a representation of `g` from a set `a` and an acyclic coloring
/// `c` of `G - A` (indexed by the vertices of `V \ A` in ascending order).
///
/// `G_1` is `G` with `V \ A` made a clique and is represented through the
/// quotient of `V \ A` by A-neighborhood. `G_2` is `G` with `A` made
/// universal and is represented by the coloring. Every non-edge of `G` is a
/// non-edge of `G_1` or of `G_2`, so their concatenation represents `G`.
pub fn surface_pipeline(
    g: &Graph,
    genus: usize,
    a: &[usize],
    c: &Coloring,
    seed: u64,
) -> Result<(BoxRepresentation, PipelineTrace)> {
    let started = Instant::now();
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidGraph("need at least one vertex".into()));
    }
    let mut a_sorted = a.to_vec();
    a_sorted.sort_unstable();
    a_sorted.dedup();
    if let Some(&v) = a_sorted.iter().find(|&&v| v >= n) {
        return Err(Error::PreconditionViolation(format!("A contains {v}, outside 0..{n}")));
    }
    let in_a = g.membership(&a_sorted);
    let rest: Vec<usize> = (0..n).filter(|&v| !in_a[v]).collect();
    if c.len() != rest.len() {
        return Err(Error::InvalidColoring(format!(
            "coloring has {} entries, G - A has {} vertices",
            c.len(),
            rest.len()
        )));
    }
    let genus_evaluated = genus.max(2);
    let mut trace = PipelineTrace::new("surface", seed);
    trace.record("n", n);
    trace.record("m", g.m());
    trace.record("genus", genus);
    trace.record("genus_evaluated", genus_evaluated);
    if genus < 2 {
        trace.warnings.push(format!("genus {genus} < 2; asymptotic bounds evaluated at g = 2"));
    }
    trace.record("a_size", a_sorted.len());

    // G - A and G_2.
    let g_minus_a = g.induced(&rest);
    let (g2_rep, colors) = if rest.is_empty() {
        (BoxRepresentation::universal(n), 0)
    } else {
        let inner = acyclic_rep(&g_minus_a, c)?;
        (extend_universal(&inner, &rest, n)?, c.k())
    };
    let g2 = g.with_universal(&a_sorted);
    verify_representation(&g2, &g2_rep)?.into_result()?;
    trace.record("colors", colors);
    trace.record("acyclic_bound", colors * colors.saturating_sub(1));
    trace.record("g2_dims", g2_rep.d());

    // Quotient and its structural checks.
    let k3k = assert_k3k(g, &a_sorted, genus);
    trace.record("k3k_max", k3k.max_count);
    trace.record("k3k_bound", k3k.bound);
    if !k3k.pass {
        return Err(Error::GenusCheckFailed {
            triple: k3k.witness.expect("a failing check has a witness"),
            count: k3k.max_count,
            bound: k3k.bound,
        });
    }
    let q = quotient_by_a_neighborhood(g, &a_sorted);
    let a_len = a_sorted.len() as u128;
    let class_bound = 1 + a_len + binomial(a_len, 2) + (2 * genus as u128 + 2) * binomial(a_len, 3);
    trace.record("quotient_classes", q.classes.len());
    trace.record("quotient_class_bound", class_bound);
    if q.classes.len() as u128 > class_bound {
        return Err(Error::PreconditionViolation(format!(
            "{} quotient classes exceed {class_bound}",
            q.classes.len()
        )));
    }
    let relaxed = 1_000_000_000u128 * (genus_evaluated as u128).pow(4);
    trace.record("quotient_relaxed_bound", relaxed);
    let (qorder, qdeg) = degeneracy_order(&q.quotient_graph);
    let heawood = heawood_degeneracy(genus_evaluated as u64);
    trace.record("quotient_degeneracy", qdeg);
    trace.record("heawood_bound", heawood);
    if qdeg as u64 > heawood {
        trace.warnings.push(format!(
            "quotient degeneracy {qdeg} exceeds the genus-{genus_evaluated} bound {heawood}"
        ));
    }

    // H_1 and G_1.
    let qg = &q.quotient_graph;
    let r_q = if qg.m() == 0 {
        BoxRepresentation::edgeless(qg.n())
    } else {
        degenerate_rep(qg, &qorder, qdeg, &DegenerateStrategy::reference(seed))?.0
    };
    trace.record("quotient_vertices", qg.n());
    trace.record("quotient_dims", r_q.d());
    let reps = q.representative_indices();
    let h1 = qg.with_clique_on(&reps);
    let r_h1 = lemma2_compose(&r_q, &BoxRepresentation::universal(reps.len()), &reps, &h1)?;
    let g1 = g.with_clique_on(&rest);
    let g1_rep = quotient_lift(&r_h1, &q, &g1)?;
    trace.record("g1_dims", g1_rep.d());

    let rep = concat(&g1_rep, &g2_rep, g)?;
    let meta = RepMetadata {
        bound: format!("{} + {}", g1_rep.d(), g2_rep.d()),
        seed: Some(seed),
        ..RepMetadata::new("surface_pipeline")
    }
    .note("genus", genus)
    .note("a_size", a_sorted.len());
    let rep = rep.with_meta(meta);
    trace.final_dims = rep.d();
    trace.surface = Some(SurfaceTrace {
        genus,
        genus_evaluated,
        a_size: a_sorted.len(),
        colors,
        g2_dims: g2_rep.d(),
        k3k_max: k3k.max_count,
        k3k_bound: k3k.bound,
        quotient_classes: q.classes.len(),
        quotient_class_bound: class_bound,
        quotient_degeneracy: qdeg,
        heawood_bound: heawood,
        quotient_dims: r_q.d(),
        g1_dims: g1_rep.d(),
        total_dims: rep.d(),
    });
    trace.wall_time = started.elapsed();
    Ok((rep, trace))
}

use std::time::Instant;

use super::{Mode, PipelineTrace};
use crate::builders::{degenerate_rep, roberts_rep, s_ref, DegenerateStrategy};
use crate::combinators::lemma2_compose;
use crate::error::{Error, Result};
use crate::graph::{forward_degeneracy, peel, Graph, Threshold};
use crate::interval::{merge_components, verify_representation, BoxRepresentation, RepMetadata};

/// Per-component record of an edge pipeline run.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeComponentTrace {
    /// Original ids of the component's vertices, ascending.
    pub vertices: Vec<usize>,
    pub n: usize,
    pub m: usize,
    /// `None` when the component has no edges.
    pub theta: Option<Threshold>,
    /// Peel order in local ids: removal order, then survivors.
    pub order: Vec<usize>,
    /// Survivors of the peel, in original ids.
    pub s: Vec<usize>,
    /// Forward degeneracy of `H` along `order`.
    pub h_degeneracy: usize,
    pub h_dims: usize,
    pub s_dims: usize,
    pub dims: usize,
    pub fallback_count: usize,
    /// `2 * s_ref(ceil(theta), n) + max(1, |S| / 2)`, including fallback
    /// dimensions; `1` for edgeless components.
    pub dims_bound: u64,
}

impl EdgeComponentTrace {
    /// `2 sqrt(m ln n)`, the survivor bound that holds for the square-root
    /// threshold.
    pub fn survivor_bound(&self) -> f64 {
        if self.m == 0 {
            return 0.0;
        }
        2.0 * (self.m as f64 * (self.n as f64).ln()).sqrt()
    }
}

fn component_rep(c: &Graph, mode: Mode, seed: u64) -> Result<(BoxRepresentation, EdgeComponentTrace)> {
    let n = c.n();
    let m = c.m();
    if m == 0 {
        let rep = BoxRepresentation::edgeless(n);
        let trace = EdgeComponentTrace {
            vertices: Vec::new(),
            n,
            m,
            theta: None,
            order: (0..n).collect(),
            s: Vec::new(),
            h_degeneracy: 0,
            h_dims: 1,
            s_dims: 0,
            dims: 1,
            fallback_count: 0,
            dims_bound: 1,
        };
        return Ok((rep, trace));
    }
    let theta = match mode {
        Mode::Paper => Threshold::sqrt_m_over_ln_n(m, n),
        Mode::Reference => Threshold::root_of_m_over_ln_n(m, n, 3),
    };
    let k = theta.ceil() as usize;
    let peeled = peel(c, theta);
    let order = peeled.order();
    let s = peeled.survivors.clone();
    let h = c.without_edges_inside(&s);
    let h_degeneracy = forward_degeneracy(&h, &order)?;
    let (r_h, fallback_count) = if h.m() == 0 {
        (BoxRepresentation::edgeless(n), 0)
    } else {
        let (r, stats) = degenerate_rep(&h, &order, k, &DegenerateStrategy::reference(seed))?;
        (r, stats.fallback_count)
    };
    let r_s = roberts_rep(&c.induced(&s));
    let rep = lemma2_compose(&r_h, &r_s, &s, c)?;
    let s_dims = if s.is_empty() { 0 } else { r_s.d() };
    let dims_bound = 2 * s_ref(k, n, fallback_count) + (s.len() as u64 / 2).max(1);
    let trace = EdgeComponentTrace {
        vertices: Vec::new(),
        n,
        m,
        theta: Some(theta),
        order,
        s,
        h_degeneracy,
        h_dims: r_h.d(),
        s_dims,
        dims: rep.d(),
        fallback_count,
        dims_bound,
    };
    Ok((rep, trace))
}

/// Peels the vertices of low remaining degree, represents the rest of the
/// graph with the degenerate builder and the dense core with Roberts'
/// construction, and combines both. Components are handled separately.
pub fn edge_pipeline(g: &Graph, mode: Mode, seed: u64) -> Result<(BoxRepresentation, PipelineTrace)> {
    let started = Instant::now();
    if g.n() < 2 {
        return Err(Error::InvalidGraph(format!("need at least 2 vertices, got {}", g.n())));
    }
    let mut trace = PipelineTrace::new("edge", seed);
    trace.record("mode", mode.name());
    trace.record("n", g.n());
    trace.record("m", g.m());
    let mut reps = Vec::new();
    let mut maps = Vec::new();
    for (i, (comp, map)) in g.components().into_iter().enumerate() {
        let (rep, mut ct) = component_rep(&comp, mode, seed)?;
        ct.vertices = map.clone();
        ct.s = ct.s.iter().map(|&v| map[v]).collect();
        let p = format!("component.{i}");
        trace.record(format!("{p}.n"), ct.n);
        trace.record(format!("{p}.m"), ct.m);
        if let Some(theta) = ct.theta {
            trace.record(format!("{p}.theta"), theta);
            trace.record(format!("{p}.k"), theta.ceil());
            trace.record(format!("{p}.s_size"), ct.s.len());
            trace.record(format!("{p}.s_bound"), format!("{:.3}", ct.survivor_bound()));
            trace.record(format!("{p}.h_degeneracy"), ct.h_degeneracy);
            trace.record(format!("{p}.fallback_count"), ct.fallback_count);
            trace.record(format!("{p}.h_dims"), ct.h_dims);
            trace.record(format!("{p}.s_dims"), ct.s_dims);
            if mode == Mode::Paper && ct.s.len() as f64 > ct.survivor_bound() {
                return Err(Error::PreconditionViolation(format!(
                    "component {i}: {} survivors exceed 2 sqrt(m ln n) = {:.3}",
                    ct.s.len(),
                    ct.survivor_bound()
                )));
            }
            if !theta.admits(ct.h_degeneracy) {
                return Err(Error::InvalidOrder(format!(
                    "component {i}: peel order has forward degree {} above theta {theta}",
                    ct.h_degeneracy
                )));
            }
        }
        trace.record(format!("{p}.dims"), ct.dims);
        trace.record(format!("{p}.dims_bound"), ct.dims_bound);
        reps.push(rep);
        maps.push(map);
        trace.edge.push(ct);
    }
    let merged = merge_components(&reps, &maps, g.n())?;
    let bound = trace.edge.iter().map(|c| c.dims_bound).max().unwrap_or(1);
    let meta = RepMetadata {
        bound: bound.to_string(),
        seed: Some(seed),
        ..RepMetadata::new("edge_pipeline")
    }
    .note("mode", mode.name())
    .note("components", trace.edge.len());
    let rep = merged.with_meta(meta);
    let report = verify_representation(g, &rep)?;
    if !report.valid {
        return Err(Error::ConstructionFailed {
            stage: "edge_pipeline",
            report,
        });
    }
    trace.final_dims = rep.d();
    trace.wall_time = started.elapsed();
    Ok((rep, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Model};

    #[test]
    fn c4_in_both_modes() {
        for mode in [Mode::Paper, Mode::Reference] {
            let (rep, trace) = edge_pipeline(&Graph::cycle(4), mode, 0).unwrap();
            assert!(verify_representation(&Graph::cycle(4), &rep).unwrap().valid);
            assert_eq!(trace.final_dims, rep.d());
            assert_eq!(trace.edge.len(), 1);
        }
    }

    #[test]
    fn complete_graph_survives_peeling() {
        // K_10: every degree is 9, theta = sqrt(45 / ln 10) ~ 4.42.
        let g = Graph::complete(10);
        let (rep, trace) = edge_pipeline(&g, Mode::Paper, 0).unwrap();
        let ct = &trace.edge[0];
        assert_eq!(ct.s, (0..10).collect::<Vec<_>>());
        assert_eq!(ct.h_dims, 1);
        assert_eq!(ct.s_dims, 1);
        assert_eq!(rep.d(), 3);
    }

    #[test]
    fn kdegen_reference_bound() {
        let g = generate(Model::Kdegen { n: 60, k: 3 }, 5).unwrap();
        let (rep, trace) = edge_pipeline(&g, Mode::Reference, 5).unwrap();
        assert!(rep.d() as u64 <= trace.edge.iter().map(|c| c.dims_bound).max().unwrap());
    }

    #[test]
    fn disconnected_and_isolated() {
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 0), (5, 6)]).unwrap();
        let (rep, trace) = edge_pipeline(&g, Mode::Paper, 3).unwrap();
        assert!(verify_representation(&g, &rep).unwrap().valid);
        assert_eq!(trace.edge.len(), 3);
        assert!(edge_pipeline(&Graph::empty(1), Mode::Paper, 0).is_err());
        let (rep, _) = edge_pipeline(&Graph::empty(4), Mode::Paper, 0).unwrap();
        assert_eq!(rep.d(), 1);
    }

    #[test]
    fn deterministic() {
        let g = generate(Model::Kdegen { n: 30, k: 2 }, 1).unwrap();
        let (a, ta) = edge_pipeline(&g, Mode::Reference, 9).unwrap();
        let (b, tb) = edge_pipeline(&g, Mode::Reference, 9).unwrap();
        assert_eq!(a, b);
        assert_eq!(ta.render(), tb.render());
    }
}

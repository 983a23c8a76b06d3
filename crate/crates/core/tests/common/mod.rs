#![allow(dead_code)]

use boxrep::builders::{acyclic_rep, degenerate_rep, forest_rep, roberts_rep, trivial_rep, DegenerateStrategy};
use boxrep::graph::{degeneracy_order, generate, min_acyclic_coloring, Graph, Model, ACYCLIC_LIMIT};
use boxrep::interval::{BoxRepresentation, RECOGNITION_LIMIT};
use boxrep::pipelines::{edge_pipeline, surface_pipeline, Mode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEEDS: u64 = 10;

/// Every labeled graph on `n` vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &e)| e);
            Graph::from_edges(n, edges).unwrap()
        })
        .collect()
}

pub fn small_graphs(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(all_graphs).collect()
}

/// Seeded random graphs from each generator, up to 60 vertices.
pub fn random_graphs() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for seed in 0..SEEDS {
        for &(n, k) in &[(10, 2), (20, 3), (40, 3), (60, 2), (60, 4)] {
            out.push((format!("kdegen({n},{k})#{seed}"), generate(Model::Kdegen { n, k }, seed).unwrap()));
        }
        for &n in &[4, 8, 16, 30] {
            out.push((format!("bipartite({n})#{seed}"), generate(Model::Bipartite { n }, seed).unwrap()));
        }
    }
    for k in [1, 2, 3, 4, 5, 6, 10, 20, 30] {
        out.push((format!("copm({k})"), generate(Model::Copm { k }, 0).unwrap()));
    }
    out
}

pub fn corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = small_graphs(5)
        .into_iter()
        .enumerate()
        .map(|(i, g)| (format!("small#{i}"), g))
        .collect();
    out.extend(random_graphs());
    out
}

/// G(n, p) with a test-local generator.
pub fn gnp(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every construction that applies to `g`, labeled.
pub fn all_constructions(g: &Graph, seed: u64) -> Vec<(&'static str, BoxRepresentation)> {
    let mut out = vec![("roberts_rep", roberts_rep(g))];
    let (order, k) = degeneracy_order(g);
    out.push((
        "degenerate_rep",
        degenerate_rep(g, &order, k, &DegenerateStrategy::reference(seed)).unwrap().0,
    ));
    if g.is_forest() {
        out.push(("forest_rep", forest_rep(g).unwrap()));
    }
    if g.n() <= RECOGNITION_LIMIT {
        if let Some(r) = trivial_rep(g, RECOGNITION_LIMIT).unwrap() {
            out.push(("trivial_rep", r));
        }
    }
    if g.n() <= 8 {
        let c = min_acyclic_coloring(g, ACYCLIC_LIMIT).unwrap();
        out.push(("acyclic_rep", acyclic_rep(g, &c).unwrap()));
        out.push(("surface_pipeline", surface_pipeline(g, 0, &[], &c, seed).unwrap().0));
    }
    if g.n() >= 2 {
        out.push(("edge_pipeline/paper", edge_pipeline(g, Mode::Paper, seed).unwrap().0));
        out.push(("edge_pipeline/reference", edge_pipeline(g, Mode::Reference, seed).unwrap().0));
    }
    out
}

/// Direct pairwise check, independent of the library verifier.
pub fn brute_valid(g: &Graph, r: &BoxRepresentation) -> bool {
    if r.n() != g.n() || r.d() == 0 {
        return false;
    }
    (0..g.n()).all(|u| {
        (u + 1..g.n()).all(|v| {
            let meet = r.dims().iter().all(|dim| dim[u].lo.max(dim[v].lo) <= dim[u].hi.min(dim[v].hi));
            meet == g.has_edge(u, v)
        })
    })
}

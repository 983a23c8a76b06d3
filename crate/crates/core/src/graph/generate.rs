//! Seeded graph generators.
//!
//! All randomness comes from ChaCha8 seeded with `seed_from_u64`, so a
//! `(model, params, seed)` triple always produces the same edge set.

use rand::seq::index;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};

pub const PRNG_NAME: &str = "chacha8-seed_from_u64";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    /// Two sides of `n` vertices (`0..n` and `n..2n`); each cross pair kept
    /// with probability `min(1, 1 / ln n)`.
    Bipartite { n: usize },
    /// Complete graph on `2k` vertices minus the matching `{2i, 2i+1}`.
    Copm { k: usize },
    /// Vertex `i` joins `min(k, i)` distinct uniformly chosen earlier
    /// vertices.
    Kdegen { n: usize, k: usize },
}

impl Model {
    pub fn name(&self) -> &'static str {
        match self {
            Model::Bipartite { .. } => "bipartite",
            Model::Copm { .. } => "copm",
            Model::Kdegen { .. } => "kdegen",
        }
    }
}

pub(crate) fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Bernoulli draw with success probability `threshold / 2^64`.
fn bernoulli(rng: &mut impl RngCore, threshold: u128) -> bool {
    (rng.next_u64() as u128) < threshold
}

fn probability_threshold(p: f64) -> u128 {
    if p >= 1.0 {
        1u128 << 64
    } else {
        (p * 2f64.powi(64)) as u128
    }
}

pub fn generate(model: Model, seed: u64) -> Result<Graph> {
    let mut rng = rng_from_seed(seed);
    match model {
        Model::Bipartite { n } => {
            if n < 2 {
                return Err(Error::InvalidParams(format!(
                    "bipartite model needs n >= 2, got {n}"
                )));
            }
            let threshold = probability_threshold(1.0 / (n as f64).ln());
            let mut edges = Vec::new();
            for u in 0..n {
                for v in 0..n {
                    if bernoulli(&mut rng, threshold) {
                        edges.push((u, n + v));
                    }
                }
            }
            Graph::from_edges(2 * n, edges)
        }
        Model::Copm { k } => {
            if k == 0 {
                return Err(Error::InvalidParams("copm model needs k >= 1".into()));
            }
            let edges = (0..2 * k)
                .flat_map(|u| (u + 1..2 * k).map(move |v| (u, v)))
                .filter(|&(u, v)| !(u % 2 == 0 && v == u + 1));
            Graph::from_edges(2 * k, edges)
        }
        Model::Kdegen { n, k } => {
            if n == 0 {
                return Err(Error::InvalidParams("kdegen model needs n >= 1".into()));
            }
            let mut edges = Vec::new();
            for i in 1..n {
                for j in index::sample(&mut rng, i, k.min(i)) {
                    edges.push((j, i));
                }
            }
            Graph::from_edges(n, edges)
        }
    }
}

/// Euler genus of a graph with `m` edges is at most `m + 2`.
pub fn euler_genus_upper(m: u64) -> u64 {
    m + 2
}

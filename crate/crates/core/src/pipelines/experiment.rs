use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{exact_boxicity, SolveLimits};
use crate::graph::{generate, Model};

/// Largest side size for which exact boxicities are computed.
pub const EXACT_SIDE_LIMIT: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExperimentReport {
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    /// `2 n^2 / ln n`, floored; an integer edge count `m` is within the
    /// bound iff `m <= edge_bound`.
    pub edge_bound: u64,
    /// Edge count of trial `t`, generated with seed `seed + t`.
    pub edges: Vec<usize>,
    pub within_bound: usize,
    /// Exact boxicity -> number of trials, when `n <= EXACT_SIDE_LIMIT`.
    pub exact: BTreeMap<usize, usize>,
    /// Trials whose exact boxicity exceeded the solver limits.
    pub exact_skipped: usize,
}

impl ExperimentReport {
    pub fn fraction_within(&self) -> f64 {
        if self.trials == 0 {
            return 0.0;
        }
        self.within_bound as f64 / self.trials as f64
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "n = {}", self.n).unwrap();
        writeln!(out, "trials = {}", self.trials).unwrap();
        writeln!(out, "seed = {}", self.seed).unwrap();
        writeln!(out, "edge_bound = {}", self.edge_bound).unwrap();
        if self.trials == 0 {
            return out;
        }
        let min = self.edges.iter().min().unwrap();
        let max = self.edges.iter().max().unwrap();
        let mean = self.edges.iter().sum::<usize>() as f64 / self.trials as f64;
        writeln!(out, "edges_min = {min}").unwrap();
        writeln!(out, "edges_mean = {mean:.3}").unwrap();
        writeln!(out, "edges_max = {max}").unwrap();
        writeln!(out, "within_bound = {}", self.within_bound).unwrap();
        writeln!(out, "fraction_within = {:.3}", self.fraction_within()).unwrap();
        for (b, count) in &self.exact {
            writeln!(out, "exact_boxicity.{b} = {count}").unwrap();
        }
        if self.n <= EXACT_SIDE_LIMIT {
            writeln!(out, "exact_skipped = {}", self.exact_skipped).unwrap();
        }
        out
    }
}

/// Samples `trials` random bipartite graphs with sides of size `n` and
/// counts how many stay within `2 n^2 / ln n` edges. Trials run in
/// parallel; trial `t` uses seed `seed + t`.
pub fn bipartite_experiment(n: usize, trials: usize, seed: u64, limits: &SolveLimits) -> Result<ExperimentReport> {
    if n < 4 {
        return Err(Error::InvalidParams(format!("need n >= 4, got {n}")));
    }
    let nf = n as f64;
    let edge_bound = (2.0 * nf * nf / nf.ln()).floor() as u64;
    let samples = (0..trials as u64)
        .into_par_iter()
        .map(|t| {
            let g = generate(Model::Bipartite { n }, seed.wrapping_add(t))?;
            let exact = if n <= EXACT_SIDE_LIMIT {
                match exact_boxicity(&g, limits) {
                    Ok(b) => Some(Some(b)),
                    Err(Error::SizeLimitExceeded { .. }) => Some(None),
                    Err(e) => return Err(e),
                }
            } else {
                None
            };
            Ok((g.m(), exact))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut report = ExperimentReport {
        n,
        trials,
        seed,
        edge_bound,
        edges: Vec::with_capacity(trials),
        within_bound: 0,
        exact: BTreeMap::new(),
        exact_skipped: 0,
    };
    for (m, exact) in samples {
        report.edges.push(m);
        if m as u64 <= edge_bound {
            report.within_bound += 1;
        }
        match exact {
            Some(Some(b)) => *report.exact.entry(b).or_default() += 1,
            Some(None) => report.exact_skipped += 1,
            None => {}
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report() {
        let r = bipartite_experiment(16, 0, 0, &SolveLimits::default()).unwrap();
        assert!(r.edges.is_empty());
        assert_eq!(r.within_bound, 0);
        assert!(r.exact.is_empty());
        assert!(!r.render().contains("within_bound"));
    }

    #[test]
    fn rejects_small_n() {
        assert!(bipartite_experiment(3, 5, 0, &SolveLimits::default()).is_err());
    }

    #[test]
    fn edge_bound_value() {
        // 2 * 256^2 / ln 256 = 131072 / 5.545177 = 23637.00...
        let r = bipartite_experiment(256, 1, 0, &SolveLimits::default()).unwrap();
        let oracle = (2.0f64 * 65536.0 / 256f64.ln()).floor() as u64;
        assert_eq!(r.edge_bound, oracle);
        assert_eq!(r.edges.len(), 1);
    }

    #[test]
    fn order_independent_of_parallelism() {
        let a = bipartite_experiment(8, 20, 3, &SolveLimits::default()).unwrap();
        let singles: Vec<usize> = (0..20)
            .map(|t| generate(Model::Bipartite { n: 8 }, 3 + t).unwrap().m())
            .collect();
        assert_eq!(a.edges, singles);
    }
}

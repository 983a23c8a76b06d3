//! End-to-end constructions, the random bipartite experiment and bound
//! tables.

mod edge;
mod experiment;
mod report;
mod surface;

pub use edge::{edge_pipeline, EdgeComponentTrace};
pub use experiment::{bipartite_experiment, ExperimentReport, EXACT_SIDE_LIMIT};
pub use report::{bound_report, BoundReport, BoundRow, BoundValue};
pub use surface::{surface_pipeline, SurfaceTrace};

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Duration;

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Peel at `sqrt(m / ln n)`.
    Paper,
    /// Peel at `(m / ln n)^(1/3)`, which balances the reference builder's
    /// quadratic size against the `|S| / 2` Roberts part.
    Reference,
}

impl Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::Paper => "paper",
            Mode::Reference => "reference",
        }
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "paper" => Ok(Mode::Paper),
            "reference" => Ok(Mode::Reference),
            other => Err(Error::InvalidParams(format!("unknown mode `{other}`"))),
        }
    }
}

/// Stage-by-stage record of a pipeline run.
#[derive(Debug, Clone, PartialEq)]
pub struct PipelineTrace {
    pub pipeline: &'static str,
    pub seed: u64,
    pub final_dims: usize,
    /// `key = value` lines in stage order.
    pub stages: Vec<(String, String)>,
    pub warnings: Vec<String>,
    /// Filled by the edge pipeline, one entry per connected component.
    pub edge: Vec<EdgeComponentTrace>,
    pub surface: Option<SurfaceTrace>,
    /// Not part of [`PipelineTrace::render`], which must be reproducible.
    pub wall_time: Duration,
}

impl PipelineTrace {
    fn new(pipeline: &'static str, seed: u64) -> Self {
        PipelineTrace {
            pipeline,
            seed,
            final_dims: 0,
            stages: Vec::new(),
            warnings: Vec::new(),
            edge: Vec::new(),
            surface: None,
            wall_time: Duration::ZERO,
        }
    }

    fn record(&mut self, key: impl Into<String>, value: impl ToString) {
        self.stages.push((key.into(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.stages.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    /// Line-oriented `key = value` text.
    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "pipeline = {}", self.pipeline).unwrap();
        writeln!(out, "seed = {}", self.seed).unwrap();
        for (k, v) in &self.stages {
            writeln!(out, "{k} = {v}").unwrap();
        }
        for w in &self.warnings {
            writeln!(out, "warning = {w}").unwrap();
        }
        writeln!(out, "final_dims = {}", self.final_dims).unwrap();
        out
    }
}

/// `C(n, r)` for small `r`.
pub(crate) fn binomial(n: u128, r: u32) -> u128 {
    (0..r as u128).fold(1, |acc, i| if n < r as u128 { 0 } else { acc * (n - i) / (i + 1) })
}

/// `ceil((5 + sqrt(1 + 24 g)) / 2)`, computed exactly.
pub fn heawood_degeneracy(genus: u64) -> u64 {
    let disc = 1 + 24 * genus;
    let mut root = (disc as f64).sqrt() as u64;
    while root * root > disc {
        root -= 1;
    }
    while (root + 1) * (root + 1) <= disc {
        root += 1;
    }
    let exact = root * root == disc;
    // (5 + sqrt(disc)) / 2, rounded up.
    let twice = 5 + root + u64::from(!exact);
    twice.div_ceil(2)
}

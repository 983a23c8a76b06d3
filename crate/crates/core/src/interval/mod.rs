//! Box representations: one interval per vertex per dimension, read as the
//! intersection of the resulting interval graphs.
//!
//! Intervals are closed with integer endpoints; touching intervals
//! intersect.

mod io;
mod ops;
mod recognize;
mod verify;

pub use io::{parse_representation, write_representation};
pub use ops::{concat, extend_universal, merge_components};
pub use recognize::{interval_clique_order, is_interval_graph, RECOGNITION_LIMIT};
pub(crate) use recognize::clique_path_masks;
pub use verify::{verify_representation, VerifyReport};

use std::collections::BTreeMap;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: i64,
    pub hi: i64,
}

impl Interval {
    pub fn new(lo: i64, hi: i64) -> Self {
        debug_assert!(lo <= hi, "empty interval [{lo}, {hi}]");
        Interval { lo, hi }
    }

    pub fn point(x: i64) -> Self {
        Interval { lo: x, hi: x }
    }

    #[inline]
    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}

/// One interval per vertex: a single interval graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalAssignment(pub Vec<Interval>);

impl IntervalAssignment {
    /// Every vertex gets the same interval.
    pub fn uniform(n: usize, iv: Interval) -> Self {
        IntervalAssignment(vec![iv; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `[min lo, max hi]` over all vertices, `None` when empty.
    pub fn span(&self) -> Option<Interval> {
        let lo = self.0.iter().map(|iv| iv.lo).min()?;
        let hi = self.0.iter().map(|iv| iv.hi).max()?;
        Some(Interval { lo, hi })
    }

    pub fn shifted(&self, offset: i64) -> Self {
        IntervalAssignment(
            self.0
                .iter()
                .map(|iv| Interval::new(iv.lo + offset, iv.hi + offset))
                .collect(),
        )
    }
}

impl std::ops::Index<usize> for IntervalAssignment {
    type Output = Interval;

    fn index(&self, v: usize) -> &Interval {
        &self.0[v]
    }
}

/// Provenance carried alongside a representation. Not serialized.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RepMetadata {
    pub builder: String,
    /// The size bound the builder guarantees, as a formula with its value.
    pub bound: String,
    pub seed: Option<u64>,
    pub notes: BTreeMap<String, String>,
}

impl RepMetadata {
    pub fn new(builder: impl Into<String>) -> Self {
        RepMetadata {
            builder: builder.into(),
            ..Default::default()
        }
    }

    pub fn note(mut self, key: &str, value: impl ToString) -> Self {
        self.notes.insert(key.to_string(), value.to_string());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxRepresentation {
    n: usize,
    dims: Vec<IntervalAssignment>,
    pub meta: RepMetadata,
}

impl BoxRepresentation {
    /// Checks that there is at least one dimension, that every dimension
    /// assigns exactly `n` intervals, and that every interval is nonempty.
    pub fn new(n: usize, dims: Vec<IntervalAssignment>, meta: RepMetadata) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::InvalidInputRep("a representation needs at least one dimension".into()));
        }
        for (j, d) in dims.iter().enumerate() {
            if d.len() != n {
                return Err(Error::InvalidInputRep(format!(
                    "dimension {j} assigns {} intervals, expected {n}",
                    d.len()
                )));
            }
            if let Some(v) = d.0.iter().position(|iv| iv.lo > iv.hi) {
                return Err(Error::InvalidInputRep(format!(
                    "dimension {j}: vertex {v} has lo > hi"
                )));
            }
        }
        Ok(BoxRepresentation { n, dims, meta })
    }

    /// One dimension in which every vertex gets `[0, 0]`.
    pub fn universal(n: usize) -> Self {
        BoxRepresentation {
            n,
            dims: vec![IntervalAssignment::uniform(n, Interval::point(0))],
            meta: RepMetadata::new("universal"),
        }
    }

    /// One dimension of pairwise disjoint points: the edgeless graph.
    pub fn edgeless(n: usize) -> Self {
        BoxRepresentation {
            n,
            dims: vec![IntervalAssignment(
                (0..n as i64).map(Interval::point).collect(),
            )],
            meta: RepMetadata::new("edgeless"),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[IntervalAssignment] {
        &self.dims
    }

    pub fn into_dims(self) -> Vec<IntervalAssignment> {
        self.dims
    }

    pub fn with_meta(mut self, meta: RepMetadata) -> Self {
        self.meta = meta;
        self
    }

    /// The box of vertex `v`, one interval per dimension.
    pub fn box_of(&self, v: usize) -> Vec<Interval> {
        self.dims.iter().map(|d| d[v]).collect()
    }

    /// Whether the boxes of `u` and `v` intersect.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.dims.iter().all(|d| d[u].intersects(&d[v]))
    }
}

use std::fmt;

use rayon::prelude::*;

use super::BoxRepresentation;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub valid: bool,
    /// Smallest edge whose endpoints are separated in some dimension.
    pub missing_edge: Option<(usize, usize)>,
    /// Smallest non-edge whose endpoints are separated in no dimension.
    pub uncovered_nonedge: Option<(usize, usize)>,
}

impl VerifyReport {
    pub fn into_result(self) -> Result<()> {
        if let Some((u, v)) = self.missing_edge {
            return Err(Error::MissingEdge(u, v));
        }
        if let Some((u, v)) = self.uncovered_nonedge {
            return Err(Error::UncoveredNonedge(u, v));
        }
        Ok(())
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.valid {
            return write!(f, "valid");
        }
        write!(f, "invalid")?;
        if let Some((u, v)) = self.missing_edge {
            write!(f, "; missing edge {u} {v}")?;
        }
        if let Some((u, v)) = self.uncovered_nonedge {
            write!(f, "; uncovered non-edge {u} {v}")?;
        }
        Ok(())
    }
}

/// Checks that the intersection of the representation's interval graphs is
/// exactly `g`.
pub fn verify_representation(g: &Graph, r: &BoxRepresentation) -> Result<VerifyReport> {
    if r.n() != g.n() {
        return Err(Error::DimensionMismatch {
            rep: r.n(),
            graph: g.n(),
        });
    }
    let n = g.n();
    // Per row u: the first bad partner v > u of each kind. Rows are then
    // reduced in ascending order, so witnesses are lexicographically least
    // regardless of scheduling.
    let rows: Vec<(Option<usize>, Option<usize>)> = (0..n)
        .into_par_iter()
        .map(|u| {
            let mut missing = None;
            let mut uncovered = None;
            for v in u + 1..n {
                if missing.is_some() && uncovered.is_some() {
                    break;
                }
                let meets = r.adjacent(u, v);
                if g.has_edge(u, v) {
                    if !meets && missing.is_none() {
                        missing = Some(v);
                    }
                } else if meets && uncovered.is_none() {
                    uncovered = Some(v);
                }
            }
            (missing, uncovered)
        })
        .collect();
    let missing_edge = rows
        .iter()
        .enumerate()
        .find_map(|(u, (m, _))| m.map(|v| (u, v)));
    let uncovered_nonedge = rows
        .iter()
        .enumerate()
        .find_map(|(u, (_, c))| c.map(|v| (u, v)));
    Ok(VerifyReport {
        valid: missing_edge.is_none() && uncovered_nonedge.is_none(),
        missing_edge,
        uncovered_nonedge,
    })
}

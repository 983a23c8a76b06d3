//! Box representations of graphs: constructions that certify upper bounds
//! on boxicity, an exact verifier, brute-force exact solvers for small
//! inputs, and the adjacency-poset dimension bound.
//!
//! Every representation produced by a builder or pipeline is checked with
//! [`interval::verify_representation`] before it is returned.

pub mod builders;
pub mod cli;
pub mod combinators;
mod error;
pub mod exact;
pub mod graph;
pub mod interval;
pub mod pipelines;
pub mod poset;

pub use error::{Error, Result};

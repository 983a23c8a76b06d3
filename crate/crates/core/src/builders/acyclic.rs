use super::forest_rep;
use crate::error::Result;
use crate::graph::{Coloring, Graph};
use crate::interval::{BoxRepresentation, IntervalAssignment, RepMetadata};

/// `k(k-1)` dimensions from an acyclic `k`-coloring: for every pair of
/// color classes, the two-dimensional forest representation of the forest
/// they induce, with all other vertices spanning the whole dimension.
///
/// A non-edge between colors `a != b` is killed in the `{a, b}` block; a
/// non-edge inside class `a` is killed in any block `{a, c}`.
pub fn acyclic_rep(g: &Graph, c: &Coloring) -> Result<BoxRepresentation> {
    c.validate_acyclic(g)?;
    let n = g.n();
    let k = c.k();
    if k <= 1 {
        // A proper coloring with one color means no edges.
        let meta = RepMetadata {
            bound: "1".into(),
            ..RepMetadata::new("acyclic_rep")
        };
        return Ok(BoxRepresentation::edgeless(n).with_meta(meta.note("colors", k)));
    }
    let mut dims = Vec::with_capacity(k * (k - 1));
    for a in 0..k {
        for b in a + 1..k {
            let members: Vec<usize> = (0..n).filter(|&v| c.color(v) == a || c.color(v) == b).collect();
            let forest = g.induced(&members);
            let local = forest_rep(&forest)?;
            for dim in local.dims() {
                let span = dim.span().expect("every color class is nonempty");
                let mut full = IntervalAssignment::uniform(n, span);
                for (i, &v) in members.iter().enumerate() {
                    full.0[v] = dim[i];
                }
                dims.push(full);
            }
        }
    }
    let meta = RepMetadata {
        bound: format!("k(k-1) = {}", k * (k - 1)),
        ..RepMetadata::new("acyclic_rep")
    }
    .note("colors", k);
    BoxRepresentation::new(n, dims, meta)
}

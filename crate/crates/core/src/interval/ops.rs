use super::{verify_representation, BoxRepresentation, Interval, IntervalAssignment, RepMetadata};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Concatenates the dimensions of representations of two supergraphs of
/// `g`. Valid exactly when every non-edge of `g` is a non-edge of one of
/// them; the result is checked against `g`.
pub fn concat(r1: &BoxRepresentation, r2: &BoxRepresentation, g: &Graph) -> Result<BoxRepresentation> {
    for r in [r1, r2] {
        if r.n() != g.n() {
            return Err(Error::DimensionMismatch {
                rep: r.n(),
                graph: g.n(),
            });
        }
    }
    let dims = r1.dims().iter().chain(r2.dims()).cloned().collect();
    let meta = RepMetadata::new("concat")
        .note("left_dims", r1.d())
        .note("right_dims", r2.d());
    let out = BoxRepresentation::new(g.n(), dims, meta)?;
    verify_representation(g, &out)?.into_result()?;
    Ok(out)
}

/// Lifts a representation over the vertex list `subset` (ascending, local
/// vertex `i` is `subset[i]`) to `0..n`. Vertices outside `subset` get the
/// full span of each dimension and so become universal.
pub fn extend_universal(r: &BoxRepresentation, subset: &[usize], n: usize) -> Result<BoxRepresentation> {
    if subset.len() != r.n() {
        return Err(Error::DimensionMismatch {
            rep: r.n(),
            graph: subset.len(),
        });
    }
    if subset.windows(2).any(|w| w[0] >= w[1]) || subset.last().is_some_and(|&v| v >= n) {
        return Err(Error::PreconditionViolation(
            "subset must be strictly ascending and inside 0..n".into(),
        ));
    }
    let dims = r
        .dims()
        .iter()
        .map(|dim| {
            let span = dim.span().unwrap_or(Interval::point(0));
            let mut out = vec![span; n];
            for (i, &v) in subset.iter().enumerate() {
                out[v] = dim[i];
            }
            IntervalAssignment(out)
        })
        .collect();
    let meta = r.meta.clone().note("extended_universal", n - subset.len());
    BoxRepresentation::new(n, dims, meta)
}

/// Combines per-component representations into one for the disjoint union.
/// The first dimension places components in disjoint coordinate ranges;
/// components with fewer dimensions are padded with a common interval.
pub fn merge_components(reps: &[BoxRepresentation], maps: &[Vec<usize>], n: usize) -> Result<BoxRepresentation> {
    if reps.is_empty() {
        return Err(Error::EmptyInput("no component representations"));
    }
    if reps.len() != maps.len() {
        return Err(Error::PreconditionViolation(format!(
            "{} representations but {} component maps",
            reps.len(),
            maps.len()
        )));
    }
    let mut seen = vec![false; n];
    for (r, map) in reps.iter().zip(maps) {
        if r.n() != map.len() {
            return Err(Error::DimensionMismatch {
                rep: r.n(),
                graph: map.len(),
            });
        }
        for &v in map {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::PreconditionViolation(format!(
                    "vertex {v} out of range or in two components"
                )));
            }
        }
    }
    if let Some(v) = seen.iter().position(|s| !s) {
        return Err(Error::PreconditionViolation(format!("vertex {v} is in no component")));
    }

    let d = reps.iter().map(|r| r.d()).max().expect("reps is nonempty");
    let mut dims = vec![IntervalAssignment(vec![Interval::point(0); n]); d];
    let mut next_start = 0i64;
    for (r, map) in reps.iter().zip(maps) {
        let Some(span) = r.dims()[0].span() else {
            continue;
        };
        let offset = next_start - span.lo;
        let first = r.dims()[0].shifted(offset);
        for (i, &v) in map.iter().enumerate() {
            dims[0].0[v] = first[i];
        }
        next_start = span.hi + offset + 1;
        for (j, dim) in dims.iter_mut().enumerate().skip(1) {
            for (i, &v) in map.iter().enumerate() {
                dim.0[v] = r.dims().get(j).map_or(span, |own| own[i]);
            }
        }
    }
    let meta = RepMetadata::new("merge_components").note("components", reps.len());
    BoxRepresentation::new(n, dims, meta)
}

//! Composition of representations: completing a set `S` on top of a
//! representation of `G` with the edges inside `S` removed, and lifting a
//! quotient representation back to the full vertex set.
//!
//! Both constructions are checked against the target graph on every call.

use crate::error::{Error, Result};
use crate::graph::{Graph, QuotientResult};
use crate::interval::{extend_universal, verify_representation, BoxRepresentation, Interval, IntervalAssignment, RepMetadata};

fn check_subset(s: &[usize], n: usize) -> Result<()> {
    if s.windows(2).any(|w| w[0] >= w[1]) || s.last().is_some_and(|&v| v >= n) {
        return Err(Error::PreconditionViolation(
            "S must be strictly ascending and inside 0..n".into(),
        ));
    }
    Ok(())
}

/// Builds a representation of `g` with exactly `2 * d(r_h) + d(r_s)`
/// dimensions from a representation `r_h` of `H = g` minus the edges inside
/// `s` and a representation `r_s` of `g[s]` (local ids follow `s`).
///
/// Every dimension `I` of `r_h` is emitted twice. In `I^R` each member of `S`
/// is stretched right to a common point beyond `I`; in `I^L` it is stretched
/// left to a common point before `I`. Members of `S` then meet pairwise in
/// both, while a non-edge `uv` with `u` outside `S` that `I` separated stays
/// separated in whichever copy does not stretch `v` towards `u`. The
/// dimensions of `r_s`, with everyone outside `S` universal, kill the
/// non-edges inside `S`.
pub fn lemma2_compose(r_h: &BoxRepresentation, r_s: &BoxRepresentation, s: &[usize], g: &Graph) -> Result<BoxRepresentation> {
    let n = g.n();
    check_subset(s, n)?;
    if r_h.n() != n {
        return Err(Error::PreconditionViolation(format!(
            "representation of H has {} vertices, G has {n}",
            r_h.n()
        )));
    }
    if s.is_empty() {
        let report = verify_representation(g, r_h)?;
        if !report.valid {
            return Err(Error::InvalidInputRep(format!("H representation: {report}")));
        }
        return Ok(r_h.clone());
    }
    if r_s.n() != s.len() {
        return Err(Error::PreconditionViolation(format!(
            "representation of G[S] has {} vertices, |S| = {}",
            r_s.n(),
            s.len()
        )));
    }
    let h = g.without_edges_inside(s);
    let report = verify_representation(&h, r_h)?;
    if !report.valid {
        return Err(Error::InvalidInputRep(format!("H representation: {report}")));
    }
    let report = verify_representation(&g.induced(s), r_s)?;
    if !report.valid {
        return Err(Error::InvalidInputRep(format!("G[S] representation: {report}")));
    }

    let mut dims = Vec::with_capacity(2 * r_h.d() + r_s.d());
    for dim in r_h.dims() {
        let span = dim.span().expect("n >= |S| >= 1");
        let (right, left) = (span.hi + 1, span.lo - 1);
        let mut stretched_right = dim.clone();
        let mut stretched_left = dim.clone();
        for &v in s {
            stretched_right.0[v] = Interval::new(dim[v].lo, right);
            stretched_left.0[v] = Interval::new(left, dim[v].hi);
        }
        dims.push(stretched_right);
        dims.push(stretched_left);
    }
    dims.extend(extend_universal(r_s, s, n)?.into_dims());

    let meta = RepMetadata {
        bound: format!("2*{} + {} = {}", r_h.d(), r_s.d(), 2 * r_h.d() + r_s.d()),
        ..RepMetadata::new("lemma2_compose")
    }
    .note("h_dims", r_h.d())
    .note("s_dims", r_s.d())
    .note("s_size", s.len());
    let out = BoxRepresentation::new(n, dims, meta)?;
    let report = verify_representation(g, &out)?;
    if !report.valid {
        return Err(Error::ConstructionFailed {
            stage: "lemma2_compose",
            report,
        });
    }
    Ok(out)
}

/// Gives every vertex the box of its class representative in a
/// representation of the quotient graph (with its representatives made a
/// clique), producing a representation of `target`.
pub fn quotient_lift(r_q: &BoxRepresentation, q: &QuotientResult, target: &Graph) -> Result<BoxRepresentation> {
    if r_q.n() != q.quotient_graph.n() {
        return Err(Error::ClassMapIncomplete(format!(
            "representation has {} vertices, quotient has {}",
            r_q.n(),
            q.quotient_graph.n()
        )));
    }
    if q.rep_of.len() != target.n() {
        return Err(Error::ClassMapIncomplete(format!(
            "class map covers {} vertices, target has {}",
            q.rep_of.len(),
            target.n()
        )));
    }
    let index = (0..target.n())
        .map(|v| {
            q.quotient_index(v)
                .ok_or_else(|| Error::ClassMapIncomplete(format!("vertex {v} has no quotient vertex")))
        })
        .collect::<Result<Vec<_>>>()?;
    let dims = r_q
        .dims()
        .iter()
        .map(|dim| IntervalAssignment(index.iter().map(|&i| dim[i]).collect()))
        .collect();
    let meta = RepMetadata::new("quotient_lift").note("classes", q.classes.len());
    let out = BoxRepresentation::new(target.n(), dims, meta)?;
    let report = verify_representation(target, &out)?;
    if !report.valid {
        return Err(Error::ConstructionFailed {
            stage: "quotient_lift",
            report,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{forest_rep, roberts_rep};
    use crate::graph::quotient_by_a_neighborhood;

    #[test]
    fn empty_s_returns_input() {
        let g = Graph::path(4);
        let r = forest_rep(&g).unwrap();
        let out = lemma2_compose(&r, &BoxRepresentation::universal(0), &[], &g).unwrap();
        assert_eq!(out, r);
    }

    #[test]
    fn c4_with_nonadjacent_pair() {
        // S = {0, 2}: no edges inside S, so H = C_4 itself.
        let g = Graph::cycle(4);
        let r_h = roberts_rep(&g);
        let r_s = roberts_rep(&g.induced(&[0, 2]));
        let out = lemma2_compose(&r_h, &r_s, &[0, 2], &g).unwrap();
        assert_eq!(out.d(), 2 * r_h.d() + r_s.d());
    }

    #[test]
    fn completes_a_clique_inside_s() {
        // G = K_4 on S = {0,1,2,3} plus pendant 4 on 0; H = star-ish forest.
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4)]).unwrap();
        let s = [0, 1, 2, 3];
        let h = g.without_edges_inside(&s);
        let r_h = forest_rep(&h).unwrap();
        let r_s = roberts_rep(&g.induced(&s));
        let out = lemma2_compose(&r_h, &r_s, &s, &g).unwrap();
        assert_eq!(out.d(), 2 * 2 + 1);
    }

    #[test]
    fn rejects_wrong_inputs() {
        let g = Graph::cycle(4);
        let r_s = BoxRepresentation::edgeless(2);
        // A representation of G, not of H = G minus edges inside {0, 1}.
        let r_g = roberts_rep(&g);
        assert!(matches!(
            lemma2_compose(&r_g, &r_s, &[0, 1], &g),
            Err(Error::InvalidInputRep(_))
        ));
        assert!(matches!(
            lemma2_compose(&r_g, &r_s, &[1, 0], &g),
            Err(Error::PreconditionViolation(_))
        ));
    }

    #[test]
    fn lift_star() {
        let g = Graph::star(4);
        let q = quotient_by_a_neighborhood(&g, &[0]);
        let h1 = q.quotient_graph.with_clique_on(&q.representative_indices());
        let r_q = roberts_rep(&h1);
        let g1 = g.with_clique_on(&[1, 2, 3, 4]);
        let lifted = quotient_lift(&r_q, &q, &g1).unwrap();
        for v in 2..5 {
            assert_eq!(lifted.box_of(v), lifted.box_of(1));
        }
    }

    #[test]
    fn lift_identity_when_a_is_everything() {
        let g = Graph::petersen();
        let all: Vec<usize> = (0..10).collect();
        let q = quotient_by_a_neighborhood(&g, &all);
        let r = roberts_rep(&g);
        assert_eq!(quotient_lift(&r, &q, &g).unwrap().dims(), r.dims());
    }

    #[test]
    fn lift_k23() {
        let g = Graph::complete_bipartite(2, 3);
        let q = quotient_by_a_neighborhood(&g, &[0, 1]);
        let h1 = q.quotient_graph.with_clique_on(&q.representative_indices());
        let lifted = quotient_lift(&roberts_rep(&h1), &q, &g.with_clique_on(&[2, 3, 4])).unwrap();
        assert_eq!(lifted.box_of(3), lifted.box_of(2));
        assert!(matches!(
            quotient_lift(&BoxRepresentation::universal(2), &q, &g),
            Err(Error::ClassMapIncomplete(_))
        ));
    }
}

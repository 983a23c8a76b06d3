use crate::graph::Graph;
use crate::interval::{BoxRepresentation, Interval, IntervalAssignment, RepMetadata};

/// At most `max(1, n/2)` dimensions: one gadget dimension per greedily
/// chosen non-adjacent pair.
///
/// For a pair `(a, b)` the dimension places `a` at `[0,2]`, `b` at `[4,6]`,
/// common neighbors at `[2,4]`, neighbors of `a` only at `[2,3]`, of `b` only
/// at `[3,4]` and everyone else at `[3,3]`. It separates `a` and `b` from all
/// their non-neighbors. Once no non-adjacent pair of unpaired vertices is
/// left, the unpaired vertices form a clique, so every non-edge touches a
/// paired vertex and is killed in that vertex's dimension.
pub fn roberts_rep(g: &Graph) -> BoxRepresentation {
    let n = g.n();
    let mut used = vec![false; n];
    let mut dims = Vec::new();
    for a in 0..n {
        if used[a] {
            continue;
        }
        let Some(b) = (a + 1..n).find(|&b| !used[b] && !g.has_edge(a, b)) else {
            continue;
        };
        used[a] = true;
        used[b] = true;
        let dim = (0..n)
            .map(|v| {
                if v == a {
                    Interval::new(0, 2)
                } else if v == b {
                    Interval::new(4, 6)
                } else {
                    match (g.has_edge(v, a), g.has_edge(v, b)) {
                        (true, true) => Interval::new(2, 4),
                        (true, false) => Interval::new(2, 3),
                        (false, true) => Interval::new(3, 4),
                        (false, false) => Interval::point(3),
                    }
                }
            })
            .collect();
        dims.push(IntervalAssignment(dim));
    }
    let pairs = dims.len();
    if dims.is_empty() {
        dims.push(IntervalAssignment::uniform(n, Interval::point(0)));
    }
    let meta = RepMetadata {
        bound: format!("max(1, floor(n/2)) = {}", (n / 2).max(1)),
        ..RepMetadata::new("roberts_rep")
    }
    .note("pairs", pairs);
    BoxRepresentation::new(n, dims, meta).expect("gadget dimensions are well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Model};
    use crate::interval::verify_representation;

    fn check(g: &Graph) -> usize {
        let r = roberts_rep(g);
        assert!(verify_representation(g, &r).unwrap().valid, "{g:?}");
        assert!(r.d() <= (g.n() / 2).max(1));
        r.d()
    }

    #[test]
    fn complete_graph_gets_one_dimension() {
        assert_eq!(check(&Graph::complete(3)), 1);
        assert_eq!(check(&Graph::empty(0)), 1);
        assert_eq!(check(&Graph::empty(1)), 1);
    }

    #[test]
    fn c4_uses_two() {
        assert_eq!(check(&Graph::cycle(4)), 2);
    }

    #[test]
    fn p3_pairs_the_ends() {
        assert_eq!(check(&Graph::path(3)), 1);
        assert_eq!(roberts_rep(&Graph::path(3)).dims()[0][1], Interval::new(2, 4));
    }

    #[test]
    fn copm_hits_the_ceiling() {
        for k in 1..=6 {
            let g = generate(Model::Copm { k }, 0).unwrap();
            assert_eq!(check(&g), k);
        }
    }

    #[test]
    fn assorted_graphs() {
        check(&Graph::petersen());
        check(&Graph::star(7));
        check(&Graph::empty(5));
        check(&Graph::complete_bipartite(3, 4));
    }
}

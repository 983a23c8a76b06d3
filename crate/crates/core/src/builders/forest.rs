use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::{BoxRepresentation, Interval, IntervalAssignment, RepMetadata};

/// Two-dimensional representation of a forest.
///
/// Each tree is rooted at its smallest vertex and explored depth-first with
/// children in ascending order. Dimension 0 gives `v` the interval
/// `[depth, depth + 1]`; dimension 1 gives `[pre, post]` from one DFS clock
/// shared by all trees. Boxes then meet exactly for parent-child pairs: the
/// clock intervals nest only along ancestor chains, and along a chain the
/// depth intervals meet only at distance one.
pub fn forest_rep(f: &Graph) -> Result<BoxRepresentation> {
    if let Some((u, v)) = f.cycle_edge() {
        return Err(Error::NotAForest(u, v));
    }
    let n = f.n();
    let mut depth = vec![0i64; n];
    let mut pre = vec![0i64; n];
    let mut post = vec![0i64; n];
    let mut visited = vec![false; n];
    let mut clock = 0i64;
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        pre[root] = clock;
        clock += 1;
        // (vertex, index of next neighbor to look at)
        let mut stack = vec![(root, 0usize)];
        while let Some(top) = stack.last_mut() {
            let v = top.0;
            let nbrs = f.neighbors(v);
            let mut i = top.1;
            while i < nbrs.len() && visited[nbrs[i]] {
                i += 1;
            }
            top.1 = i + 1;
            if let Some(&w) = nbrs.get(i) {
                visited[w] = true;
                depth[w] = depth[v] + 1;
                pre[w] = clock;
                clock += 1;
                stack.push((w, 0));
            } else {
                post[v] = clock;
                clock += 1;
                stack.pop();
            }
        }
    }
    let depth_dim = IntervalAssignment((0..n).map(|v| Interval::new(depth[v], depth[v] + 1)).collect());
    let dfs_dim = IntervalAssignment((0..n).map(|v| Interval::new(pre[v], post[v])).collect());
    let meta = RepMetadata {
        bound: "2".into(),
        ..RepMetadata::new("forest_rep")
    };
    BoxRepresentation::new(n, vec![depth_dim, dfs_dim], meta)
}

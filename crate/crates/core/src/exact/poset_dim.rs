//! Exact poset dimension.
//!
//! A family of linear extensions realizes `P` iff every critical pair
//! `(a, b)` (incomparable, everything below `a` is below `b`, everything
//! above `b` is above `a`) is reversed, i.e. `b < a`, in some member. A set
//! of pairs can be reversed by one extension iff adding all `b < a` to `P`
//! keeps it acyclic. So `dim(P) <= d` iff the critical pairs split into `d`
//! such reversible groups, which is searched depth-first with each group's
//! transitive closure maintained as bitmasks.

use crate::error::{Error, Result};
use crate::poset::Poset;

pub const POSET_LIMIT: usize = 10;

/// Critical pairs `(a, b)`; reversing means placing `b` below `a`.
pub(crate) fn critical_pairs(p: &Poset) -> Vec<(usize, usize)> {
    let n = p.size();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if p.comparable(a, b) {
                continue;
            }
            let down_ok = (0..n).all(|x| !p.less(x, a) || p.less(x, b));
            let up_ok = (0..n).all(|y| !p.less(b, y) || p.less(a, y));
            if down_ok && up_ok {
                out.push((a, b));
            }
        }
    }
    out
}

/// `up[x]`: elements strictly above `x` in one group's augmented order.
type Closure = Vec<u32>;

/// Adds `b < a` to the closure; `false` if that creates a cycle.
fn add_below(up: &mut Closure, b: usize, a: usize) -> bool {
    if up[a] & (1 << b) != 0 {
        return false;
    }
    let raise = up[a] | (1 << a);
    for (x, above) in up.iter_mut().enumerate() {
        if x == b || *above & (1 << b) != 0 {
            *above |= raise;
        }
    }
    true
}

struct Search<'a> {
    pairs: &'a [(usize, usize)],
    groups: Vec<Closure>,
    d: usize,
    groups_base: Closure,
}

impl Search<'_> {
    fn run(&mut self, i: usize) -> bool {
        let Some(&(a, b)) = self.pairs.get(i) else {
            return true;
        };
        // Already reversed by some group: no choice to make.
        if self.groups.iter().any(|up| up[b] & (1 << a) != 0) {
            return self.run(i + 1);
        }
        let open = self.groups.len();
        for g in 0..open {
            let saved = self.groups[g].clone();
            if add_below(&mut self.groups[g], b, a) && self.run(i + 1) {
                return true;
            }
            self.groups[g] = saved;
        }
        if open < self.d {
            let mut fresh = self.base();
            if add_below(&mut fresh, b, a) {
                self.groups.push(fresh);
                if self.run(i + 1) {
                    return true;
                }
                self.groups.pop();
            }
        }
        false
    }

    fn base(&self) -> Closure {
        self.groups_base.clone()
    }
}

pub fn exact_poset_dimension(p: &Poset, limit: usize) -> Result<usize> {
    let n = p.size();
    let limit = limit.min(32);
    if n > limit {
        return Err(Error::SizeLimitExceeded {
            what: "poset ground set",
            actual: n,
            limit,
        });
    }
    let mut pairs = critical_pairs(p);
    if pairs.is_empty() {
        return Ok(1);
    }
    // Put each pair next to its reverse so conflicts surface early.
    pairs.sort_by_key(|&(a, b)| (a.min(b), a.max(b), a));
    let base: Closure = (0..n)
        .map(|x| (0..n).filter(|&y| p.less(x, y)).fold(0u32, |m, y| m | (1 << y)))
        .collect();
    for d in 1.. {
        let mut s = Search {
            pairs: &pairs,
            groups: Vec::new(),
            d,
            groups_base: base.clone(),
        };
        if s.run(0) {
            return Ok(d);
        }
    }
    unreachable!("each critical pair alone is reversible")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::poset::adjacency_poset;

    /// Independent oracle: enumerate every linear extension, then the
    /// smallest family whose intersection is exactly `p`.
    fn brute_dimension(p: &Poset) -> usize {
        fn extend(p: &Poset, prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
            if prefix.len() == p.size() {
                out.push(prefix.clone());
                return;
            }
            for x in 0..p.size() {
                if !used[x] && (0..p.size()).all(|y| !p.less(y, x) || used[y]) {
                    used[x] = true;
                    prefix.push(x);
                    extend(p, prefix, used, out);
                    prefix.pop();
                    used[x] = false;
                }
            }
        }
        let mut exts = Vec::new();
        extend(p, &mut Vec::new(), &mut vec![false; p.size()], &mut exts);
        let n = p.size();
        let ranks: Vec<Vec<usize>> = exts
            .iter()
            .map(|e| {
                let mut r = vec![0; n];
                for (i, &x) in e.iter().enumerate() {
                    r[x] = i;
                }
                r
            })
            .collect();
        let realizes = |family: &[usize]| {
            (0..n).all(|a| {
                (0..n).all(|b| a == b || p.less(a, b) || family.iter().any(|&f| ranks[f][a] > ranks[f][b]))
            })
        };
        for d in 1..=exts.len() {
            let mut idx: Vec<usize> = (0..d).collect();
            loop {
                if realizes(&idx) {
                    return d;
                }
                // next combination
                let mut i = d;
                while i > 0 && idx[i - 1] == exts.len() - d + i - 1 {
                    i -= 1;
                }
                if i == 0 {
                    break;
                }
                idx[i - 1] += 1;
                for j in i..d {
                    idx[j] = idx[j - 1] + 1;
                }
            }
        }
        unreachable!()
    }

    #[test]
    fn small_examples() {
        assert_eq!(exact_poset_dimension(&Poset::chain(5), POSET_LIMIT).unwrap(), 1);
        assert_eq!(exact_poset_dimension(&Poset::antichain(2), POSET_LIMIT).unwrap(), 2);
        assert_eq!(exact_poset_dimension(&Poset::antichain(10), POSET_LIMIT).unwrap(), 2);
        assert_eq!(exact_poset_dimension(&Poset::antichain(1), POSET_LIMIT).unwrap(), 1);
    }

    #[test]
    fn standard_example_s3_has_dimension_3() {
        // a_i < b_j for i != j.
        let pairs = (0..3).flat_map(|i| (0..3).filter(move |&j| j != i).map(move |j| (i, 3 + j)));
        let s3 = Poset::from_strict(6, pairs).unwrap();
        assert_eq!(exact_poset_dimension(&s3, POSET_LIMIT).unwrap(), 3);
        assert_eq!(brute_dimension(&s3), 3);
    }

    #[test]
    fn adjacency_poset_of_k2() {
        let p = adjacency_poset(&Graph::complete(2));
        let d = exact_poset_dimension(p.poset(), POSET_LIMIT).unwrap();
        assert_eq!(d, brute_dimension(p.poset()));
        assert_eq!(d, 2);
    }

    #[test]
    fn agrees_with_brute_force_on_small_adjacency_posets() {
        let graphs = [
            Graph::path(3),
            Graph::complete(3),
            Graph::empty(3),
            Graph::from_edges(3, [(0, 1)]).unwrap(),
        ];
        for g in &graphs {
            let p = adjacency_poset(g);
            assert_eq!(
                exact_poset_dimension(p.poset(), POSET_LIMIT).unwrap(),
                brute_dimension(p.poset()),
                "{g:?}"
            );
        }
    }

    #[test]
    fn size_guard() {
        assert!(exact_poset_dimension(&Poset::antichain(11), POSET_LIMIT).is_err());
    }
}

use std::collections::BTreeMap;

use super::Graph;

/// Result of collapsing `V \ A` by A-neighborhood.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientResult {
    /// The distinguished set, ascending.
    pub a: Vec<usize>,
    /// Classes of `V \ A`, each ascending, ordered by representative.
    pub classes: Vec<Vec<usize>>,
    /// Representative (lowest id) of each class, ascending.
    pub representatives: Vec<usize>,
    /// Original vertex of each quotient vertex: `A` followed by the
    /// representatives, sorted ascending as a whole.
    pub vertices: Vec<usize>,
    /// Induced graph on `A ∪ representatives` after deleting all edges
    /// inside `V \ A`.
    pub quotient_graph: Graph,
    /// Representative of every vertex; members of `A` map to themselves.
    pub rep_of: Vec<usize>,
}

impl QuotientResult {
    /// Index in `quotient_graph` of the vertex carrying `v`'s box.
    pub fn quotient_index(&self, v: usize) -> Option<usize> {
        self.vertices.binary_search(&self.rep_of[v]).ok()
    }

    /// Quotient-graph indices of the class representatives.
    pub fn representative_indices(&self) -> Vec<usize> {
        self.representatives
            .iter()
            .map(|r| self.vertices.binary_search(r).expect("representative is a quotient vertex"))
            .collect()
    }
}

/// Deletes the edges inside `V \ A`, then identifies vertices of `V \ A`
/// with equal A-neighborhoods (keeping the lowest id of each class).
pub fn quotient_by_a_neighborhood(g: &Graph, a: &[usize]) -> QuotientResult {
    let n = g.n();
    let mut a_sorted = a.to_vec();
    a_sorted.sort_unstable();
    a_sorted.dedup();
    let in_a = g.membership(&a_sorted);

    let mut by_nbhd: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for v in (0..n).filter(|&v| !in_a[v]) {
        let key: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| in_a[w]).collect();
        by_nbhd.entry(key).or_default().push(v);
    }
    let mut classes: Vec<Vec<usize>> = by_nbhd.into_values().collect();
    classes.sort_by_key(|c| c[0]);

    let mut rep_of: Vec<usize> = (0..n).collect();
    for class in &classes {
        for &v in class {
            rep_of[v] = class[0];
        }
    }
    let representatives: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    let mut vertices: Vec<usize> = a_sorted.iter().chain(&representatives).copied().collect();
    vertices.sort_unstable();

    let outside: Vec<usize> = (0..n).filter(|&v| !in_a[v]).collect();
    let quotient_graph = g.without_edges_inside(&outside).induced(&vertices);

    QuotientResult {
        a: a_sorted,
        classes,
        representatives,
        vertices,
        quotient_graph,
        rep_of,
    }
}

/// Outcome of checking every `K_{3,k}` with its 3-side in `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct K3kReport {
    pub pass: bool,
    pub bound: usize,
    /// Largest common-neighbor count in `V \ A` over all triples of `A`.
    pub max_count: usize,
    /// Lexicographically first triple attaining `max_count`.
    pub witness: Option<[usize; 3]>,
}

/// For every triple of `A`, counts common neighbors in `V \ A` and compares
/// the maximum against `2g + 2`.
pub fn assert_k3k(g: &Graph, a: &[usize], genus: usize) -> K3kReport {
    let mut a_sorted = a.to_vec();
    a_sorted.sort_unstable();
    a_sorted.dedup();
    let in_a = g.membership(&a_sorted);
    let bound = 2 * genus + 2;
    let mut max_count = 0;
    let mut witness = None;
    for (i, &x) in a_sorted.iter().enumerate() {
        for (j, &y) in a_sorted.iter().enumerate().skip(i + 1) {
            for &z in &a_sorted[j + 1..] {
                let count = g
                    .neighbors(x)
                    .iter()
                    .filter(|&&v| !in_a[v] && g.has_edge(v, y) && g.has_edge(v, z))
                    .count();
                if witness.is_none() || count > max_count {
                    max_count = count;
                    witness = Some([x, y, z]);
                }
            }
        }
    }
    let pass = max_count <= bound;
    K3kReport {
        pass,
        bound,
        max_count,
        witness,
    }
}

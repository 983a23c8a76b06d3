use std::fmt;

use super::Graph;
use crate::error::{Error, Result};

/// A non-negative rational degree threshold.
///
/// Peeling compares integer degrees against the threshold by
/// cross-multiplication, so no floating point enters the loop itself.
/// Irrational thresholds such as `sqrt(m / ln n)` are stored as a rational
/// with denominator `10^6` whose integer part is certified to equal the
/// integer part of the real value; every integer comparison therefore gives
/// the same answer as against the real threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Threshold {
    num: u64,
    den: u64,
}

const SCALE: u64 = 1_000_000;

impl Threshold {
    pub fn integer(k: u64) -> Self {
        Threshold { num: k, den: 1 }
    }

    pub fn ratio(num: u64, den: u64) -> Self {
        assert!(den > 0, "threshold denominator must be positive");
        Threshold { num, den }
    }

    /// `(m / ln n)^(1/root)` with natural log. Requires `n >= 2`.
    pub fn root_of_m_over_ln_n(m: usize, n: usize, root: u32) -> Self {
        assert!(n >= 2, "ln n must be positive");
        assert!(root >= 1);
        let ln_n = (n as f64).ln();
        let m_f = m as f64;
        let real = (m_f / ln_n).powf(1.0 / root as f64);
        // Certify the integer part: floor is the largest f with f^root * ln n <= m.
        // Ties cannot occur since ln n is irrational for integer n >= 2.
        let mut floor = real.floor() as u64;
        while ((floor + 1) as f64).powi(root as i32) * ln_n <= m_f {
            floor += 1;
        }
        while floor > 0 && (floor as f64).powi(root as i32) * ln_n > m_f {
            floor -= 1;
        }
        // For m > 0 the real value is irrational, hence strictly above its floor.
        let scaled = (real * SCALE as f64).floor() as u64;
        let num = scaled.clamp(floor * SCALE + u64::from(m > 0), floor * SCALE + SCALE - 1);
        Threshold { num, den: SCALE }
    }

    /// `sqrt(m / ln n)`.
    pub fn sqrt_m_over_ln_n(m: usize, n: usize) -> Self {
        Self::root_of_m_over_ln_n(m, n, 2)
    }

    /// True when an integer degree `d` satisfies `d <= self`.
    #[inline]
    pub fn admits(&self, d: usize) -> bool {
        (d as u128) * (self.den as u128) <= self.num as u128
    }

    pub fn floor(&self) -> u64 {
        self.num / self.den
    }

    pub fn ceil(&self) -> u64 {
        self.num.div_ceil(self.den)
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.3}", self.to_f64())
    }
}

/// Min-degree peeling. Returns an order in which every vertex has at most
/// `k` neighbors later in the order, with `k` the degeneracy.
pub fn degeneracy_order(g: &Graph) -> (Vec<usize>, usize) {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    let mut k = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("some vertex is alive");
        k = k.max(deg[v]);
        alive[v] = false;
        order.push(v);
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
            }
        }
    }
    (order, k)
}

/// Maximum number of later-in-order neighbors over all vertices.
pub fn forward_degeneracy(g: &Graph, order: &[usize]) -> Result<usize> {
    let pos = positions(g.n(), order)?;
    Ok((0..g.n())
        .map(|v| g.neighbors(v).iter().filter(|&&w| pos[w] > pos[v]).count())
        .max()
        .unwrap_or(0))
}

/// Inverse of `order`, or an error when `order` is not a permutation of `0..n`.
pub(crate) fn positions(n: usize, order: &[usize]) -> Result<Vec<usize>> {
    if order.len() != n {
        return Err(Error::InvalidOrder(format!(
            "order has {} entries, graph has {n} vertices",
            order.len()
        )));
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(Error::InvalidOrder(format!(
                "vertex {v} out of range or repeated"
            )));
        }
        pos[v] = i;
    }
    Ok(pos)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeelResult {
    /// Surviving vertices, ascending.
    pub survivors: Vec<usize>,
    /// Removed vertices in removal order.
    pub removal_order: Vec<usize>,
    pub theta: Threshold,
}

impl PeelResult {
    /// Removal order followed by the survivors. In `G` minus the edges
    /// inside the survivor set, every vertex has at most `theta` neighbors
    /// later in this order.
    pub fn order(&self) -> Vec<usize> {
        self.removal_order
            .iter()
            .chain(&self.survivors)
            .copied()
            .collect()
    }

    /// Replays the peeling loop against `g` and checks both postconditions.
    pub fn is_consistent_with(&self, g: &Graph) -> bool {
        let n = g.n();
        let mut in_s = vec![true; n];
        let mut count = 0;
        for &v in &self.removal_order {
            if v >= n || !in_s[v] {
                return false;
            }
            let d = g.neighbors(v).iter().filter(|&&w| in_s[w]).count();
            if !self.theta.admits(d) {
                return false;
            }
            in_s[v] = false;
            count += 1;
        }
        let mut survivors: Vec<usize> = (0..n).filter(|&v| in_s[v]).collect();
        survivors.sort_unstable();
        count + survivors.len() == n
            && survivors == self.survivors
            && survivors.iter().all(|&v| {
                let d = g.neighbors(v).iter().filter(|&&w| in_s[w]).count();
                !self.theta.admits(d)
            })
    }
}

/// Repeatedly removes the smallest-id vertex with at most `theta`
/// neighbors among the remaining ones.
pub fn peel(g: &Graph, theta: Threshold) -> PeelResult {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut in_s = vec![true; n];
    let mut removal_order = Vec::new();
    while let Some(v) = (0..n).find(|&v| in_s[v] && theta.admits(deg[v])) {
        in_s[v] = false;
        removal_order.push(v);
        for &w in g.neighbors(v) {
            if in_s[w] {
                deg[w] -= 1;
            }
        }
    }
    PeelResult {
        survivors: (0..n).filter(|&v| in_s[v]).collect(),
        removal_order,
        theta,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degeneracy_examples() {
        assert_eq!(degeneracy_order(&Graph::complete(5)).1, 4);
        assert_eq!(degeneracy_order(&Graph::star(6)).1, 1);
        assert_eq!(degeneracy_order(&Graph::path(7)).1, 1);
        assert_eq!(degeneracy_order(&Graph::cycle(4)).1, 2);
        assert_eq!(degeneracy_order(&Graph::petersen()).1, 3);
    }

    #[test]
    fn degeneracy_order_witnesses_k() {
        let g = Graph::petersen();
        let (order, k) = degeneracy_order(&g);
        assert_eq!(forward_degeneracy(&g, &order).unwrap(), k);
    }

    #[test]
    fn peel_examples() {
        let c4 = Graph::cycle(4);
        let p = peel(&c4, Threshold::integer(1));
        assert_eq!(p.survivors, vec![0, 1, 2, 3]);
        assert!(p.removal_order.is_empty());

        let p = peel(&c4, Threshold::integer(2));
        assert!(p.survivors.is_empty());
        assert_eq!(p.removal_order.len(), 4);

        // Hand simulation: leaves 1..4 go first, then the center (now of
        // degree 1, smaller id than leaf 5), then leaf 5.
        let p = peel(&Graph::star(5), Threshold::integer(1));
        assert!(p.survivors.is_empty());
        assert_eq!(p.removal_order, vec![1, 2, 3, 4, 0, 5]);
        assert!(p.is_consistent_with(&Graph::star(5)));
    }

    #[test]
    fn fractional_threshold_compares_exactly() {
        let t = Threshold::ratio(5, 2);
        assert!(t.admits(2));
        assert!(!t.admits(3));
        assert_eq!((t.floor(), t.ceil()), (2, 3));
    }

    #[test]
    fn certified_root_threshold() {
        // sqrt(100 / ln 50) = 5.0557...
        let t = Threshold::sqrt_m_over_ln_n(100, 50);
        assert_eq!(t.floor(), 5);
        assert_eq!(t.ceil(), 6);
        assert_eq!(t.to_string(), "5.056");
        // m = 0 gives the zero threshold.
        assert_eq!(Threshold::sqrt_m_over_ln_n(0, 10).ceil(), 0);
        // (100 / ln 50)^(1/3) = 2.9445...
        assert_eq!(Threshold::root_of_m_over_ln_n(100, 50, 3).floor(), 2);
    }

    #[test]
    fn order_errors() {
        let g = Graph::path(3);
        assert!(forward_degeneracy(&g, &[0, 1]).is_err());
        assert!(forward_degeneracy(&g, &[0, 1, 1]).is_err());
        assert_eq!(forward_degeneracy(&g, &[1, 0, 2]).unwrap(), 2);
    }
}

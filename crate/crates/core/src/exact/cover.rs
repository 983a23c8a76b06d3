//! Minimum set cover over a universe of at most 32 elements, by iterative
//! deepening with branching on the least-covered uncovered element.

/// Drops sets contained in another set and duplicates.
pub(crate) fn maximal_sets(mut sets: Vec<u32>) -> Vec<u32> {
    sets.sort_unstable_by_key(|s| (std::cmp::Reverse(s.count_ones()), *s));
    sets.dedup();
    let mut kept: Vec<u32> = Vec::new();
    for s in sets {
        if !kept.iter().any(|&k| s & !k == 0) {
            kept.push(s);
        }
    }
    kept
}

fn search(sets: &[u32], universe: u32, covered: u32, left: usize, largest: u32, chosen: &mut Vec<u32>) -> bool {
    let uncovered = universe & !covered;
    if uncovered == 0 {
        return true;
    }
    if left == 0 || (largest as usize) * left < uncovered.count_ones() as usize {
        return false;
    }
    // Branch on the uncovered element hit by the fewest sets.
    let mut best = (usize::MAX, 0u32);
    let mut rest = uncovered;
    while rest != 0 {
        let bit = rest & rest.wrapping_neg();
        rest &= rest - 1;
        let hits = sets.iter().filter(|&&s| s & bit != 0).count();
        if hits < best.0 {
            best = (hits, bit);
        }
    }
    for &s in sets.iter().filter(|&&s| s & best.1 != 0) {
        chosen.push(s);
        if search(sets, universe, covered | s, left - 1, largest, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Smallest family of `sets` whose union is `universe`, or `None` when the
/// sets do not cover it.
pub(crate) fn min_cover(sets: &[u32], universe: u32) -> Option<Vec<u32>> {
    let union = sets.iter().fold(0, |a, &s| a | s);
    if universe & !union != 0 {
        return None;
    }
    let largest = sets.iter().map(|s| (s & universe).count_ones()).max().unwrap_or(0);
    for size in 0..=sets.len() {
        let mut chosen = Vec::new();
        if search(sets, universe, 0, size, largest, &mut chosen) {
            return Some(chosen);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(sets: &[u32], universe: u32) -> Option<usize> {
        (0u32..1 << sets.len())
            .filter(|pick| {
                let u = (0..sets.len()).filter(|i| pick & (1 << i) != 0).fold(0, |a, i| a | sets[i]);
                u & universe == universe
            })
            .map(|pick| pick.count_ones() as usize)
            .min()
    }

    #[test]
    fn agrees_with_brute_force() {
        let cases: &[(&[u32], u32)] = &[
            (&[0b0011, 0b0110, 0b1100, 0b1001], 0b1111),
            (&[0b0111, 0b1000, 0b0110, 0b1001], 0b1111),
            (&[0b00111, 0b11000, 0b01100, 0b10001, 0b00010], 0b11111),
            (&[0b01, 0b10], 0b111),
            (&[], 0),
        ];
        for &(sets, universe) in cases {
            assert_eq!(min_cover(sets, universe).map(|c| c.len()), brute(sets, universe));
        }
    }

    #[test]
    fn maximality_filter() {
        assert_eq!(maximal_sets(vec![0b001, 0b011, 0b011, 0b100, 0b110]), vec![0b011, 0b110]);
    }
}

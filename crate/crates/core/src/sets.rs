//! Bitmask helpers for vertex subsets of graphs with at most 31 vertices.

use std::cmp::Ordering;

pub fn members(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}

pub fn mask_of(set: &[usize]) -> u32 {
    set.iter().fold(0, |m, &v| m | 1 << v)
}

/// Compares two subsets as their sorted member lists, lexicographically
/// (a proper prefix sorts first).
pub fn lex_cmp(a: u32, b: u32) -> Ordering {
    let diff = a ^ b;
    if diff == 0 {
        return Ordering::Equal;
    }
    let i = diff.trailing_zeros();
    let above = if i >= 31 { 0 } else { !0u32 << (i + 1) };
    if a >> i & 1 == 1 {
        // a continues with i; b continues with something larger, or stops
        if b & above != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    } else if a & above != 0 {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// All subsets of `0..n` by increasing size, lexicographic within a size.
pub fn masks_by_size(n: usize) -> Vec<u32> {
    let mut all: Vec<u32> = (0..1u32 << n).collect();
    all.sort_by(|&a, &b| a.count_ones().cmp(&b.count_ones()).then(lex_cmp(a, b)));
    all
}

/// `k`-subsets of the members of `mask`, lexicographic.
pub fn k_subsets(mask: u32, k: usize) -> impl Iterator<Item = u32> {
    use itertools::Itertools;
    members(mask).into_iter().combinations(k).map(|c| mask_of(&c))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_cmp_matches_vec_order() {
        for a in 0u32..64 {
            for b in 0u32..64 {
                assert_eq!(lex_cmp(a, b), members(a).cmp(&members(b)), "{a:b} vs {b:b}");
            }
        }
    }

    #[test]
    fn by_size_order() {
        let m = masks_by_size(3);
        let lists: Vec<Vec<usize>> = m.iter().map(|&x| members(x)).collect();
        assert_eq!(lists, vec![vec![], vec![0], vec![1], vec![2], vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 1, 2]]);
    }
}

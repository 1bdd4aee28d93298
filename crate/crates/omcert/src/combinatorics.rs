//! Lexicographic ranking of sorted subsets and small combinatorial helpers.

use crate::sign::ElementId;

/// Binomial coefficient C(n, k) as u64; 0 when k > n.
pub fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc * (n as u128 - i) / (i + 1);
    }
    acc as u64
}

/// Rank of a strictly increasing subset of 1..=n in lexicographic order.
///
/// Lexicographic order of sorted k-subsets: (1,2,..,k) has rank 0 and
/// (n-k+1,..,n) has rank C(n,k)-1.
pub fn rank_of_sorted(n: u32, subset: &[ElementId]) -> usize {
    let k = subset.len() as u32;
    let mut rank: u64 = 0;
    let mut prev = 0u32;
    for (i, e) in subset.iter().enumerate() {
        let c = e.0;
        debug_assert!(c > prev && c <= n);
        for v in prev + 1..c {
            rank += binomial(n - v, k - 1 - i as u32);
        }
        prev = c;
    }
    rank as usize
}

/// All sorted k-subsets of 1..=n in lexicographic order.
pub fn sorted_subsets(n: u32, k: u32) -> Vec<Vec<ElementId>> {
    subsets_of(&(1..=n).map(ElementId).collect::<Vec<_>>(), k as usize)
}

/// All sorted k-subsets of an already sorted pool, in lexicographic order.
pub fn subsets_of(pool: &[ElementId], k: usize) -> Vec<Vec<ElementId>> {
    let mut out = Vec::new();
    if k > pool.len() {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| pool[i]).collect());
        // advance the index vector
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + pool.len() - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Parity of the permutation sorting `tuple` ascending: +1 even, -1 odd.
/// Returns 0 encoded as None when the tuple has a repeated entry.
pub fn sort_parity(tuple: &[ElementId]) -> Option<i8> {
    let mut inversions = 0u32;
    for i in 0..tuple.len() {
        for j in i + 1..tuple.len() {
            if tuple[i] == tuple[j] {
                return None;
            }
            if tuple[i] > tuple[j] {
                inversions += 1;
            }
        }
    }
    Some(if inversions % 2 == 0 { 1 } else { -1 })
}

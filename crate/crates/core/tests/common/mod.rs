//! Independent brute-force oracles. Nothing here calls the library's
//! transform, enumerators or membership test.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

/// H·v by the O(n²) definition.
pub fn naive_h_times(v: &[i64]) -> Vec<i64> {
    let n = v.len();
    (0..n)
        .map(|b| {
            (0..n)
                .map(|a| {
                    let dot = (a & b).count_ones() % 2;
                    if dot == 0 {
                        v[a]
                    } else {
                        -v[a]
                    }
                })
                .sum()
        })
        .collect()
}

/// v ∈ d·Had via the barycentric criterion, computed naively.
pub fn naive_member(v: &[i64], d: i64) -> bool {
    v[0] == d && naive_h_times(v).iter().all(|&x| x >= 0)
}

/// Every vector of {d} × [−d, d]^(n−1) that passes [`naive_member`].
pub fn exhaustive_scan(m: u32, d: i64) -> BTreeSet<Vec<i64>> {
    let n = 1usize << m;
    let width = (2 * d + 1) as u64;
    let total = width.pow((n - 1) as u32);
    let mut out = BTreeSet::new();
    let mut v = vec![0i64; n];
    v[0] = d;
    for code in 0..total {
        let mut c = code;
        for x in v.iter_mut().skip(1) {
            *x = (c % width) as i64 - d;
            c /= width;
        }
        if naive_member(&v, d) {
            out.insert(v.clone());
        }
    }
    out
}

/// All linear subspaces of F₂^m (m ≤ 6) as membership masks over the 2^m
/// vectors, found by breadth-first closure from {0}.
pub fn brute_subspaces(m: u32) -> BTreeSet<u64> {
    assert!(m <= 6);
    let n = 1u32 << m;
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([1u64]);
    seen.insert(1u64);
    while let Some(s) = queue.pop_front() {
        for x in 0..n {
            if s >> x & 1 == 1 {
                continue;
            }
            let mut t = s;
            for y in 0..n {
                if s >> y & 1 == 1 {
                    t |= 1 << (x ^ y);
                }
            }
            if seen.insert(t) {
                queue.push_back(t);
            }
        }
    }
    seen
}

/// All affine subspaces as membership masks.
pub fn brute_affine_subspaces(m: u32) -> BTreeSet<u64> {
    let n = 1u32 << m;
    let mut out = BTreeSet::new();
    for s in brute_subspaces(m) {
        for b in 0..n {
            let mut t = 0u64;
            for y in 0..n {
                if s >> y & 1 == 1 {
                    t |= 1 << (y ^ b);
                }
            }
            out.insert(t);
        }
    }
    out
}

pub fn mask_of(elements: impl IntoIterator<Item = u32>) -> u64 {
    elements.into_iter().fold(0, |acc, e| acc | 1 << e)
}

/// Number of k-dimensional subspaces by brute force.
pub fn brute_subspace_count(m: u32, k: u32) -> usize {
    brute_subspaces(m)
        .into_iter()
        .filter(|s| s.count_ones() == 1 << k)
        .count()
}

/// The unit point that is the uniform average of the vertices in `mask`,
/// computed from the vertex columns directly.
pub fn average_of_vertices(m: u32, mask: u64) -> Vec<i64> {
    let n = 1usize << m;
    let size = mask.count_ones() as i64;
    (0..n)
        .map(|a| {
            let total: i64 = (0..n)
                .filter(|&c| mask >> c & 1 == 1)
                .map(|c| if (a & c).count_ones() % 2 == 0 { 1 } else { -1 })
                .sum();
            assert_eq!(total % size, 0);
            total / size
        })
        .collect()
}

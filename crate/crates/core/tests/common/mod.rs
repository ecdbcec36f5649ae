#![allow(dead_code)]

use std::collections::HashMap;

use cubmatch::planar::{PlanarGraph, Polyomino};
use proptest::prelude::*;

/// Number of perfect matchings of the subgraph induced by `mask`, by
/// memoized recursion on the lowest vertex. Independent of the library's
/// backtracking enumerator.
pub fn matching_count(g: &PlanarGraph, mask: u64, memo: &mut HashMap<u64, u64>) -> u64 {
    if mask == 0 {
        return 1;
    }
    if let Some(&c) = memo.get(&mask) {
        return c;
    }
    let v = mask.trailing_zeros() as usize;
    let mut total = 0;
    for &w in g.neighbors(v) {
        if mask >> w & 1 == 1 {
            total += matching_count(g, mask & !(1 << v) & !(1 << w), memo);
        }
    }
    memo.insert(mask, total);
    total
}

pub fn full_mask(g: &PlanarGraph) -> u64 {
    assert!(g.vertex_count() < 64);
    (1u64 << g.vertex_count()) - 1
}

/// f-vector by brute force: every set of pairwise vertex-disjoint even
/// regions, times the number of perfect matchings of what is left.
pub fn f_vector_oracle(g: &PlanarGraph) -> Vec<usize> {
    let even: Vec<u64> = g
        .regions()
        .iter()
        .filter(|r| r.is_even())
        .map(|r| r.cycle.iter().fold(0u64, |m, &v| m | 1 << v))
        .collect();
    assert!(even.len() <= 20);
    let mut f = Vec::new();
    let mut memo = HashMap::new();
    for subset in 0u32..(1 << even.len()) {
        let mut used = 0u64;
        let mut ok = true;
        for (i, m) in even.iter().enumerate() {
            if subset >> i & 1 == 1 {
                if used & m != 0 {
                    ok = false;
                    break;
                }
                used |= m;
            }
        }
        if !ok {
            continue;
        }
        let count = matching_count(g, full_mask(g) & !used, &mut memo) as usize;
        if count == 0 {
            continue;
        }
        let d = subset.count_ones() as usize;
        if f.len() <= d {
            f.resize(d + 1, 0);
        }
        f[d] += count;
    }
    f
}

/// Connected cell sets inside a small box.
pub fn connected_polyomino(max_side: i32, max_cells: usize) -> impl Strategy<Value = Polyomino> {
    prop::collection::vec((0..max_side, 0..max_side), 1..=max_cells)
        .prop_map(Polyomino::new)
        .prop_filter("connected", |p| p.piece_count() == 1)
}

pub fn fib(n: usize) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

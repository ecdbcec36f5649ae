mod common;

use std::collections::HashMap;

use common::{f_vector_oracle, fib, full_mask, matching_count};
use cubmatch::fibpoly::{
    a_unit_closed_form, affine_rank_of_points, apply_a, bareiss_rank, catalan, catalan_identity_check,
    f_polynomial, f_polynomial_by_enumeration, multiset_no_consecutive_count, p_closed_form, p_polynomial,
    IntPolynomial,
};
use cubmatch::planar::{build_from_polyomino, build_ladder, gallery, LabeledGraph};
use cubmatch::topology::{independence_complex, z2_betti};
use cubmatch::{build_complex, enumerate_perfect_matchings, PlanarGraph};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

fn sample_graphs() -> Vec<(String, PlanarGraph)> {
    let mut out = Vec::new();
    for n in 1..=8 {
        out.push((format!("ladder {n}"), build_ladder(n, None).unwrap()));
        for i in 1..=n {
            out.push((format!("ladder {n} bump {i}"), build_ladder(n, Some(i)).unwrap()));
        }
    }
    for (name, _) in gallery::GALLERY {
        out.push((name.to_string(), gallery::gallery_graph(name).unwrap().unwrap()));
    }
    for text in ["####\n####\n####\n", "###.\n####\n.###\n", "##\n##\n##\n##\n", "#..\n###\n###\n..#\n"] {
        out.push((text.replace('\n', "/"), build_from_polyomino(text).unwrap()));
    }
    out
}

#[test]
fn matching_counts_agree_with_subset_recursion() {
    for (name, g) in sample_graphs() {
        let dp = matching_count(&g, full_mask(&g), &mut HashMap::new());
        assert_eq!(enumerate_perfect_matchings(&g).len() as u64, dp, "{name}");
    }
}

#[test]
fn ladder_matchings_are_fibonacci() {
    for n in 1..=12 {
        let g = build_ladder(n, None).unwrap();
        assert_eq!(matching_count(&g, full_mask(&g), &mut HashMap::new()), fib(n + 2), "ladder {n}");
    }
}

#[test]
fn f_vectors_agree_with_disjoint_region_oracle() {
    for (name, g) in sample_graphs() {
        assert_eq!(build_complex(&g).f_vector(), f_vector_oracle(&g), "{name}");
    }
}

#[test]
fn f_polynomials_agree_with_oracle() {
    for n in 1..=8 {
        let coeffs = |p: IntPolynomial| -> Vec<usize> {
            p.coeffs().iter().map(|c| c.to_string().parse().unwrap()).collect()
        };
        let g = build_ladder(n, None).unwrap();
        assert_eq!(coeffs(f_polynomial(n, None).unwrap()), f_vector_oracle(&g), "ladder {n}");
        for i in 1..=n {
            let g = build_ladder(n, Some(i)).unwrap();
            assert_eq!(coeffs(f_polynomial(n, Some(i)).unwrap()), f_vector_oracle(&g), "ladder {n} bump {i}");
            assert_eq!(f_polynomial(n, Some(i)).unwrap(), f_polynomial_by_enumeration(n, Some(i)).unwrap());
        }
    }
}

fn rational_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &m[rank][c];
                let pivot = m[rank].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[test]
fn bareiss_agrees_with_rational_elimination() {
    let mut state = 0x2545_f491_4f6c_dd1du64;
    let mut next = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state % 7) as i64 - 3
    };
    for trial in 0..200 {
        let rows = 1 + trial % 5;
        let cols = 1 + (trial / 5) % 5;
        let m: Vec<Vec<BigInt>> = (0..rows).map(|_| (0..cols).map(|_| BigInt::from(next())).collect()).collect();
        assert_eq!(bareiss_rank(m.clone()), rational_rank(&m), "{m:?}");
    }
}

#[test]
fn affine_rank_of_simplex_vertices() {
    for d in 1..=5 {
        let mut pts = vec![vec![BigInt::zero(); d]];
        for i in 0..d {
            let mut e = vec![BigInt::zero(); d];
            e[i] = BigInt::one();
            pts.push(e);
        }
        assert_eq!(affine_rank_of_points(&pts).unwrap(), d);
        pts.push(vec![BigInt::from(2); d]);
        assert_eq!(affine_rank_of_points(&pts).unwrap(), d);
    }
}

#[test]
fn catalan_agrees_with_central_binomial() {
    let mut central = BigInt::one();
    for m in 0..40usize {
        if m > 0 {
            central = central * BigInt::from(2 * (2 * m as u64 - 1)) / BigInt::from(m as u64);
        }
        assert_eq!(catalan(m), &central / BigInt::from(m as u64 + 1), "C_{m}");
    }
}

#[test]
fn closed_form_agrees_with_recurrence() {
    for n in 1..=40 {
        assert_eq!(p_closed_form(n).unwrap(), p_polynomial(n, None).unwrap(), "P_{n}");
    }
}

#[test]
fn p_is_f_shifted() {
    for n in 1..=10 {
        let f = f_polynomial(n, None).unwrap();
        let p = p_polynomial(n, None).unwrap();
        for x in -3..=3 {
            let x = BigInt::from(x);
            assert_eq!(p.eval(&x), f.eval(&(&x - 1)), "n={n} x={x}");
        }
    }
}

#[test]
fn p_counts_sparse_subsets() {
    for n in 1..=12 {
        let p = p_polynomial(n, None).unwrap();
        // Subsets of {1..n} with no two consecutive elements, by size.
        let mut by_size = vec![0u64; n + 1];
        for s in 0u32..(1 << n) {
            if s & (s >> 1) == 0 {
                by_size[s.count_ones() as usize] += 1;
            }
        }
        for (k, &c) in by_size.iter().enumerate() {
            assert_eq!(p.coeff(k), BigInt::from(c), "P_{n} x^{k}");
            assert_eq!(multiset_no_consecutive_count(n, None, k).unwrap(), c);
        }
        for i in 1..=n {
            let q = p_polynomial(n, Some(i)).unwrap();
            for k in 0..=n {
                assert_eq!(q.coeff(k), BigInt::from(multiset_no_consecutive_count(n, Some(i), k).unwrap()));
            }
        }
    }
}

#[test]
fn a_map_agrees_with_closed_form() {
    for d in 0..=10 {
        for k in 0..=d {
            let by_map = apply_a(d, &IntPolynomial::monomial(k, BigInt::one())).unwrap();
            assert_eq!(by_map, a_unit_closed_form(d, k).unwrap(), "d={d} k={k}");
        }
    }
}

#[test]
fn catalan_identity_holds_on_a_grid() {
    for n in 1..=14 {
        for k in 1..=n {
            let r = catalan_identity_check(n, k).unwrap();
            assert!(r.holds, "n={n} k={k}: {} vs {}", r.lhs, r.rhs);
        }
    }
}

#[test]
fn reduced_euler_characteristic_of_independence_complexes() {
    let check = |g: LabeledGraph| {
        let n = g.nodes.len();
        let adj: Vec<u32> = (0..n)
            .map(|v| g.edges.iter().fold(0, |m, &(a, b)| m | if a == v { 1 << b } else if b == v { 1 << a } else { 0 }))
            .collect();
        // -sum over independent sets S of (-1)^|S|, empty set included.
        let mut total = 0i64;
        for s in 0u32..(1 << n) {
            if (0..n).all(|v| s >> v & 1 == 0 || adj[v] & s == 0) {
                total += if s.count_ones() % 2 == 0 { 1 } else { -1 };
            }
        }
        let b = z2_betti(&independence_complex(&g));
        let chi: i64 = b.0.iter().enumerate().map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) }).sum();
        assert_eq!(chi - 1, -total, "{g:?}");
    };
    for n in 1..=12 {
        check(LabeledGraph::path(n));
    }
    for n in 3..=12 {
        check(LabeledGraph::cycle(n));
    }
}

#[test]
fn p_coefficients_are_nonnegative() {
    for n in 1..=20 {
        assert!(p_polynomial(n, None).unwrap().coeffs().iter().all(|c| !c.is_negative()));
    }
}

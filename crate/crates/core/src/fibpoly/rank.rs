use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

use super::IntPolynomial;

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let num = &m[rank][col] * &m[i][j] - &m[i][col] * &m[rank][j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division not exact");
                m[i][j] = num / &prev;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Dimension of the affine span of `polys` inside polynomials of degree
/// at most `d`.
pub fn affine_rank(polys: &[IntPolynomial], d: usize) -> Result<usize> {
    let Some(base) = polys.first() else {
        return Err(Error::OutOfRange("affine rank of an empty set".into()));
    };
    for p in polys {
        if p.degree().is_some_and(|deg| deg > d) {
            return Err(Error::OutOfRange(format!(
                "polynomial {p} has degree above {d}"
            )));
        }
    }
    let rows = polys[1..]
        .iter()
        .map(|p| (p - base).padded(d))
        .collect();
    Ok(bareiss_rank(rows))
}

/// Affine dimension of a set of integer points (e.g. f-vectors).
pub fn affine_rank_of_points(points: &[Vec<BigInt>]) -> Result<usize> {
    let Some(base) = points.first() else {
        return Err(Error::OutOfRange("affine rank of an empty set".into()));
    };
    let width = points.iter().map(Vec::len).max().unwrap_or(0);
    let at = |v: &Vec<BigInt>, j: usize| v.get(j).cloned().unwrap_or_default();
    let rows = points[1..]
        .iter()
        .map(|p| (0..width).map(|j| at(p, j) - at(base, j)).collect())
        .collect();
    Ok(bareiss_rank(rows))
}

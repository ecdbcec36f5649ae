use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::complex::CubicalMatchingComplex;

use super::SimplicialComplex;

/// A regular cell complex given by cell dimensions and the codimension-one
/// faces of every cell. Cells are listed in a fixed order; ties in the
/// collapse search are broken by that order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellComplex {
    dims: Vec<usize>,
    boundary: Vec<Vec<usize>>,
    cofaces: Vec<Vec<usize>>,
}

impl CellComplex {
    pub fn new(dims: Vec<usize>, boundary: Vec<Vec<usize>>) -> Self {
        assert_eq!(dims.len(), boundary.len());
        let mut cofaces = vec![Vec::new(); dims.len()];
        for (c, bd) in boundary.iter().enumerate() {
            for &b in bd {
                debug_assert_eq!(dims[b] + 1, dims[c]);
                cofaces[b].push(c);
            }
        }
        CellComplex {
            dims,
            boundary,
            cofaces,
        }
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_of(&self, c: usize) -> usize {
        self.dims[c]
    }

    pub fn boundary(&self, c: usize) -> &[usize] {
        &self.boundary[c]
    }

    pub fn cofaces(&self, c: usize) -> &[usize] {
        &self.cofaces[c]
    }

    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = Vec::new();
        for &d in &self.dims {
            if f.len() <= d {
                f.resize(d + 1, 0);
            }
            f[d] += 1;
        }
        f
    }

    pub fn euler_characteristic(&self) -> i64 {
        crate::complex::alternating_sum(&self.f_vector())
    }

    /// Number of connected components of the 1-skeleton.
    pub fn component_count(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for c in 0..self.len() {
            for &b in &self.boundary[c] {
                let (x, y) = (find(&mut parent, c), find(&mut parent, b));
                if x != y {
                    parent[x.max(y)] = x.min(y);
                }
            }
        }
        (0..self.len()).filter(|&c| find(&mut parent, c) == c).count()
    }

    /// Whether the mod-2 boundary of every boundary vanishes.
    pub fn boundary_squared_vanishes(&self) -> bool {
        (0..self.len()).all(|c| {
            let mut count: HashMap<usize, usize> = HashMap::new();
            for &b in &self.boundary[c] {
                for &bb in &self.boundary[b] {
                    *count.entry(bb).or_default() += 1;
                }
            }
            count.values().all(|n| n % 2 == 0)
        })
    }

    pub fn from_simplicial(k: &SimplicialComplex) -> Self {
        let faces = k.faces();
        let index: HashMap<&[usize], usize> =
            faces.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect();
        let dims = faces.iter().map(|f| f.len() - 1).collect();
        let boundary = faces
            .iter()
            .map(|f| {
                if f.len() == 1 {
                    return Vec::new();
                }
                (0..f.len())
                    .map(|skip| {
                        let sub: Vec<usize> =
                            f.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                        index[sub.as_slice()]
                    })
                    .collect()
            })
            .collect();
        CellComplex::new(dims, boundary)
    }

    pub fn from_cubical(k: &CubicalMatchingComplex) -> Self {
        let dims = k.faces().iter().map(|f| f.dim()).collect();
        let boundary = (0..k.len()).map(|i| k.boundary_indices(i)).collect();
        CellComplex::new(dims, boundary)
    }
}

/// Anything that can be presented as a cell complex.
pub trait AsCellComplex {
    fn to_cells(&self) -> CellComplex;
}

impl AsCellComplex for CellComplex {
    fn to_cells(&self) -> CellComplex {
        self.clone()
    }
}

impl AsCellComplex for SimplicialComplex {
    fn to_cells(&self) -> CellComplex {
        CellComplex::from_simplicial(self)
    }
}

impl AsCellComplex for CubicalMatchingComplex {
    fn to_cells(&self) -> CellComplex {
        CellComplex::from_cubical(self)
    }
}

/// Unreduced Betti numbers `b_0, b_1, ...` with trailing zeros dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiVector(pub Vec<usize>);

impl BettiVector {
    /// Reduced Betti numbers: `b_0` lowered by one for a nonempty space.
    pub fn reduced(&self) -> Vec<usize> {
        let mut r = self.0.clone();
        if let Some(b0) = r.first_mut() {
            *b0 -= 1;
        }
        r
    }

    pub fn is_acyclic(&self) -> bool {
        self.0 == [1]
    }

    pub fn sphere(m: usize) -> Self {
        Self::wedge_of_spheres(m, 1)
    }

    /// A wedge of `count >= 1` spheres of dimension `m`.
    pub fn wedge_of_spheres(m: usize, count: usize) -> Self {
        if m == 0 {
            return BettiVector(vec![count + 1]);
        }
        let mut v = vec![0; m + 1];
        v[0] = 1;
        v[m] = count;
        BettiVector(v)
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, b) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, ")")
    }
}

/// Rank over GF(2) of rows given as bitsets.
pub(crate) fn gf2_rank(mut rows: Vec<Vec<u64>>) -> usize {
    let mut rank = 0;
    let mut pivots: Vec<(usize, Vec<u64>)> = Vec::new();
    for row in rows.iter_mut() {
        for (p, prow) in &pivots {
            if row[p / 64] >> (p % 64) & 1 == 1 {
                for (a, b) in row.iter_mut().zip(prow) {
                    *a ^= b;
                }
            }
        }
        let lead = row
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize);
        if let Some(p) = lead {
            // Keep earlier pivot rows reduced against the new one.
            for (_, prow) in pivots.iter_mut() {
                if prow[p / 64] >> (p % 64) & 1 == 1 {
                    for (a, b) in prow.iter_mut().zip(row.iter()) {
                        *a ^= b;
                    }
                }
            }
            pivots.push((p, row.clone()));
            rank += 1;
        }
    }
    rank
}

/// Betti numbers over Z/2.
pub fn z2_betti<C: AsCellComplex + ?Sized>(c: &C) -> BettiVector {
    let cells = c.to_cells();
    betti_of_cells(&cells)
}

pub(crate) fn betti_of_cells(cells: &CellComplex) -> BettiVector {
    let f = cells.f_vector();
    if f.is_empty() {
        return BettiVector(Vec::new());
    }
    // Position of each cell within its dimension.
    let mut pos = vec![0usize; cells.len()];
    let mut seen = vec![0usize; f.len()];
    for (c, p) in pos.iter_mut().enumerate() {
        let d = cells.dim_of(c);
        *p = seen[d];
        seen[d] += 1;
    }
    // rank[d] = rank of the boundary map from d-cells to (d-1)-cells.
    let mut rank = vec![0usize; f.len() + 1];
    for d in 1..f.len() {
        let words = f[d - 1].div_ceil(64);
        let rows: Vec<Vec<u64>> = (0..cells.len())
            .filter(|&c| cells.dim_of(c) == d)
            .map(|c| {
                let mut row = vec![0u64; words];
                for &b in cells.boundary(c) {
                    row[pos[b] / 64] ^= 1 << (pos[b] % 64);
                }
                row
            })
            .collect();
        rank[d] = gf2_rank(rows);
    }
    let mut betti: Vec<usize> = (0..f.len()).map(|d| f[d] - rank[d] - rank[d + 1]).collect();
    while betti.last() == Some(&0) {
        betti.pop();
    }
    BettiVector(betti)
}

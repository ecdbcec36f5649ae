//! Perfect matchings: enumeration, alternating-cycle decomposition, and the
//! cube coordinates of the matchings.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::geometry::{self, Containment, Point};
use crate::planar::{ordered, PlanarGraph, RegionId, VertexId};

/// A set of pairwise vertex-disjoint edges, as sorted `(min, max)`
/// vertex-index pairs. Ordering is lexicographic on the sorted edge list.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut edges: Vec<_> = edges.into_iter().map(|(a, b)| ordered(a, b)).collect();
        edges.sort_unstable();
        edges.dedup();
        Matching { edges }
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&ordered(a, b)).is_ok()
    }

    pub fn covered(&self) -> BTreeSet<usize> {
        self.edges.iter().flat_map(|&(a, b)| [a, b]).collect()
    }

    /// Edges are pairwise vertex-disjoint.
    pub fn is_matching(&self) -> bool {
        self.covered().len() == 2 * self.edges.len()
    }

    pub fn is_perfect_for(&self, g: &PlanarGraph) -> bool {
        self.is_matching()
            && self.edges.iter().all(|&(a, b)| g.has_edge(a, b))
            && self.covered().len() == g.vertex_count()
    }

    pub fn is_superset_of(&self, other: &Matching) -> bool {
        other.edges.iter().all(|e| self.edges.binary_search(e).is_ok())
    }

    pub fn with(&self, extra: &[(usize, usize)]) -> Matching {
        Matching::new(self.edges.iter().chain(extra).copied())
    }

    pub fn without(&self, remove: &[(usize, usize)]) -> Matching {
        Matching {
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|e| !remove.contains(e))
                .collect(),
        }
    }

    /// Sorted list of sorted id pairs.
    pub fn to_ids(&self, g: &PlanarGraph) -> Vec<[VertexId; 2]> {
        let mut out: Vec<[VertexId; 2]> = self
            .edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (g.id(a), g.id(b));
                [x.min(y), x.max(y)]
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn from_ids(g: &PlanarGraph, pairs: &[[VertexId; 2]]) -> Result<Matching> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &[a, b] in pairs {
            match (g.index_of(a), g.index_of(b)) {
                (Some(x), Some(y)) if g.has_edge(x, y) => edges.push((x, y)),
                _ => return Err(Error::UnknownVertex(a, b)),
            }
        }
        Ok(Matching::new(edges))
    }
}

/// All perfect matchings, sorted.
pub fn enumerate_perfect_matchings(g: &PlanarGraph) -> Vec<Matching> {
    enumerate_avoiding(g, &vec![false; g.vertex_count()])
}

/// All perfect matchings of `g` minus the `blocked` vertices, sorted.
///
/// Backtracks on the lowest uncovered vertex; between branches, vertices
/// left with one available neighbour are matched immediately and vertices
/// with none prune the branch.
pub(crate) fn enumerate_avoiding(g: &PlanarGraph, blocked: &[bool]) -> Vec<Matching> {
    let free = blocked.iter().filter(|b| !**b).count();
    if free % 2 == 1 {
        return Vec::new();
    }
    let mut state = Search {
        g,
        covered: blocked.to_vec(),
        chosen: Vec::with_capacity(free / 2),
        out: Vec::new(),
    };
    state.run();
    let mut out = state.out;
    out.sort_unstable();
    out
}

struct Search<'a> {
    g: &'a PlanarGraph,
    covered: Vec<bool>,
    chosen: Vec<(usize, usize)>,
    out: Vec<Matching>,
}

impl Search<'_> {
    fn take(&mut self, a: usize, b: usize) {
        self.covered[a] = true;
        self.covered[b] = true;
        self.chosen.push(ordered(a, b));
    }

    fn undo(&mut self, count: usize) {
        for _ in 0..count {
            let (a, b) = self.chosen.pop().expect("undo matches take");
            self.covered[a] = false;
            self.covered[b] = false;
        }
    }

    /// Forces degree-one vertices. Returns how many edges were taken and
    /// whether the position is still consistent.
    fn propagate(&mut self) -> (usize, bool) {
        let mut taken = 0;
        loop {
            let mut progress = false;
            for v in 0..self.covered.len() {
                if self.covered[v] {
                    continue;
                }
                let mut avail = self.g.neighbors(v).iter().filter(|&&u| !self.covered[u]);
                match (avail.next(), avail.next()) {
                    (None, _) => return (taken, false),
                    (Some(&u), None) => {
                        self.take(v, u);
                        taken += 1;
                        progress = true;
                    }
                    _ => {}
                }
            }
            if !progress {
                return (taken, true);
            }
        }
    }

    fn run(&mut self) {
        let (taken, ok) = self.propagate();
        if ok {
            match (0..self.covered.len()).find(|&v| !self.covered[v]) {
                None => self.out.push(Matching::new(self.chosen.iter().copied())),
                Some(v) => {
                    let g = self.g;
                    for &u in g.neighbors(v) {
                        if self.covered[u] {
                            continue;
                        }
                        self.take(v, u);
                        self.run();
                        self.undo(1);
                    }
                }
            }
        }
        self.undo(taken);
    }
}

/// The alternating cycles of `m1 △ m2`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CycleDecomposition {
    /// Each cycle starts at its smallest vertex and follows the `m1` edge
    /// first; cycles are sorted by starting vertex.
    pub cycles: Vec<Vec<usize>>,
}

pub fn symmetric_difference_cycles(m1: &Matching, m2: &Matching) -> Result<CycleDecomposition> {
    if !m1.is_matching() || !m2.is_matching() || m1.covered() != m2.covered() {
        return Err(Error::MismatchedMatchings);
    }
    let partner = |m: &Matching| -> BTreeMap<usize, usize> {
        m.edges.iter().flat_map(|&(a, b)| [(a, b), (b, a)]).collect()
    };
    let p1 = partner(m1);
    let p2 = partner(m2);
    let mut seen = BTreeSet::new();
    let mut cycles = Vec::new();
    for (&v, &w) in &p1 {
        if p2[&v] == w || seen.contains(&v) {
            continue;
        }
        let mut cycle = vec![v];
        seen.insert(v);
        let mut cur = v;
        let mut use_first = true;
        loop {
            let next = if use_first { p1[&cur] } else { p2[&cur] };
            use_first = !use_first;
            if next == v {
                break;
            }
            seen.insert(next);
            cycle.push(next);
            cur = next;
        }
        cycles.push(cycle);
    }
    Ok(CycleDecomposition { cycles })
}

/// Coordinates in `{0,1}^d` for every perfect matching, relative to `base`:
/// coordinate `i` is the parity of the number of cycles of `M △ base`
/// whose polygon strictly contains an interior point of region
/// `region_order[i]`.
pub fn cube_coordinates(
    g: &PlanarGraph,
    base: &Matching,
    region_order: &[RegionId],
) -> Result<BTreeMap<Matching, Vec<u8>>> {
    if !base.is_perfect_for(g) {
        return Err(Error::NotPerfect);
    }
    let mut sorted = region_order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..g.regions().len()).collect::<Vec<_>>() {
        return Err(Error::OutOfRange(
            "region order must list every region exactly once".into(),
        ));
    }
    let interiors: Vec<&Point> = region_order.iter().map(|&r| &g.region(r).interior).collect();
    let mut out = BTreeMap::new();
    for m in enumerate_perfect_matchings(g) {
        let cycles = symmetric_difference_cycles(&m, base)?.cycles;
        let polygons: Vec<Vec<&Point>> = cycles
            .iter()
            .map(|c| c.iter().map(|&v| g.point(v)).collect())
            .collect();
        let coords = interiors
            .iter()
            .map(|p| {
                let inside = polygons
                    .iter()
                    .filter(|poly| geometry::locate(p, poly) == Containment::Inside)
                    .count();
                (inside % 2) as u8
            })
            .collect();
        out.insert(m, coords);
    }
    Ok(out)
}

#[cfg(test)]
mod tests;

//! Face extraction from the rotation system of a straight-line drawing.

use std::collections::{HashMap, HashSet};

use num_rational::BigRational;
use num_traits::Signed;

use super::RegionId;
use crate::geometry::{self, Containment, Point};

/// One side of an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FaceSide {
    Outer,
    Bounded(usize),
}

#[derive(Clone, Debug)]
pub struct BoundedFace {
    /// Boundary walk, counter-clockwise (vertex indices).
    pub walk: Vec<usize>,
    /// The walk visits no vertex twice.
    pub simple: bool,
    /// Another component is drawn inside this face.
    pub holed: bool,
    pub region: Option<RegionId>,
    twice_area: BigRational,
}

impl BoundedFace {
    pub fn is_elementary(&self) -> bool {
        self.simple && !self.holed
    }

    pub fn twice_area(&self) -> &BigRational {
        &self.twice_area
    }
}

#[derive(Clone, Debug)]
pub(crate) struct FaceStructure {
    pub bounded: Vec<BoundedFace>,
    half_edges: HashMap<(usize, usize), FaceSide>,
}

impl FaceStructure {
    pub fn sides(&self, a: usize, b: usize) -> Option<(FaceSide, FaceSide)> {
        Some((*self.half_edges.get(&(a, b))?, *self.half_edges.get(&(b, a))?))
    }

    pub fn extract(points: &[Point], adjacency: &[Vec<usize>], edges: &[(usize, usize)]) -> Self {
        let n = points.len();
        let rotation: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                let mut around = adjacency[v].clone();
                around.sort_by(|&a, &b| geometry::angle_cmp(&points[v], &points[a], &points[b]));
                around
            })
            .collect();
        let mut position: HashMap<(usize, usize), usize> = HashMap::new();
        for (v, around) in rotation.iter().enumerate() {
            for (i, &u) in around.iter().enumerate() {
                position.insert((v, u), i);
            }
        }

        // Walks, each a list of half-edges traced with the face on the left.
        let mut walks: Vec<Vec<(usize, usize)>> = Vec::new();
        let mut visited: HashSet<(usize, usize)> = HashSet::new();
        for v in 0..n {
            for &u in &rotation[v] {
                if visited.contains(&(v, u)) {
                    continue;
                }
                let start = (v, u);
                let mut walk = Vec::new();
                let (mut a, mut b) = start;
                loop {
                    visited.insert((a, b));
                    walk.push((a, b));
                    let around = &rotation[b];
                    let i = position[&(b, a)];
                    let w = around[(i + around.len() - 1) % around.len()];
                    (a, b) = (b, w);
                    if (a, b) == start {
                        break;
                    }
                }
                walks.push(walk);
            }
        }

        let component = component_labels(n, edges);
        let mut bounded = Vec::new();
        let mut walk_face: Vec<Option<usize>> = vec![None; walks.len()];
        let mut outer_walk_of: HashMap<usize, usize> = HashMap::new();
        for (k, walk) in walks.iter().enumerate() {
            let verts: Vec<usize> = walk.iter().map(|&(a, _)| a).collect();
            let area = geometry::twice_signed_area(verts.iter().map(|&v| &points[v]));
            if area.is_positive() {
                let distinct: HashSet<_> = verts.iter().collect();
                walk_face[k] = Some(bounded.len());
                bounded.push(BoundedFace {
                    simple: verts.len() >= 3 && distinct.len() == verts.len(),
                    walk: verts,
                    holed: false,
                    region: None,
                    twice_area: area,
                });
            } else {
                outer_walk_of.insert(component[walk[0].0], k);
            }
        }

        // Locate each component inside the smallest bounded face of another
        // component that contains it, if any.
        let mut representative: HashMap<usize, usize> = HashMap::new();
        for (v, &c) in component.iter().enumerate().take(n) {
            representative.entry(c).or_insert(v);
        }
        let face_component: Vec<usize> = bounded.iter().map(|f| component[f.walk[0]]).collect();
        let mut container: HashMap<usize, usize> = HashMap::new();
        let mut comps: Vec<_> = representative.iter().map(|(&c, &v)| (c, v)).collect();
        comps.sort_unstable();
        for (c, v) in comps {
            let p = &points[v];
            let mut best: Option<usize> = None;
            for (f, face) in bounded.iter().enumerate() {
                if face_component[f] == c {
                    continue;
                }
                let poly: Vec<&Point> = face.walk.iter().map(|&w| &points[w]).collect();
                if geometry::locate(p, &poly) == Containment::Inside
                    && best.is_none_or(|b| face.twice_area < bounded[b].twice_area)
                {
                    best = Some(f);
                }
            }
            if let Some(f) = best {
                container.insert(c, f);
            }
        }
        for &f in container.values() {
            bounded[f].holed = true;
        }

        let mut half_edges = HashMap::new();
        for (k, walk) in walks.iter().enumerate() {
            let side = match walk_face[k] {
                Some(f) => FaceSide::Bounded(f),
                None => match container.get(&component[walk[0].0]) {
                    Some(&f) => FaceSide::Bounded(f),
                    None => FaceSide::Outer,
                },
            };
            for &h in walk {
                half_edges.insert(h, side);
            }
        }
        debug_assert!(outer_walk_of.len() <= representative.len());
        FaceStructure {
            bounded,
            half_edges,
        }
    }
}

fn component_labels(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}

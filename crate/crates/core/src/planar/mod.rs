//! Embedded planar graphs with exact coordinates.
//!
//! A [`PlanarGraph`] owns a straight-line drawing. Bounded faces are
//! recovered from the rotation system (neighbours sorted by angle around
//! each vertex); the ones bounded by a simple cycle with nothing drawn
//! inside become [`Region`]s, the elementary regions tilings may use.

mod embed;
mod families;
pub mod gallery;
mod reduce;
mod spec;

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::error::{Error, Result};
use crate::geometry::{self, parse_rational, Point};

pub use embed::{BoundedFace, FaceSide};
pub use families::{build_from_polyomino, build_ladder, parse_polyomino, Polyomino};
pub use reduce::{classify_edges, reduce, EdgeClass, EdgeClassification, Reduction};
pub use spec::{Coord, GraphSpec, VertexSpec};

pub type VertexId = i64;
pub type RegionId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

/// An elementary region: a simple cycle bounding exactly one face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    /// Vertex indices, counter-clockwise, starting at the smallest index.
    pub cycle: Vec<usize>,
    pub parity: Parity,
    /// A point strictly inside the face.
    pub interior: Point,
}

impl Region {
    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.parity == Parity::Even
    }

    /// Boundary edges as normalized `(min, max)` index pairs, in cycle order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.cycle.len();
        (0..n).map(move |i| ordered(self.cycle[i], self.cycle[(i + 1) % n]))
    }

    /// Every second boundary edge, starting at position `phase` (0 or 1).
    /// Only meaningful for even regions.
    pub fn alternating_edges(&self, phase: usize) -> Vec<(usize, usize)> {
        let n = self.cycle.len();
        let mut out: Vec<_> = (0..n / 2)
            .map(|j| {
                let i = 2 * j + phase;
                ordered(self.cycle[i % n], self.cycle[(i + 1) % n])
            })
            .collect();
        out.sort_unstable();
        out
    }
}

pub(crate) fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// A graph with nodes carrying caller-chosen labels (region ids for weak
/// duals). Edges are label pairs `(a, b)` with `a < b`, sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LabeledGraph {
    pub nodes: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

pub type DualGraph = LabeledGraph;

impl LabeledGraph {
    pub fn new(mut nodes: Vec<usize>, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        nodes.sort_unstable();
        nodes.dedup();
        let mut edges: Vec<_> = edges.into_iter().map(|(a, b)| ordered(a, b)).collect();
        edges.sort_unstable();
        edges.dedup();
        LabeledGraph { nodes, edges }
    }

    pub fn path(n: usize) -> Self {
        LabeledGraph::new((0..n).collect(), (1..n).map(|i| (i - 1, i)))
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three nodes");
        LabeledGraph::new((0..n).collect(), (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn neighbors(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut adj: BTreeMap<usize, Vec<usize>> =
            self.nodes.iter().map(|&n| (n, Vec::new())).collect();
        for &(a, b) in &self.edges {
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
        adj
    }

    pub fn is_bipartite(&self) -> bool {
        let adj = self.neighbors();
        let mut color: HashMap<usize, bool> = HashMap::new();
        for &start in &self.nodes {
            if color.contains_key(&start) {
                continue;
            }
            color.insert(start, false);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let c = color[&v];
                for &w in &adj[&v] {
                    match color.get(&w) {
                        Some(&cw) if cw == c => return false,
                        Some(_) => {}
                        None => {
                            color.insert(w, !c);
                            stack.push(w);
                        }
                    }
                }
            }
        }
        true
    }

    /// Connected components as sorted node lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.neighbors();
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for &start in &self.nodes {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in &adj[&v] {
                    if seen.insert(w) {
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct PlanarGraph {
    ids: Vec<VertexId>,
    points: Vec<Point>,
    edges: Vec<(usize, usize)>,
    edge_set: HashSet<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    regions: Vec<Region>,
    faces: embed::FaceStructure,
    component_count: usize,
}

/// Where region lists come from when assembling a graph.
enum RegionSource {
    Extract,
    Given(Vec<Vec<usize>>),
}

impl PlanarGraph {
    /// Validates a graph description and builds the embedding.
    pub fn from_spec(spec: &GraphSpec) -> Result<Self> {
        let mut verts: Vec<(VertexId, Point)> = Vec::with_capacity(spec.vertices.len());
        for v in &spec.vertices {
            let x = parse_rational(&v.x.as_text())?;
            let y = parse_rational(&v.y.as_text())?;
            verts.push((v.id, Point::new(x, y)));
        }
        verts.sort_by_key(|(id, _)| *id);
        for w in verts.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::DuplicateVertex(w[0].0));
            }
        }
        let ids: Vec<VertexId> = verts.iter().map(|(id, _)| *id).collect();
        let points: Vec<Point> = verts.into_iter().map(|(_, p)| p).collect();
        let index: HashMap<VertexId, usize> = ids.iter().enumerate().map(|(i, &id)| (id, i)).collect();

        let mut edges = Vec::with_capacity(spec.edges.len());
        let mut seen = HashSet::new();
        for &[a, b] in &spec.edges {
            let (Some(&ia), Some(&ib)) = (index.get(&a), index.get(&b)) else {
                return Err(Error::UnknownVertex(a, b));
            };
            if ia == ib {
                return Err(Error::SelfLoop(a));
            }
            let e = ordered(ia, ib);
            if !seen.insert(e) {
                return Err(Error::ParallelEdge(a, b));
            }
            edges.push(e);
        }

        let source = match &spec.regions {
            None => RegionSource::Extract,
            Some(list) => {
                let mut out = Vec::with_capacity(list.len());
                for (k, cycle) in list.iter().enumerate() {
                    let mut idx = Vec::with_capacity(cycle.len());
                    for id in cycle {
                        let Some(&i) = index.get(id) else {
                            return Err(Error::InvalidRegion {
                                index: k,
                                cycle: cycle.clone(),
                                reason: format!("unknown vertex {id}"),
                            });
                        };
                        idx.push(i);
                    }
                    out.push(idx);
                }
                RegionSource::Given(out)
            }
        };
        Self::assemble(ids, points, edges, source, true)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_spec(&GraphSpec::from_json(text)?)
    }

    /// The description of this graph, regions listed explicitly.
    pub fn to_spec(&self) -> GraphSpec {
        GraphSpec {
            vertices: self
                .ids
                .iter()
                .zip(&self.points)
                .map(|(&id, p)| VertexSpec {
                    id,
                    x: Coord::Text(geometry::format_rational(&p.x)),
                    y: Coord::Text(geometry::format_rational(&p.y)),
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|&(a, b)| [self.ids[a], self.ids[b]])
                .collect(),
            regions: Some(
                self.regions
                    .iter()
                    .map(|r| r.cycle.iter().map(|&v| self.ids[v]).collect())
                    .collect(),
            ),
        }
    }

    pub(crate) fn from_parts(
        ids: Vec<VertexId>,
        points: Vec<Point>,
        edges: Vec<(usize, usize)>,
    ) -> Result<Self> {
        Self::assemble(ids, points, edges, RegionSource::Extract, true)
    }

    fn assemble(
        ids: Vec<VertexId>,
        points: Vec<Point>,
        mut edges: Vec<(usize, usize)>,
        regions: RegionSource,
        check_drawing: bool,
    ) -> Result<Self> {
        edges.sort_unstable();
        let n = ids.len();
        if check_drawing {
            validate_drawing(&ids, &points, &edges)?;
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(a, b) in &edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let edge_set: HashSet<_> = edges.iter().copied().collect();
        let component_count = count_components(n, &edges);
        let mut faces = embed::FaceStructure::extract(&points, &adjacency, &edges);

        let vertices = n;
        let face_total = faces.bounded.len() + 1;
        if vertices + face_total != edges.len() + 1 + component_count {
            return Err(Error::EulerViolation {
                vertices,
                edges: edges.len(),
                faces: face_total,
                components: component_count,
            });
        }

        let chosen: Vec<usize> = match regions {
            RegionSource::Extract => {
                let mut elementary: Vec<usize> = (0..faces.bounded.len())
                    .filter(|&f| faces.bounded[f].is_elementary())
                    .collect();
                elementary.sort_by_key(|&f| cycle_key(&faces.bounded[f].walk));
                elementary
            }
            RegionSource::Given(list) => {
                let lookup: HashMap<Vec<usize>, usize> = (0..faces.bounded.len())
                    .filter(|&f| faces.bounded[f].is_elementary())
                    .map(|f| (cycle_key(&faces.bounded[f].walk), f))
                    .collect();
                let mut used = HashSet::new();
                let mut out = Vec::with_capacity(list.len());
                for (k, cycle) in list.iter().enumerate() {
                    check_cycle(k, cycle, &ids, &edge_set)?;
                    let not_face = || Error::RegionNotAFace {
                        index: k,
                        cycle: cycle.iter().map(|&v| ids[v]).collect(),
                    };
                    let f = *lookup.get(&cycle_key(cycle)).ok_or_else(not_face)?;
                    if !used.insert(f) {
                        return Err(Error::InvalidRegion {
                            index: k,
                            cycle: cycle.iter().map(|&v| ids[v]).collect(),
                            reason: "listed twice".into(),
                        });
                    }
                    out.push(f);
                }
                out
            }
        };

        let mut region_list = Vec::with_capacity(chosen.len());
        for (rid, &f) in chosen.iter().enumerate() {
            faces.bounded[f].region = Some(rid);
            let walk = &faces.bounded[f].walk;
            let start = (0..walk.len()).min_by_key(|&i| walk[i]).unwrap_or(0);
            let cycle: Vec<usize> = (0..walk.len()).map(|i| walk[(start + i) % walk.len()]).collect();
            let poly: Vec<&Point> = cycle.iter().map(|&v| &points[v]).collect();
            let interior = geometry::interior_point(&poly).expect("elementary faces have area");
            region_list.push(Region {
                parity: if cycle.len().is_multiple_of(2) { Parity::Even } else { Parity::Odd },
                cycle,
                interior,
            });
        }

        Ok(PlanarGraph {
            ids,
            points,
            edges,
            edge_set,
            adjacency,
            regions: region_list,
            faces,
            component_count,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn ids(&self) -> &[VertexId] {
        &self.ids
    }

    pub fn id(&self, v: usize) -> VertexId {
        self.ids[v]
    }

    pub fn index_of(&self, id: VertexId) -> Option<usize> {
        self.ids.binary_search(&id).ok()
    }

    pub fn point(&self, v: usize) -> &Point {
        &self.points[v]
    }

    /// Edges as sorted `(min, max)` vertex-index pairs.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edge_set.contains(&ordered(a, b))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn regions(&self) -> &[Region] {
        &self.regions
    }

    pub fn region(&self, r: RegionId) -> &Region {
        &self.regions[r]
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    /// Each connected component as a standalone graph with its own faces
    /// extracted, ordered by smallest vertex id.
    pub fn component_graphs(&self) -> Vec<PlanarGraph> {
        let n = self.vertex_count();
        let mut label = vec![usize::MAX; n];
        let mut parts: Vec<Vec<usize>> = Vec::new();
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            let mut part = vec![s];
            label[s] = parts.len();
            let mut i = 0;
            while i < part.len() {
                for &w in self.neighbors(part[i]) {
                    if label[w] == usize::MAX {
                        label[w] = parts.len();
                        part.push(w);
                    }
                }
                i += 1;
            }
            part.sort_unstable();
            parts.push(part);
        }
        parts
            .iter()
            .enumerate()
            .map(|(c, part)| {
                let mut local = vec![usize::MAX; n];
                for (i, &v) in part.iter().enumerate() {
                    local[v] = i;
                }
                let edges = self
                    .edges
                    .iter()
                    .filter(|e| label[e.0] == c)
                    .map(|&(a, b)| ordered(local[a], local[b]))
                    .collect();
                Self::from_parts(
                    part.iter().map(|&v| self.ids[v]).collect(),
                    part.iter().map(|&v| self.points[v].clone()).collect(),
                    edges,
                )
                .expect("a component of a valid embedding is valid")
            })
            .collect()
    }

    pub fn bounded_faces(&self) -> &[BoundedFace] {
        &self.faces.bounded
    }

    /// Bounded faces that are simple and hole-free but not in the region
    /// list (dropped by an explicit list or created by deletions).
    pub fn excluded_faces(&self) -> Vec<&BoundedFace> {
        self.faces
            .bounded
            .iter()
            .filter(|f| f.is_elementary() && f.region.is_none())
            .collect()
    }

    /// The faces on the two sides of an edge.
    pub fn edge_sides(&self, a: usize, b: usize) -> Option<(FaceSide, FaceSide)> {
        self.faces.sides(a, b)
    }

    /// Edges with the outer region on at least one side.
    pub fn outer_edges(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .copied()
            .filter(|&(a, b)| {
                let (l, r) = self.faces.sides(a, b).expect("edge has sides");
                l == FaceSide::Outer || r == FaceSide::Outer
            })
            .collect()
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![None; self.vertex_count()];
        for s in 0..self.vertex_count() {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let c = color[v].unwrap();
                for &w in &self.adjacency[v] {
                    match color[w] {
                        Some(cw) if cw == c => return false,
                        Some(_) => {}
                        None => {
                            color[w] = Some(!c);
                            stack.push(w);
                        }
                    }
                }
            }
        }
        true
    }

    /// Deletes vertices (with incident edges) and edges. Faces can only
    /// merge under deletion, so the result keeps exactly the regions whose
    /// boundary survives intact; faces that open up are left out.
    pub fn without(&self, vertices: &[usize], edges: &[(usize, usize)]) -> PlanarGraph {
        let dead_v: HashSet<usize> = vertices.iter().copied().collect();
        let dead_e: HashSet<(usize, usize)> = edges.iter().map(|&(a, b)| ordered(a, b)).collect();
        let keep: Vec<usize> = (0..self.vertex_count()).filter(|v| !dead_v.contains(v)).collect();
        let mut remap = vec![usize::MAX; self.vertex_count()];
        for (new, &old) in keep.iter().enumerate() {
            remap[old] = new;
        }
        let ids = keep.iter().map(|&v| self.ids[v]).collect();
        let points = keep.iter().map(|&v| self.points[v].clone()).collect();
        let new_edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|e| !dead_e.contains(e) && !dead_v.contains(&e.0) && !dead_v.contains(&e.1))
            .map(|&(a, b)| ordered(remap[a], remap[b]))
            .collect();
        let surviving: Vec<Vec<usize>> = self
            .regions
            .iter()
            .filter(|r| {
                r.cycle.iter().all(|v| !dead_v.contains(v)) && r.edges().all(|e| !dead_e.contains(&e))
            })
            .map(|r| r.cycle.iter().map(|&v| remap[v]).collect())
            .collect();
        Self::assemble(ids, points, new_edges, RegionSource::Given(surviving), false)
            .expect("deleting from a valid embedding stays valid")
    }

    /// Same graph with a different region list (each must still be an
    /// elementary face).
    pub fn with_regions(&self, regions: &[RegionId]) -> PlanarGraph {
        let cycles = regions.iter().map(|&r| self.regions[r].cycle.clone()).collect();
        Self::assemble(
            self.ids.clone(),
            self.points.clone(),
            self.edges.clone(),
            RegionSource::Given(cycles),
            false,
        )
        .expect("regions of a valid embedding")
    }

    /// The weak dual: bounded regions, adjacent when they share an edge.
    pub fn weak_dual(&self) -> DualGraph {
        let mut owner: HashMap<(usize, usize), Vec<RegionId>> = HashMap::new();
        for (rid, r) in self.regions.iter().enumerate() {
            for e in r.edges() {
                owner.entry(e).or_default().push(rid);
            }
        }
        let pairs = owner.values().flat_map(|rs| {
            let mut ps = Vec::new();
            for i in 0..rs.len() {
                for j in i + 1..rs.len() {
                    ps.push((rs[i], rs[j]));
                }
            }
            ps
        });
        LabeledGraph::new((0..self.regions.len()).collect(), pairs)
    }

    /// Region indices sharing at least one vertex with `r`.
    pub fn regions_touching(&self, r: RegionId) -> Vec<RegionId> {
        let verts: HashSet<usize> = self.regions[r].cycle.iter().copied().collect();
        (0..self.regions.len())
            .filter(|&s| s != r && self.regions[s].cycle.iter().any(|v| verts.contains(v)))
            .collect()
    }
}

impl PartialEq for PlanarGraph {
    fn eq(&self, other: &Self) -> bool {
        self.ids == other.ids
            && self.points == other.points
            && self.edges == other.edges
            && self.regions == other.regions
    }
}

impl Eq for PlanarGraph {}

fn check_cycle(
    k: usize,
    cycle: &[usize],
    ids: &[VertexId],
    edges: &HashSet<(usize, usize)>,
) -> Result<()> {
    let err = |reason: &str| Error::InvalidRegion {
        index: k,
        cycle: cycle.iter().map(|&v| ids[v]).collect(),
        reason: reason.to_string(),
    };
    if cycle.len() < 3 {
        return Err(err("fewer than three vertices"));
    }
    let distinct: HashSet<_> = cycle.iter().collect();
    if distinct.len() != cycle.len() {
        return Err(err("repeats a vertex"));
    }
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        if !edges.contains(&ordered(a, b)) {
            return Err(err(&format!("({}, {}) is not an edge", ids[a], ids[b])));
        }
    }
    Ok(())
}

/// Orientation-free key of a cyclic vertex sequence: rotated to start at the
/// minimum, then read in the direction whose second entry is smaller.
pub(crate) fn cycle_key(cycle: &[usize]) -> Vec<usize> {
    let n = cycle.len();
    if n == 0 {
        return Vec::new();
    }
    let start = (0..n).min_by_key(|&i| cycle[i]).unwrap();
    let fwd: Vec<usize> = (0..n).map(|i| cycle[(start + i) % n]).collect();
    let bwd: Vec<usize> = (0..n).map(|i| cycle[(start + n - i) % n]).collect();
    fwd.min(bwd)
}

fn count_components(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut count = n;
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            count -= 1;
        }
    }
    count
}

fn validate_drawing(ids: &[VertexId], points: &[Point], edges: &[(usize, usize)]) -> Result<()> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a].cmp(&points[b]));
    for w in order.windows(2) {
        if points[w[0]] == points[w[1]] {
            return Err(Error::CoincidentVertices(ids[w[0]], ids[w[1]]));
        }
    }
    let id_pair = |e: (usize, usize)| (ids[e.0], ids[e.1]);
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            let shared = [e.0, e.1].into_iter().find(|v| *v == f.0 || *v == f.1);
            let bad = match shared {
                Some(s) => {
                    let a = if e.0 == s { e.1 } else { e.0 };
                    let b = if f.0 == s { f.1 } else { f.0 };
                    geometry::shared_endpoint_overlap(&points[s], &points[a], &points[b])
                }
                None => geometry::segments_intersect(
                    &points[e.0],
                    &points[e.1],
                    &points[f.0],
                    &points[f.1],
                ),
            };
            if bad {
                return Err(Error::CrossingEdges {
                    first: id_pair(e),
                    second: id_pair(f),
                });
            }
        }
        for (w, p) in points.iter().enumerate() {
            if w != e.0 && w != e.1 && geometry::on_segment(p, &points[e.0], &points[e.1]) {
                return Err(Error::CrossingEdges {
                    first: id_pair(e),
                    second: (ids[w], ids[w]),
                });
            }
        }
    }
    Ok(())
}

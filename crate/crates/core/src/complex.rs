//! The cubical matching complex: all tilings of a graph by matched edges and
//! vertex-disjoint even regions.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matching::{enumerate_avoiding, Matching};
use crate::planar::{FaceSide, PlanarGraph, RegionId, VertexId};

/// A face `(M_F, C_F)`: a matching of everything outside the chosen even
/// regions. Its dimension is the number of regions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TilingFace {
    pub matching: Matching,
    /// Sorted region ids.
    pub cycles: Vec<RegionId>,
}

impl TilingFace {
    pub fn new(matching: Matching, mut cycles: Vec<RegionId>) -> Self {
        cycles.sort_unstable();
        TilingFace { matching, cycles }
    }

    pub fn dim(&self) -> usize {
        self.cycles.len()
    }

    /// The `2·dim` codimension-one faces: drop a region and match its
    /// boundary one of the two alternating ways.
    pub fn facets(&self, g: &PlanarGraph) -> Vec<TilingFace> {
        let mut out = Vec::with_capacity(2 * self.dim());
        for (k, &r) in self.cycles.iter().enumerate() {
            let mut rest = self.cycles.clone();
            rest.remove(k);
            for phase in 0..2 {
                let alt = g.region(r).alternating_edges(phase);
                out.push(TilingFace {
                    matching: self.matching.with(&alt),
                    cycles: rest.clone(),
                });
            }
        }
        out
    }

    /// The `2^dim` perfect matchings below this face.
    pub fn vertices(&self, g: &PlanarGraph) -> Vec<Matching> {
        let mut out = vec![self.matching.clone()];
        for &r in &self.cycles {
            let a = g.region(r).alternating_edges(0);
            let b = g.region(r).alternating_edges(1);
            out = out.iter().flat_map(|m| [m.with(&a), m.with(&b)]).collect();
        }
        out.sort_unstable();
        out
    }

    /// Some vertex of the face (every region matched with phase 0).
    pub fn first_vertex(&self, g: &PlanarGraph) -> Matching {
        let extra: Vec<_> = self
            .cycles
            .iter()
            .flat_map(|&r| g.region(r).alternating_edges(0))
            .collect();
        self.matching.with(&extra)
    }
}

impl Ord for TilingFace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.dim()
            .cmp(&other.dim())
            .then_with(|| self.cycles.cmp(&other.cycles))
            .then_with(|| self.matching.cmp(&other.matching))
    }
}

impl PartialOrd for TilingFace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The face order: `f1 ⊆ f2` iff `C_1 ⊆ C_2`, `M_1 ⊇ M_2`, and every edge
/// of `M_1 ∖ M_2` lies on the boundary of a region of `C_2 ∖ C_1`.
pub fn face_leq(g: &PlanarGraph, f1: &TilingFace, f2: &TilingFace) -> bool {
    if !f1.cycles.iter().all(|r| f2.cycles.binary_search(r).is_ok())
        || !f1.matching.is_superset_of(&f2.matching)
    {
        return false;
    }
    let dropped: Vec<RegionId> = f2
        .cycles
        .iter()
        .copied()
        .filter(|r| f1.cycles.binary_search(r).is_err())
        .collect();
    f1.matching
        .edges()
        .iter()
        .filter(|&&(a, b)| !f2.matching.contains(a, b))
        .all(|&e| dropped.iter().any(|&r| g.region(r).edges().any(|x| x == e)))
}

#[derive(Clone, Debug)]
pub struct CubicalMatchingComplex {
    graph: Arc<PlanarGraph>,
    faces: Vec<TilingFace>,
    index: HashMap<TilingFace, usize>,
}

/// Enumerates every tiling face of `g`: for each set of pairwise
/// vertex-disjoint even regions, every perfect matching of the rest.
pub fn build_complex(g: &PlanarGraph) -> CubicalMatchingComplex {
    let graph = Arc::new(g.clone());
    let even: Vec<RegionId> = (0..g.regions().len())
        .filter(|&r| g.region(r).is_even())
        .collect();
    let mut conflicts: HashMap<RegionId, Vec<RegionId>> = HashMap::new();
    for &r in &even {
        conflicts.insert(r, g.regions_touching(r));
    }

    let mut faces = Vec::new();
    let mut blocked = vec![false; g.vertex_count()];
    let mut chosen = Vec::new();
    collect_faces(g, &even, 0, &conflicts, &mut chosen, &mut blocked, &mut faces);
    CubicalMatchingComplex::from_faces(graph, faces)
}

fn collect_faces(
    g: &PlanarGraph,
    even: &[RegionId],
    next: usize,
    conflicts: &HashMap<RegionId, Vec<RegionId>>,
    chosen: &mut Vec<RegionId>,
    blocked: &mut Vec<bool>,
    faces: &mut Vec<TilingFace>,
) {
    for m in enumerate_avoiding(g, blocked) {
        faces.push(TilingFace::new(m, chosen.clone()));
    }
    for k in next..even.len() {
        let r = even[k];
        if chosen.iter().any(|c| conflicts[&r].contains(c)) {
            continue;
        }
        for &v in &g.region(r).cycle {
            blocked[v] = true;
        }
        chosen.push(r);
        collect_faces(g, even, k + 1, conflicts, chosen, blocked, faces);
        chosen.pop();
        for &v in &g.region(r).cycle {
            blocked[v] = false;
        }
    }
}

impl CubicalMatchingComplex {
    /// Wraps a face list (sorted into canonical order).
    pub fn from_faces(graph: Arc<PlanarGraph>, mut faces: Vec<TilingFace>) -> Self {
        faces.sort_unstable();
        faces.dedup();
        let index = faces
            .iter()
            .enumerate()
            .map(|(i, f)| (f.clone(), i))
            .collect();
        CubicalMatchingComplex {
            graph,
            faces,
            index,
        }
    }

    pub fn graph(&self) -> &PlanarGraph {
        &self.graph
    }

    pub fn graph_arc(&self) -> Arc<PlanarGraph> {
        Arc::clone(&self.graph)
    }

    pub fn faces(&self) -> &[TilingFace] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn index_of(&self, f: &TilingFace) -> Option<usize> {
        self.index.get(f).copied()
    }

    pub fn contains(&self, f: &TilingFace) -> bool {
        self.index.contains_key(f)
    }

    pub fn dim(&self) -> Option<usize> {
        self.faces.last().map(TilingFace::dim)
    }

    /// Perfect matchings (the 0-dimensional faces), sorted.
    pub fn vertices(&self) -> impl Iterator<Item = &Matching> {
        self.faces
            .iter()
            .take_while(|f| f.dim() == 0)
            .map(|f| &f.matching)
    }

    /// `f_i` = number of `i`-dimensional faces; empty for the empty complex.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = Vec::new();
        for face in &self.faces {
            if f.len() <= face.dim() {
                f.resize(face.dim() + 1, 0);
            }
            f[face.dim()] += 1;
        }
        f
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(&self.f_vector())
    }

    /// Indices of the facets (codimension-one faces) of face `i`.
    pub fn boundary_indices(&self, i: usize) -> Vec<usize> {
        self.faces[i]
            .facets(&self.graph)
            .iter()
            .map(|f| self.index[f])
            .collect()
    }

    /// Splits the complex along connectivity of its 1-skeleton.
    pub fn connected_components(&self) -> Vec<CubicalMatchingComplex> {
        let vertex_ids: HashMap<&Matching, usize> =
            self.vertices().enumerate().map(|(i, m)| (m, i)).collect();
        let mut parent: Vec<usize> = (0..vertex_ids.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for f in self.faces.iter().filter(|f| f.dim() == 1) {
            let ends = f.vertices(&self.graph);
            let a = find(&mut parent, vertex_ids[&ends[0]]);
            let b = find(&mut parent, vertex_ids[&ends[1]]);
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: BTreeMap<usize, Vec<TilingFace>> = BTreeMap::new();
        for f in &self.faces {
            let v = f.first_vertex(&self.graph);
            let root = find(&mut parent, vertex_ids[&v]);
            groups.entry(root).or_default().push(f.clone());
        }
        groups
            .into_values()
            .map(|faces| CubicalMatchingComplex::from_faces(self.graph_arc(), faces))
            .collect()
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson {
            faces: self
                .faces
                .iter()
                .map(|f| FaceJson {
                    matching: f.matching.to_ids(&self.graph),
                    cycles: f.cycles.clone(),
                })
                .collect(),
        }
    }

    pub fn face_from_json(&self, face: &FaceJson) -> Result<TilingFace> {
        let m = Matching::from_ids(&self.graph, &face.matching)?;
        Ok(TilingFace::new(m, face.cycles.clone()))
    }
}

pub fn alternating_sum(f: &[usize]) -> i64 {
    f.iter()
        .enumerate()
        .map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) })
        .sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceJson {
    pub matching: Vec<[VertexId; 2]>,
    pub cycles: Vec<RegionId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub faces: Vec<FaceJson>,
}

/// Outcome of splitting the tilings of `G` along an outer edge `e = xy`
/// bordering the bounded face `R`.
#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    pub edge: (VertexId, VertexId),
    /// The region behind `e`, if that face is an elementary region.
    pub region: Option<RegionId>,
    /// `R` is an even region, so tilings may use it as a block.
    pub even_branch: bool,
    pub whole: Vec<usize>,
    pub without_endpoints: Vec<usize>,
    pub without_edge: Vec<usize>,
    /// f-vector of `C(G \ R)`, only in the even branch.
    pub without_region: Option<Vec<usize>>,
    /// Per dimension `i`: (left side, right side) of the count identity.
    pub rows: Vec<(usize, usize)>,
    pub counts_agree: bool,
    /// The three pieces, mapped back into `C(G)`, partition its faces.
    pub faces_partition: bool,
}

impl DecompositionReport {
    pub fn holds(&self) -> bool {
        self.counts_agree && self.faces_partition
    }
}

/// Checks `C(G) = C(G∖{x,y}) ∪ C(G∖e) ∪ Prism(C(G∖R))` along the outer edge
/// `(a, b)`, both as f-vector counts and face by face.
pub fn verify_edge_decomposition(g: &PlanarGraph, a: usize, b: usize) -> Result<DecompositionReport> {
    let ids = (g.id(a), g.id(b));
    let (left, right) = g.edge_sides(a, b).ok_or(Error::UnknownVertex(ids.0, ids.1))?;
    let face = match (left, right) {
        (FaceSide::Outer, FaceSide::Bounded(f)) | (FaceSide::Bounded(f), FaceSide::Outer) => f,
        (FaceSide::Outer, FaceSide::Outer) => return Err(Error::NoBoundedRegion(ids.0, ids.1)),
        _ => return Err(Error::NotOuterEdge(ids.0, ids.1)),
    };
    let region = g.bounded_faces()[face].region;
    let even_branch = region.is_some_and(|r| g.region(r).is_even());

    let whole = build_complex(g);
    let g_xy = g.without(&[a, b], &[]);
    let g_e = g.without(&[], &[(a, b)]);
    let c_xy = build_complex(&g_xy);
    let c_e = build_complex(&g_e);
    let (g_r, c_r) = if even_branch {
        let r = region.unwrap();
        let gr = g.without(&g.region(r).cycle, &[]);
        let cr = build_complex(&gr);
        (Some(gr), Some(cr))
    } else {
        (None, None)
    };

    let fw = whole.f_vector();
    let fxy = c_xy.f_vector();
    let fe = c_e.f_vector();
    let fr = c_r.as_ref().map(CubicalMatchingComplex::f_vector);
    let at = |v: &[usize], i: usize| v.get(i).copied().unwrap_or(0);
    let top = [fw.len(), fxy.len(), fe.len(), fr.as_ref().map_or(0, |v| v.len() + 1)]
        .into_iter()
        .max()
        .unwrap_or(0);
    let rows: Vec<(usize, usize)> = (0..top)
        .map(|i| {
            let mut rhs = at(&fxy, i) + at(&fe, i);
            if let (Some(fr), true) = (&fr, i > 0) {
                rhs += at(fr, i - 1);
            }
            (at(&fw, i), rhs)
        })
        .collect();
    let counts_agree = rows.iter().all(|(l, r)| l == r);

    // Lift every sub-complex face back into C(G).
    let lift = |sub: &PlanarGraph, f: &TilingFace, extra_edges: &[(usize, usize)], extra_region: Option<RegionId>| {
        let edges: Vec<(usize, usize)> = f
            .matching
            .edges()
            .iter()
            .map(|&(u, v)| {
                (
                    g.index_of(sub.id(u)).expect("subgraph ids"),
                    g.index_of(sub.id(v)).expect("subgraph ids"),
                )
            })
            .chain(extra_edges.iter().copied())
            .collect();
        let mut cycles: Vec<RegionId> = f
            .cycles
            .iter()
            .map(|&r| original_region(g, sub, r))
            .collect();
        cycles.extend(extra_region);
        TilingFace::new(Matching::new(edges), cycles)
    };
    let mut lifted: Vec<TilingFace> = Vec::with_capacity(whole.len());
    lifted.extend(c_xy.faces().iter().map(|f| lift(&g_xy, f, &[(a, b)], None)));
    lifted.extend(c_e.faces().iter().map(|f| lift(&g_e, f, &[], None)));
    if let (Some(gr), Some(cr)) = (&g_r, &c_r) {
        lifted.extend(cr.faces().iter().map(|f| lift(gr, f, &[], region)));
    }
    let count = lifted.len();
    lifted.sort_unstable();
    lifted.dedup();
    let faces_partition = lifted.len() == count && lifted.as_slice() == whole.faces();

    Ok(DecompositionReport {
        edge: ids,
        region,
        even_branch,
        whole: fw,
        without_endpoints: fxy,
        without_edge: fe,
        without_region: fr,
        rows,
        counts_agree,
        faces_partition,
    })
}

/// Region of `g` with the same boundary as region `r` of the subgraph.
fn original_region(g: &PlanarGraph, sub: &PlanarGraph, r: RegionId) -> RegionId {
    let mut want: Vec<VertexId> = sub.region(r).cycle.iter().map(|&v| sub.id(v)).collect();
    want.sort_unstable();
    (0..g.regions().len())
        .find(|&s| {
            let mut have: Vec<VertexId> = g.region(s).cycle.iter().map(|&v| g.id(v)).collect();
            have.sort_unstable();
            have == want
        })
        .expect("subgraph regions come from the original graph")
}

#[cfg(test)]
mod tests;

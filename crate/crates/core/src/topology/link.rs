use std::collections::BTreeMap;

use crate::complex::{face_leq, CubicalMatchingComplex, TilingFace};
use crate::error::{Error, Result};
use crate::planar::{LabeledGraph, RegionId};

use super::simplicial::{independence_complex, SimplicialComplex};

/// Regions whose boundary alternates in and out of `M_F`, with the weak
/// dual adjacency between them. Node labels are region ids.
pub fn matched_region_graph(k: &CubicalMatchingComplex, f: &TilingFace) -> Result<LabeledGraph> {
    if !k.contains(f) {
        return Err(Error::FaceNotInComplex);
    }
    let g = k.graph();
    let nodes: Vec<RegionId> = (0..g.regions().len())
        .filter(|&r| {
            let region = g.region(r);
            region.is_even()
                && (0..2).any(|phase| {
                    region
                        .alternating_edges(phase)
                        .iter()
                        .all(|&(a, b)| f.matching.contains(a, b))
                })
        })
        .collect();
    let dual = g.weak_dual();
    let edges: Vec<(usize, usize)> = dual
        .edges
        .iter()
        .copied()
        .filter(|(a, b)| nodes.binary_search(a).is_ok() && nodes.binary_search(b).is_ok())
        .collect();
    Ok(LabeledGraph::new(nodes, edges))
}

/// The link of a face together with the region labelling that realises
/// its isomorphism with `I(G_F)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Link {
    /// Vertices are indices (into `k.faces()`) of the faces one dimension up.
    pub complex: SimplicialComplex,
    pub model: SimplicialComplex,
    /// Link vertex to `G_F` node.
    pub isomorphism: BTreeMap<usize, usize>,
}

/// The link computed from the face poset: vertices are cofaces of
/// dimension one higher, and a set of them spans a simplex when some
/// common coface contains them all. The result is checked against the
/// independence complex of [`matched_region_graph`].
pub fn link_of_face(k: &CubicalMatchingComplex, f: &TilingFace) -> Result<Link> {
    let model = independence_complex(&matched_region_graph(k, f)?);
    let graph = k.graph();
    let star: Vec<usize> = (0..k.len())
        .filter(|&i| k.faces()[i].dim() > f.dim() && face_leq(graph, f, &k.faces()[i]))
        .collect();
    let up: Vec<usize> = star
        .iter()
        .copied()
        .filter(|&i| k.faces()[i].dim() == f.dim() + 1)
        .collect();
    let simplices = star.iter().map(|&s| {
        up.iter()
            .copied()
            .filter(|&c| face_leq(graph, &k.faces()[c], &k.faces()[s]))
            .collect::<Vec<usize>>()
    });
    let complex = SimplicialComplex::from_generators(up.iter().copied(), simplices);

    // Natural map: a coface adds exactly one region to `C_F`.
    let natural: Option<BTreeMap<usize, usize>> = up
        .iter()
        .map(|&c| {
            let extra: Vec<RegionId> = k.faces()[c]
                .cycles
                .iter()
                .copied()
                .filter(|r| f.cycles.binary_search(r).is_err())
                .collect();
            (extra.len() == 1).then(|| (c, extra[0]))
        })
        .collect();
    let isomorphism = match natural {
        Some(map) if is_bijective(&map, &model) && complex.relabel(&map) == model => map,
        _ => complex
            .find_isomorphism(&model)
            .ok_or_else(|| Error::LinkMismatch {
                face: format!("{:?}", f.cycles),
            })?,
    };
    Ok(Link {
        complex,
        model,
        isomorphism,
    })
}

fn is_bijective(map: &BTreeMap<usize, usize>, model: &SimplicialComplex) -> bool {
    let mut image: Vec<usize> = map.values().copied().collect();
    image.sort_unstable();
    image.dedup();
    image == model.vertices()
}

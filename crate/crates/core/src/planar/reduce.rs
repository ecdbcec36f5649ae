//! Forced and forbidden edges, and the reduction that removes them.

use std::collections::HashMap;

use super::{PlanarGraph, VertexId};
use crate::error::{Error, Result};
use crate::matching::enumerate_perfect_matchings;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeClass {
    /// In every perfect matching.
    Forced,
    /// In no perfect matching.
    Forbidden,
    /// In some perfect matchings but not all.
    Free,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeClassification {
    /// Parallel to [`PlanarGraph::edges`].
    pub classes: Vec<((usize, usize), EdgeClass)>,
    pub has_perfect_matching: bool,
}

impl EdgeClassification {
    pub fn class_of(&self, a: usize, b: usize) -> Option<EdgeClass> {
        let e = super::ordered(a, b);
        self.classes.iter().find(|(f, _)| *f == e).map(|(_, c)| *c)
    }

    pub fn with_class(&self, class: EdgeClass) -> Vec<(usize, usize)> {
        self.classes
            .iter()
            .filter(|(_, c)| *c == class)
            .map(|(e, _)| *e)
            .collect()
    }
}

/// Classifies every edge by enumerating all perfect matchings.
pub fn classify_edges(g: &PlanarGraph) -> EdgeClassification {
    let matchings = enumerate_perfect_matchings(g);
    let mut uses: HashMap<(usize, usize), usize> = HashMap::new();
    for m in &matchings {
        for &e in m.edges() {
            *uses.entry(e).or_default() += 1;
        }
    }
    let total = matchings.len();
    let classes = g
        .edges()
        .iter()
        .map(|&e| {
            let k = uses.get(&e).copied().unwrap_or(0);
            let class = if k == 0 {
                EdgeClass::Forbidden
            } else if k == total {
                EdgeClass::Forced
            } else {
                EdgeClass::Free
            };
            (e, class)
        })
        .collect();
    EdgeClassification {
        classes,
        has_perfect_matching: total > 0,
    }
}

/// Result of [`reduce`]: the reduced graph and what was removed, by id.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub graph: PlanarGraph,
    pub forced: Vec<(VertexId, VertexId)>,
    pub forbidden: Vec<(VertexId, VertexId)>,
}

/// Deletes forbidden edges, and forced edges together with their endpoints,
/// until every remaining edge is free. Faces opened up by the deletions are
/// not tileable and stay out of the region list.
pub fn reduce(g: &PlanarGraph) -> Result<Reduction> {
    let mut current = g.clone();
    let mut forced = Vec::new();
    let mut forbidden = Vec::new();
    loop {
        let classes = classify_edges(&current);
        if !classes.has_perfect_matching {
            return Err(Error::NoPerfectMatching);
        }
        let drop_edges = classes.with_class(EdgeClass::Forbidden);
        let forced_edges = classes.with_class(EdgeClass::Forced);
        if drop_edges.is_empty() && forced_edges.is_empty() {
            return Ok(Reduction {
                graph: current,
                forced,
                forbidden,
            });
        }
        let id = |v: usize| current.id(v);
        forbidden.extend(drop_edges.iter().map(|&(a, b)| (id(a), id(b))));
        forced.extend(forced_edges.iter().map(|&(a, b)| (id(a), id(b))));
        let dead: Vec<usize> = forced_edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        current = current.without(&dead, &drop_edges);
    }
}

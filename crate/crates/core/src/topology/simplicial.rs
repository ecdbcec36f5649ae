use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::planar::LabeledGraph;

/// A finite simplicial complex stored by its facets. Vertices carry
/// arbitrary `usize` labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<usize>,
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// The complex generated by `sets` (each a simplex) on `vertices`.
    /// Vertices not covered by any set become isolated points.
    pub fn from_generators(
        vertices: impl IntoIterator<Item = usize>,
        sets: impl IntoIterator<Item = Vec<usize>>,
    ) -> Self {
        let mut vertices: Vec<usize> = vertices.into_iter().collect();
        let mut gens: Vec<Vec<usize>> = sets
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s.dedup();
                s
            })
            .filter(|s| !s.is_empty())
            .collect();
        for s in &gens {
            vertices.extend(s.iter().copied());
        }
        vertices.sort_unstable();
        vertices.dedup();
        let covered: HashSet<usize> = gens.iter().flatten().copied().collect();
        gens.extend(vertices.iter().filter(|v| !covered.contains(v)).map(|&v| vec![v]));
        // Larger sets first so containment only needs checking one way.
        gens.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        gens.dedup();
        let mut facets: Vec<Vec<usize>> = Vec::new();
        for s in gens {
            if !facets.iter().any(|f| is_subset(&s, f)) {
                facets.push(s);
            }
        }
        facets.sort();
        SimplicialComplex { vertices, facets }
    }

    /// The complex with no vertices.
    pub fn empty() -> Self {
        SimplicialComplex {
            vertices: Vec::new(),
            facets: Vec::new(),
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn dim(&self) -> Option<usize> {
        self.facets.iter().map(|f| f.len() - 1).max()
    }

    /// All nonempty faces, ordered by size then lexicographically.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut all: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
        for f in &self.facets {
            let n = f.len();
            for mask in 1u64..(1u64 << n) {
                let s: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect();
                all.insert((s.len(), s));
            }
        }
        all.into_iter().map(|(_, s)| s).collect()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = Vec::new();
        for s in self.faces() {
            if f.len() < s.len() {
                f.resize(s.len(), 0);
            }
            f[s.len() - 1] += 1;
        }
        f
    }

    pub fn relabel(&self, map: &BTreeMap<usize, usize>) -> SimplicialComplex {
        SimplicialComplex::from_generators(
            self.vertices.iter().map(|v| map[v]),
            self.facets.iter().map(|f| f.iter().map(|v| map[v]).collect()),
        )
    }

    /// A vertex bijection carrying facets onto facets, found by
    /// backtracking with degree pruning.
    pub fn find_isomorphism(&self, other: &SimplicialComplex) -> Option<BTreeMap<usize, usize>> {
        if self.vertices.len() != other.vertices.len() || self.facets.len() != other.facets.len() {
            return None;
        }
        let sig = |c: &SimplicialComplex| {
            let mut sizes: Vec<usize> = c.facets.iter().map(Vec::len).collect();
            sizes.sort_unstable();
            sizes
        };
        if sig(self) != sig(other) {
            return None;
        }
        let profile = |c: &SimplicialComplex, v: usize| {
            let mut p: Vec<usize> = c.facets.iter().filter(|f| f.contains(&v)).map(Vec::len).collect();
            p.sort_unstable();
            p
        };
        let targets: BTreeSet<Vec<usize>> = other.facets.iter().cloned().collect();
        let mine: Vec<(usize, Vec<usize>)> = self.vertices.iter().map(|&v| (v, profile(self, v))).collect();
        let theirs: Vec<(usize, Vec<usize>)> =
            other.vertices.iter().map(|&v| (v, profile(other, v))).collect();

        struct Ctx<'a> {
            src: &'a SimplicialComplex,
            mine: &'a [(usize, Vec<usize>)],
            theirs: &'a [(usize, Vec<usize>)],
            targets: &'a BTreeSet<Vec<usize>>,
            map: BTreeMap<usize, usize>,
            used: Vec<bool>,
        }
        fn consistent(ctx: &Ctx) -> bool {
            ctx.src.facets.iter().all(|f| {
                if !f.iter().all(|v| ctx.map.contains_key(v)) {
                    return true;
                }
                let mut img: Vec<usize> = f.iter().map(|v| ctx.map[v]).collect();
                img.sort_unstable();
                ctx.targets.contains(&img)
            })
        }
        fn go(ctx: &mut Ctx, i: usize) -> bool {
            if i == ctx.mine.len() {
                return true;
            }
            let (v, ref prof) = ctx.mine[i];
            for j in 0..ctx.theirs.len() {
                if ctx.used[j] || ctx.theirs[j].1 != *prof {
                    continue;
                }
                ctx.used[j] = true;
                ctx.map.insert(v, ctx.theirs[j].0);
                if consistent(ctx) && go(ctx, i + 1) {
                    return true;
                }
                ctx.map.remove(&v);
                ctx.used[j] = false;
            }
            false
        }
        let mut ctx = Ctx {
            src: self,
            mine: &mine,
            theirs: &theirs,
            targets: &targets,
            map: BTreeMap::new(),
            used: vec![false; theirs.len()],
        };
        go(&mut ctx, 0).then_some(ctx.map)
    }
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    small.iter().all(|x| big.binary_search(x).is_ok())
}

/// The complex of independent vertex sets of `h`.
pub fn independence_complex(h: &LabeledGraph) -> SimplicialComplex {
    let adj = h.neighbors();
    let nodes = &h.nodes;
    let mut facets = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();

    // Maximal independent sets by include/exclude branching; a set is kept
    // when every excluded node has a chosen neighbour.
    fn go(
        i: usize,
        nodes: &[usize],
        adj: &BTreeMap<usize, Vec<usize>>,
        chosen: &mut Vec<usize>,
        facets: &mut Vec<Vec<usize>>,
    ) {
        if i == nodes.len() {
            let maximal = nodes.iter().all(|v| {
                chosen.contains(v) || adj[v].iter().any(|w| chosen.contains(w))
            });
            if maximal {
                facets.push(chosen.clone());
            }
            return;
        }
        let v = nodes[i];
        if !adj[&v].iter().any(|w| chosen.contains(w)) {
            chosen.push(v);
            go(i + 1, nodes, adj, chosen, facets);
            chosen.pop();
        }
        go(i + 1, nodes, adj, chosen, facets);
    }
    go(0, nodes, &adj, &mut chosen, &mut facets);
    SimplicialComplex::from_generators(nodes.iter().copied(), facets)
}

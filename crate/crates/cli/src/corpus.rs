//! The fixture corpus: named example graphs, ladders with every bump,
//! the polyomino zoo and seeded random quadrilateral graphs.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::path::{Path, PathBuf};
use std::sync::OnceLock;

use anyhow::{bail, Context as _, Result};
use cubmatch::planar::{build_ladder, gallery, parse_polyomino, Coord, Polyomino, VertexSpec};
use cubmatch::{build_complex, enumerate_perfect_matchings, CubicalMatchingComplex, GraphSpec, PlanarGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Overrides the fixture directory.
pub const FIXTURE_DIR_ENV: &str = "CUBMATCH_FIXTURE_DIR";
pub const RANDOM_GRAPH_COUNT: u64 = 20;
pub const ZOO_MAX_CELLS: usize = 10;
pub const ZOO_FILE: &str = "polyominoes.txt";

pub fn fixture_dir() -> PathBuf {
    std::env::var_os(FIXTURE_DIR_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FixtureKind {
    Gallery,
    Ladder,
    Polyomino,
    Random,
}

impl fmt::Display for FixtureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FixtureKind::Gallery => "gallery",
            FixtureKind::Ladder => "ladder",
            FixtureKind::Polyomino => "polyomino",
            FixtureKind::Random => "random",
        })
    }
}

pub struct Fixture {
    pub name: String,
    pub kind: FixtureKind,
    /// `(n, bump)` for ladder fixtures.
    pub ladder: Option<(usize, Option<usize>)>,
    pub graph: PlanarGraph,
    complex: OnceLock<CubicalMatchingComplex>,
}

impl Fixture {
    pub fn new(name: impl Into<String>, kind: FixtureKind, graph: PlanarGraph) -> Self {
        Fixture {
            name: name.into(),
            kind,
            ladder: None,
            graph,
            complex: OnceLock::new(),
        }
    }

    /// Built on first use and cached.
    pub fn complex(&self) -> &CubicalMatchingComplex {
        self.complex.get_or_init(|| build_complex(&self.graph))
    }
}

impl fmt::Debug for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fixture({})", self.name)
    }
}

#[derive(Debug)]
pub struct Corpus {
    /// Sorted by vertex count, then edge count, then name, so the first
    /// failing fixture of a check is also a smallest one.
    pub fixtures: Vec<Fixture>,
}

impl Corpus {
    /// Loads the pinned files in `dir` and adds ladders `n <= max_n`.
    pub fn load(dir: &Path, max_n: usize) -> Result<Corpus> {
        let mut fixtures = Vec::new();
        for (name, graph) in load_gallery(dir)? {
            fixtures.push(Fixture::new(name, FixtureKind::Gallery, graph));
        }
        fixtures.extend(ladder_fixtures(max_n)?);
        let zoo_path = dir.join(ZOO_FILE);
        let zoo_text = std::fs::read_to_string(&zoo_path).with_context(|| format!("reading {}", zoo_path.display()))?;
        for (i, p) in parse_zoo(&zoo_text)?.into_iter().enumerate() {
            let graph = p.to_graph().with_context(|| format!("zoo entry {i}"))?;
            fixtures.push(Fixture::new(format!("polyomino-{:02}-{i:04}", p.len()), FixtureKind::Polyomino, graph));
        }
        for (name, graph) in load_json_dir(&dir.join("random"))? {
            fixtures.push(Fixture::new(name, FixtureKind::Random, graph));
        }
        fixtures.sort_by(|a, b| {
            (a.graph.vertex_count(), a.graph.edge_count(), &a.name).cmp(&(
                b.graph.vertex_count(),
                b.graph.edge_count(),
                &b.name,
            ))
        });
        Ok(Corpus { fixtures })
    }

    pub fn get(&self, name: &str) -> Option<&Fixture> {
        self.fixtures.iter().find(|f| f.name == name)
    }

    pub fn of_kind(&self, kind: FixtureKind) -> impl Iterator<Item = &Fixture> {
        self.fixtures.iter().filter(move |f| f.kind == kind)
    }
}

fn load_json_dir(dir: &Path) -> Result<Vec<(String, PlanarGraph)>> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .with_context(|| format!("reading {}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let name = p.file_stem().unwrap_or_default().to_string_lossy().into_owned();
            let text = std::fs::read_to_string(&p).with_context(|| format!("reading {}", p.display()))?;
            let graph = PlanarGraph::from_json(&text).with_context(|| format!("parsing {}", p.display()))?;
            Ok((name, graph))
        })
        .collect()
}

pub fn load_gallery(dir: &Path) -> Result<Vec<(String, PlanarGraph)>> {
    load_json_dir(&dir.join("gallery"))
}

pub fn ladder_fixtures(max_n: usize) -> Result<Vec<Fixture>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for bump in std::iter::once(None).chain((1..=n).map(Some)) {
            let name = match bump {
                None => format!("ladder-{n}"),
                Some(i) => format!("ladder-{n}-bump-{i}"),
            };
            let mut f = Fixture::new(name, FixtureKind::Ladder, build_ladder(n, bump)?);
            f.ladder = Some((n, bump));
            out.push(f);
        }
    }
    Ok(out)
}

/// Free polyominoes with `1..=max` cells, grouped by size, each list sorted.
pub fn free_polyominoes(max: usize) -> Vec<Vec<Polyomino>> {
    let mut levels: Vec<Vec<Polyomino>> = Vec::new();
    let mut current: BTreeSet<Polyomino> = BTreeSet::from([Polyomino::new([(0, 0)])]);
    for _ in 1..max {
        let grown: BTreeSet<Polyomino> = current.iter().flat_map(grow).collect();
        levels.push(std::mem::replace(&mut current, grown).into_iter().collect());
    }
    if max > 0 {
        levels.push(current.into_iter().collect());
    }
    levels
}

/// Canonical forms of every one-cell extension.
fn grow(p: &Polyomino) -> Vec<Polyomino> {
    let cells: HashSet<(i32, i32)> = p.cells().iter().copied().collect();
    p.cells()
        .iter()
        .flat_map(|&(r, c)| [(r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)])
        .filter(|n| !cells.contains(n))
        .map(|n| Polyomino::new(p.cells().iter().copied().chain([n])).canonical())
        .collect()
}

/// The zoo: free, simply connected polyominoes with a domino tiling.
pub fn polyomino_zoo(max: usize) -> Vec<Polyomino> {
    free_polyominoes(max)
        .into_iter()
        .flatten()
        .filter(|p| p.len() % 2 == 0 && p.is_simply_connected())
        .filter(|p| {
            let g = p.to_graph().expect("connected by construction");
            !enumerate_perfect_matchings(&g).is_empty()
        })
        .collect()
}

pub fn zoo_text(zoo: &[Polyomino]) -> String {
    zoo.iter().map(Polyomino::to_text).collect::<Vec<_>>().join("\n")
}

/// Blocks of `#`/`.` rows separated by blank lines.
pub fn parse_zoo(text: &str) -> Result<Vec<Polyomino>> {
    let mut out = Vec::new();
    let mut block = String::new();
    for line in text.lines().chain([""]) {
        if line.trim().is_empty() {
            if !block.is_empty() {
                out.push(parse_polyomino(&block)?);
                block.clear();
            }
        } else {
            block.push_str(line);
            block.push('\n');
        }
    }
    Ok(out)
}

/// A connected union of unit lattice squares glued edge to edge, with a
/// perfect matching. Vertices are the square corners.
pub fn random_quad_graph(seed: u64) -> PlanarGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let target = rng.gen_range(4..=12);
        let mut cells = vec![(0i32, 0i32)];
        while cells.len() < target {
            let (x, y) = cells[rng.gen_range(0..cells.len())];
            let next = [(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)][rng.gen_range(0..4)];
            if !cells.contains(&next) {
                cells.push(next);
            }
        }
        let g = quad_union_graph(&cells);
        if !enumerate_perfect_matchings(&g).is_empty() {
            return g;
        }
    }
}

pub fn quad_union_graph(cells: &[(i32, i32)]) -> PlanarGraph {
    let mut points = BTreeSet::new();
    let mut edges = BTreeSet::new();
    for &(x, y) in cells {
        let corners = [(x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)];
        for i in 0..4 {
            let (a, b) = (corners[i], corners[(i + 1) % 4]);
            points.insert(a);
            edges.insert((a.min(b), a.max(b)));
        }
    }
    let points: Vec<(i32, i32)> = points.into_iter().collect();
    let id = |p: (i32, i32)| points.binary_search(&p).expect("corner") as i64 + 1;
    let spec = GraphSpec {
        vertices: points
            .iter()
            .map(|&(x, y)| VertexSpec {
                id: id((x, y)),
                x: Coord::Int(x.into()),
                y: Coord::Int(y.into()),
            })
            .collect(),
        edges: edges.iter().map(|&(a, b)| [id(a), id(b)]).collect(),
        regions: None,
    };
    PlanarGraph::from_spec(&spec).expect("lattice squares form a plane graph")
}

/// JSON for a pinned graph file, one vertex per line. No explicit
/// regions, so loading re-extracts them from the drawing.
pub fn graph_file_json(g: &PlanarGraph) -> String {
    let spec = g.to_spec();
    let vertices: Vec<String> = spec
        .vertices
        .iter()
        .map(|v| format!("    {}", serde_json::to_string(v).expect("vertex serializes")))
        .collect();
    let edges: Vec<String> = spec.edges.iter().map(|[a, b]| format!("[{a},{b}]")).collect();
    format!(
        "{{\n  \"vertices\": [\n{}\n  ],\n  \"edges\": [{}]\n}}\n",
        vertices.join(",\n"),
        edges.join(",")
    )
}

/// Writes the pinned corpus files into `dir`.
pub fn write_fixtures(dir: &Path) -> Result<()> {
    let gallery_dir = dir.join("gallery");
    let random_dir = dir.join("random");
    std::fs::create_dir_all(&gallery_dir)?;
    std::fs::create_dir_all(&random_dir)?;
    for (name, _) in gallery::GALLERY {
        let Some(Ok(g)) = gallery::gallery_graph(name) else {
            bail!("gallery graph {name} does not build");
        };
        std::fs::write(gallery_dir.join(format!("{name}.json")), graph_file_json(&g))?;
    }
    for seed in 0..RANDOM_GRAPH_COUNT {
        let g = random_quad_graph(seed);
        std::fs::write(random_dir.join(format!("random-{seed:02}.json")), graph_file_json(&g))?;
    }
    std::fs::write(dir.join(ZOO_FILE), zoo_text(&polyomino_zoo(ZOO_MAX_CELLS)))?;
    Ok(())
}

//! The property catalog behind `cubmatch verify` and the acceptance suite.
//!
//! Every check walks the corpus in size order and stops at the first
//! counterexample, which becomes the witness of the report.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use cubmatch::complex::{alternating_sum, verify_edge_decomposition};
use cubmatch::fibpoly::{
    a_basis_image, a_unit_closed_form, affine_rank, affine_rank_of_points, apply_a, bareiss_rank,
    catalan_identity_check, f_polynomial, f_polynomial_by_enumeration, multiset_no_consecutive_count,
    p_closed_form, p_polynomial, IntPolynomial,
};
use cubmatch::matching::{cube_coordinates, symmetric_difference_cycles};
use cubmatch::planar::{build_ladder, classify_edges, reduce, EdgeClass, LabeledGraph, Polyomino};
use cubmatch::topology::{
    collapse_search_seeded, independence_complex, kozlov_reference_betti, link_of_face, matched_region_graph,
    verify_certificate, z2_betti, CellComplex, CollapseVerdict, KozlovFamily,
};
use cubmatch::{enumerate_perfect_matchings, Error, Matching, PlanarGraph, TilingFace};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::corpus::{Corpus, Fixture};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Section {
    Graphs,
    Complex,
    Links,
    Topology,
    Polynomials,
}

impl Section {
    pub const ALL: [Section; 5] = [
        Section::Graphs,
        Section::Complex,
        Section::Links,
        Section::Topology,
        Section::Polynomials,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Section::Graphs => "graphs",
            Section::Complex => "complex",
            Section::Links => "links",
            Section::Topology => "topology",
            Section::Polynomials => "polynomials",
        }
    }
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    All,
    Section(Section),
}

impl FromStr for Scope {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "all" {
            return Ok(Scope::All);
        }
        Section::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .map(Scope::Section)
            .ok_or_else(|| {
                let names: Vec<&str> = Section::ALL.iter().map(|x| x.name()).collect();
                format!("unknown scope {s:?}; expected all, {}", names.join(", "))
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Largest ladder length in the corpus and in ladder checks.
    pub max_n: usize,
    /// Largest `d` for the A_d identities.
    pub max_d: usize,
    /// Randomized collapse restarts per component.
    pub budget: usize,
    pub seed: u64,
    /// Link and collapse checks skip complexes larger than this.
    pub max_faces: usize,
    /// Cube embedding check skips graphs with more regions.
    pub max_regions: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_n: 8,
            max_d: 8,
            budget: 64,
            seed: 0,
            max_faces: 5000,
            max_regions: 12,
        }
    }
}

pub struct Context<'a> {
    pub corpus: &'a Corpus,
    pub bounds: &'a Bounds,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    pub message: String,
    pub witness: Value,
}

impl Failure {
    fn new(message: impl Into<String>, witness: Value) -> Self {
        Failure {
            message: message.into(),
            witness,
        }
    }

    fn at(fx: &Fixture, message: impl Into<String>) -> Self {
        Failure::new(message, graph_witness(fx))
    }

    fn at_face(fx: &Fixture, face: &TilingFace, message: impl Into<String>) -> Self {
        let mut w = graph_witness(fx);
        w["face"] = face_json(&fx.graph, face);
        Failure::new(message, w)
    }
}

fn graph_witness(fx: &Fixture) -> Value {
    json!({ "fixture": fx.name, "graph": fx.graph.to_spec() })
}

fn face_json(g: &PlanarGraph, f: &TilingFace) -> Value {
    json!({ "matching": f.matching.to_ids(g), "cycles": f.cycles })
}

fn poly_json(p: &IntPolynomial) -> Value {
    serde_json::to_value(p).expect("polynomials serialize")
}

type Outcome = Result<String, Failure>;

pub struct Check {
    pub id: &'static str,
    pub section: Section,
    /// Acceptance criterion this check decides, if any.
    pub criterion: Option<u8>,
    pub topic: &'static str,
    run: fn(&Context) -> Outcome,
}

impl Check {
    pub fn run(&self, ctx: &Context) -> CheckReport {
        let outcome = (self.run)(ctx);
        let (status, detail, witness) = match outcome {
            Ok(detail) => (Status::Pass, detail, None),
            Err(f) => (Status::Fail, f.message, Some(f.witness)),
        };
        CheckReport {
            id: self.id.to_string(),
            section: self.section,
            topic: self.topic.to_string(),
            status,
            detail,
            witness,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub section: Section,
    pub topic: String,
    pub status: Status,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    /// Sorted by check id.
    pub checks: Vec<CheckReport>,
    pub passed: usize,
    pub failed: usize,
}

impl VerificationReport {
    pub fn from_checks(mut checks: Vec<CheckReport>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let passed = checks.iter().filter(|c| c.status == Status::Pass).count();
        VerificationReport {
            failed: checks.len() - passed,
            passed,
            checks,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_table(&self) -> String {
        let width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
        let mut out = String::new();
        for c in &self.checks {
            let mark = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            out.push_str(&format!("{mark}  {:width$}  {}\n", c.id, c.detail));
            if let Some(w) = &c.witness {
                if let Some(name) = w.get("fixture").and_then(Value::as_str) {
                    out.push_str(&format!("      {:width$}  witness: {name}\n", ""));
                }
            }
        }
        out.push_str(&format!("{} passed, {} failed\n", self.passed, self.failed));
        out
    }
}

pub fn catalog() -> &'static [Check] {
    CATALOG
}

pub fn checks_for_criterion(n: u8) -> impl Iterator<Item = &'static Check> {
    CATALOG.iter().filter(move |c| c.criterion == Some(n))
}

/// Runs the selected checks concurrently; the report order does not depend
/// on completion order.
pub fn run(scope: Scope, ctx: &Context) -> VerificationReport {
    let selected: Vec<&Check> = CATALOG
        .iter()
        .filter(|c| match scope {
            Scope::All => true,
            Scope::Section(s) => c.section == s,
        })
        .collect();
    run_checks(&selected, ctx)
}

pub fn run_checks(checks: &[&Check], ctx: &Context) -> VerificationReport {
    let reports = std::thread::scope(|s| {
        let handles: Vec<_> = checks.iter().map(|c| (c, s.spawn(move || c.run(ctx)))).collect();
        handles
            .into_iter()
            .map(|(c, h)| {
                h.join().unwrap_or_else(|_| CheckReport {
                    id: c.id.to_string(),
                    section: c.section,
                    topic: c.topic.to_string(),
                    status: Status::Fail,
                    detail: "check panicked".into(),
                    witness: Some(Value::Null),
                })
            })
            .collect()
    });
    VerificationReport::from_checks(reports)
}

const CATALOG: &[Check] = &[
    Check {
        id: "complex.decomposition",
        section: Section::Complex,
        criterion: Some(11),
        topic: "edge decomposition identity on every outer edge",
        run: complex_decomposition,
    },
    Check {
        id: "complex.dimension",
        section: Section::Complex,
        criterion: None,
        topic: "ladder complexes have dimension ceil(n/2)",
        run: complex_dimension,
    },
    Check {
        id: "complex.euler-components",
        section: Section::Complex,
        criterion: None,
        topic: "alternating f-sum equals the number of components",
        run: complex_euler_components,
    },
    Check {
        id: "complex.euler-relation",
        section: Section::Complex,
        criterion: Some(1),
        topic: "connected complexes have alternating f-sum 1; only nesting disconnects",
        run: complex_euler_relation,
    },
    Check {
        id: "complex.intervals",
        section: Section::Complex,
        criterion: None,
        topic: "each face has 2^k vertices and 2k facets below it",
        run: complex_intervals,
    },
    Check {
        id: "complex.ladder-recurrence",
        section: Section::Complex,
        criterion: Some(2),
        topic: "f-vector recurrences for ladders and bumped ladders",
        run: complex_ladder_recurrence,
    },
    Check {
        id: "graphs.edge-classes",
        section: Section::Graphs,
        criterion: None,
        topic: "forced/forbidden/free agree with enumeration",
        run: graphs_edge_classes,
    },
    Check {
        id: "graphs.euler-formula",
        section: Section::Graphs,
        criterion: None,
        topic: "V - E + F = 1 + components for every embedding",
        run: graphs_euler_formula,
    },
    Check {
        id: "graphs.ladder-blocks",
        section: Section::Graphs,
        criterion: None,
        topic: "2 x (n+1) cell blocks are ladders",
        run: graphs_ladder_blocks,
    },
    Check {
        id: "graphs.reduction",
        section: Section::Graphs,
        criterion: None,
        topic: "reduction preserves the number of tilings",
        run: graphs_reduction,
    },
    Check {
        id: "links.bipartite",
        section: Section::Links,
        criterion: Some(7),
        topic: "G_F bipartite and links have at most two components",
        run: links_bipartite,
    },
    Check {
        id: "links.isomorphism",
        section: Section::Links,
        criterion: Some(6),
        topic: "link of every face is the independence complex of G_F",
        run: links_isomorphism,
    },
    Check {
        id: "links.kozlov",
        section: Section::Links,
        criterion: Some(8),
        topic: "homology of independence complexes of paths and cycles",
        run: links_kozlov,
    },
    Check {
        id: "links.quadrilaterals",
        section: Section::Links,
        criterion: None,
        topic: "with square regions, G_F is a union of paths and even cycles",
        run: links_quadrilaterals,
    },
    Check {
        id: "matchings.cube-embedding",
        section: Section::Complex,
        criterion: Some(12),
        topic: "cube coordinates are injective and faces map to subcubes",
        run: matchings_cube_embedding,
    },
    Check {
        id: "matchings.even-cycles",
        section: Section::Graphs,
        criterion: None,
        topic: "symmetric differences are disjoint even cycles",
        run: matchings_even_cycles,
    },
    Check {
        id: "matchings.ladder-counts",
        section: Section::Graphs,
        criterion: None,
        topic: "ladder tilings follow the Fibonacci recurrence",
        run: matchings_ladder_counts,
    },
    Check {
        id: "poly.a-map",
        section: Section::Polynomials,
        criterion: Some(4),
        topic: "A_d closed form, ladder identities, Catalan identity, injectivity",
        run: poly_a_map,
    },
    Check {
        id: "poly.affine-independence",
        section: Section::Polynomials,
        criterion: Some(5),
        topic: "affine independence of P polynomials and of corpus f-vectors",
        run: poly_affine_independence,
    },
    Check {
        id: "poly.closed-forms",
        section: Section::Polynomials,
        criterion: Some(3),
        topic: "closed form of P_n, Fibonacci sums, sparse-subset counts",
        run: poly_closed_forms,
    },
    Check {
        id: "poly.cube-distance",
        section: Section::Polynomials,
        criterion: None,
        topic: "coefficients of P_n count vertices by cube distance",
        run: poly_cube_distance,
    },
    Check {
        id: "poly.f-enumeration",
        section: Section::Polynomials,
        criterion: None,
        topic: "F recurrences agree with enumerated complexes",
        run: poly_f_enumeration,
    },
    Check {
        id: "topology.betti-euler",
        section: Section::Topology,
        criterion: None,
        topic: "alternating Betti sum equals Euler characteristic; boundary squares to 0",
        run: topology_betti_euler,
    },
    Check {
        id: "topology.contractible",
        section: Section::Topology,
        criterion: Some(10),
        topic: "components are acyclic and collapse to a point",
        run: topology_contractible,
    },
    Check {
        id: "topology.counterexample",
        section: Section::Topology,
        criterion: Some(9),
        topic: "nested squares: two collapsible components, product identity",
        run: topology_counterexample,
    },
];

/// Fixture name of the non-collapsible example.
pub const COUNTEREXAMPLE: &str = "nested-squares";

fn for_fixtures(
    ctx: &Context,
    select: impl Fn(&Fixture) -> bool,
    mut body: impl FnMut(&Fixture) -> Result<(), Failure>,
) -> Result<usize, Failure> {
    let mut n = 0;
    for fx in ctx.corpus.fixtures.iter().filter(|f| select(f)) {
        body(fx)?;
        n += 1;
    }
    Ok(n)
}

fn fmt_vec<T: fmt::Display>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(T::to_string).collect();
    format!("({})", parts.join(","))
}

// ---- graphs ----

fn graphs_euler_formula(ctx: &Context) -> Outcome {
    let n = for_fixtures(ctx, |_| true, |fx| {
        let g = &fx.graph;
        let lhs = g.vertex_count() as i64 - g.edge_count() as i64 + g.bounded_faces().len() as i64 + 1;
        if lhs != 1 + g.component_count() as i64 {
            return Err(Failure::at(fx, format!("V - E + F = {lhs} with {} components", g.component_count())));
        }
        Ok(())
    })?;
    Ok(format!("{n} embeddings"))
}

fn graphs_ladder_blocks(ctx: &Context) -> Outcome {
    for n in 1..=ctx.bounds.max_n {
        let block = Polyomino::rectangle(2, n as i32 + 1).to_graph().map_err(|e| Failure::new(e.to_string(), json!({ "n": n })))?;
        let ladder = build_ladder(n, None).map_err(|e| Failure::new(e.to_string(), json!({ "n": n })))?;
        let by_id = |g: &PlanarGraph| -> BTreeSet<(i64, i64)> { g.edges().iter().map(|&(a, b)| (g.id(a), g.id(b))).collect() };
        if block.ids() != ladder.ids() || by_id(&block) != by_id(&ladder) {
            return Err(Failure::new(
                format!("2 x {} block differs from ladder {n}", n + 1),
                json!({ "block": block.to_spec(), "ladder": ladder.to_spec() }),
            ));
        }
    }
    Ok(format!("n <= {}", ctx.bounds.max_n))
}

fn graphs_edge_classes(ctx: &Context) -> Outcome {
    let n = for_fixtures(ctx, |_| true, |fx| {
        let ms = enumerate_perfect_matchings(&fx.graph);
        let classes = classify_edges(&fx.graph);
        for &(a, b) in fx.graph.edges() {
            let uses = ms.iter().filter(|m| m.contains(a, b)).count();
            let expected = if uses == 0 {
                EdgeClass::Forbidden
            } else if uses == ms.len() {
                EdgeClass::Forced
            } else {
                EdgeClass::Free
            };
            if classes.class_of(a, b) != Some(expected) {
                return Err(Failure::at(
                    fx,
                    format!("edge ({}, {}) classified {:?}, expected {expected:?}", fx.graph.id(a), fx.graph.id(b), classes.class_of(a, b)),
                ));
            }
        }
        Ok(())
    })?;
    Ok(format!("{n} graphs"))
}

fn graphs_reduction(ctx: &Context) -> Outcome {
    let n = for_fixtures(ctx, |_| true, |fx| {
        let count = enumerate_perfect_matchings(&fx.graph).len();
        match reduce(&fx.graph) {
            Ok(r) => {
                let reduced = enumerate_perfect_matchings(&r.graph).len();
                if reduced != count {
                    return Err(Failure::at(fx, format!("{count} tilings before reduction, {reduced} after")));
                }
            }
            Err(Error::NoPerfectMatching) if count == 0 => {}
            Err(e) => return Err(Failure::at(fx, e.to_string())),
        }
        Ok(())
    })?;
    Ok(format!("{n} graphs"))
}

fn matchings_ladder_counts(_: &Context) -> Outcome {
    let mut counts = vec![1usize];
    for n in 1..=10 {
        let g = build_ladder(n, None).map_err(|e| Failure::new(e.to_string(), json!({ "n": n })))?;
        counts.push(enumerate_perfect_matchings(&g).len());
    }
    if counts[1] != 2 {
        return Err(Failure::new("ladder 1 must have 2 tilings", json!({ "counts": counts })));
    }
    for n in 2..counts.len() {
        if counts[n] != counts[n - 1] + counts[n - 2] {
            return Err(Failure::new(format!("recurrence fails at n = {n}"), json!({ "counts": counts })));
        }
    }
    Ok(format!("counts {}", fmt_vec(&counts)))
}

fn matchings_even_cycles(ctx: &Context) -> Outcome {
    let n = for_fixtures(ctx, |_| true, |fx| {
        let ms = enumerate_perfect_matchings(&fx.graph);
        let Some(base) = ms.first() else { return Ok(()) };
        for m in &ms {
            let d = symmetric_difference_cycles(base, m).map_err(|e| Failure::at(fx, e.to_string()))?;
            let mut seen = BTreeSet::new();
            for c in &d.cycles {
                if c.len() < 4 || c.len() % 2 == 1 || !c.iter().all(|v| seen.insert(*v)) {
                    let mut w = graph_witness(fx);
                    w["matchings"] = json!([base.to_ids(&fx.graph), m.to_ids(&fx.graph)]);
                    return Err(Failure::new(format!("bad cycle of length {}", c.len()), w));
                }
            }
        }
        Ok(())
    })?;
    Ok(format!("{n} graphs"))
}

fn matchings_cube_embedding(ctx: &Context) -> Outcome {
    let max_regions = ctx.bounds.max_regions;
    let n = for_fixtures(
        ctx,
        |fx| fx.graph.regions().len() <= max_regions,
        |fx| {
            let k = fx.complex();
            let g = &fx.graph;
            let Some(base) = k.vertices().next() else { return Ok(()) };
            let order: Vec<usize> = (0..g.regions().len()).collect();
            let coords = cube_coordinates(g, base, &order).map_err(|e| Failure::at(fx, e.to_string()))?;
            let distinct: BTreeSet<&Vec<u8>> = coords.values().collect();
            if distinct.len() != coords.len() {
                return Err(Failure::at(fx, "cube coordinates are not injective"));
            }
            for f in k.faces() {
                let images: Vec<&Vec<u8>> = f.vertices(g).iter().map(|m| &coords[m]).collect();
                let outside_fixed = (0..order.len())
                    .filter(|j| f.cycles.binary_search(j).is_err())
                    .all(|j| images.iter().all(|x| x[j] == images[0][j]));
                let patterns: BTreeSet<Vec<u8>> =
                    images.iter().map(|x| f.cycles.iter().map(|&j| x[j]).collect()).collect();
                if !outside_fixed || patterns.len() != 1 << f.dim() {
                    return Err(Failure::at_face(fx, f, "face image is not a subcube"));
                }
            }
            Ok(())
        },
    )?;
    Ok(format!("{n} graphs with <= {max_regions} regions"))
}

// ---- complex ----

/// Some component of the reduced graph lies inside a face of another.
fn has_nested_components(g: &PlanarGraph) -> bool {
    reduce(g).is_ok_and(|r| r.graph.bounded_faces().iter().any(|f| f.holed))
}

fn complex_euler_relation(ctx: &Context) -> Outcome {
    let mut connected = 0;
    for_fixtures(ctx, |_| true, |fx| {
        let k = fx.complex();
        let parts = k.connected_components().len();
        if parts == 1 {
            connected += 1;
            let chi = k.euler_characteristic();
            if chi != 1 {
                return Err(Failure::at(fx, format!("f = {} has alternating sum {chi}", fmt_vec(&k.f_vector()))));
            }
        } else if parts > 1 && !has_nested_components(&fx.graph) {
            return Err(Failure::at(fx, format!("{parts} components but no nested components after reduction")));
        }
        Ok(())
    })?;
    Ok(format!("{connected} connected complexes"))
}

fn complex_euler_components(ctx: &Context) -> Outcome {
    let n = for_fixtures(ctx, |_| true, |fx| {
        let k = fx.complex();
        let parts = k.connected_components().len() as i64;
        if k.euler_characteristic() != parts {
            return Err(Failure::at(fx, format!("Euler characteristic {} with {parts} components", k.euler_characteristic())));
        }
        Ok(())
    })?;
    Ok(format!("{n} complexes"))
}

fn complex_intervals(ctx: &Context) -> Outcome {
    let max_faces = ctx.bounds.max_faces;
    let n = for_fixtures(
        ctx,
        |fx| fx.complex().len() <= max_faces,
        |fx| {
            let k = fx.complex();
            let g = k.graph();
            let verts: Vec<TilingFace> = k.vertices().map(|m| TilingFace::new(m.clone(), vec![])).collect();
            for f in k.faces() {
                let facets = f.facets(g);
                if facets.len() != 2 * f.dim() || !facets.iter().all(|x| k.contains(x) && cubmatch::face_leq(g, x, f)) {
                    return Err(Failure::at_face(fx, f, "facets missing or not below the face"));
                }
                let below = verts.iter().filter(|v| cubmatch::face_leq(g, v, f)).count();
                if below != 1 << f.dim() {
                    return Err(Failure::at_face(fx, f, format!("{below} vertices below a {}-face", f.dim())));
                }
            }
            Ok(())
        },
    )?;
    Ok(format!("{n} complexes"))
}

fn complex_dimension(ctx: &Context) -> Outcome {
    let n = for_fixtures(ctx, |fx| matches!(fx.ladder, Some((_, None))), |fx| {
        let (n, _) = fx.ladder.expect("ladder fixture");
        if fx.complex().dim() != Some(n.div_ceil(2)) {
            return Err(Failure::at(fx, format!("dimension {:?}, expected {}", fx.complex().dim(), n.div_ceil(2))));
        }
        Ok(())
    })?;
    Ok(format!("{n} ladders"))
}

/// `a + b + x b` on coefficient vectors.
fn ladder_step(a: &[usize], b: &[usize]) -> Vec<usize> {
    let len = a.len().max(b.len() + 1);
    let at = |v: &[usize], i: usize| v.get(i).copied().unwrap_or(0);
    let mut out: Vec<usize> = (0..len).map(|i| at(a, i) + at(b, i) + if i > 0 { at(b, i - 1) } else { 0 }).collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn complex_ladder_recurrence(ctx: &Context) -> Outcome {
    let f: BTreeMap<(usize, Option<usize>), Vec<usize>> = ctx
        .corpus
        .fixtures
        .iter()
        .filter_map(|fx| fx.ladder.map(|key| (key, fx.complex().f_vector())))
        .collect();
    let max_n = ctx.bounds.max_n;
    let mut checked = 0;
    let mut compare = |label: String, lhs: (usize, Option<usize>), a: (usize, Option<usize>), b: (usize, Option<usize>)| {
        let (Some(l), Some(x), Some(y)) = (f.get(&lhs), f.get(&a), f.get(&b)) else {
            return Err(Failure::new(format!("{label}: ladder missing from corpus"), json!({})));
        };
        let rhs = ladder_step(x, y);
        checked += 1;
        if *l == rhs {
            Ok(())
        } else {
            Err(Failure::new(
                format!("{label}: {} != {}", fmt_vec(l), fmt_vec(&rhs)),
                json!({ "lhs": lhs, "terms": [a, b] }),
            ))
        }
    };
    for n in 1..=max_n.saturating_sub(2) {
        compare(format!("plain n={n}"), (n + 2, None), (n + 1, None), (n, None))?;
        for i in 1..=n {
            compare(format!("left n={n} i={i}"), (n + 2, Some(i)), (n + 1, Some(i)), (n, Some(i)))?;
        }
        for i in 3..=n + 2 {
            compare(format!("right n={n} i={i}"), (n + 2, Some(i)), (n + 1, Some(i - 1)), (n, Some(i - 2)))?;
        }
    }
    Ok(format!("{checked} identities, n + 2 <= {max_n}"))
}

fn complex_decomposition(ctx: &Context) -> Outcome {
    let mut edges = 0;
    for_fixtures(ctx, |_| true, |fx| {
        for (a, b) in fx.graph.outer_edges() {
            match verify_edge_decomposition(&fx.graph, a, b) {
                Ok(r) if r.holds() => edges += 1,
                Ok(r) => {
                    let mut w = graph_witness(fx);
                    w["report"] = serde_json::to_value(&r).unwrap_or(Value::Null);
                    return Err(Failure::new(format!("decomposition fails on edge {:?}", r.edge), w));
                }
                Err(Error::NoBoundedRegion(..)) => {}
                Err(e) => return Err(Failure::at(fx, e.to_string())),
            }
        }
        Ok(())
    })?;
    Ok(format!("{edges} outer edges"))
}

// ---- links ----

fn links_isomorphism(ctx: &Context) -> Outcome {
    let max_faces = ctx.bounds.max_faces;
    let mut faces = 0;
    for_fixtures(ctx, |fx| fx.complex().len() <= max_faces, |fx| {
        let k = fx.complex();
        for f in k.faces() {
            link_of_face(k, f).map_err(|e| Failure::at_face(fx, f, e.to_string()))?;
            faces += 1;
        }
        Ok(())
    })?;
    Ok(format!("{faces} faces"))
}

fn links_bipartite(ctx: &Context) -> Outcome {
    let max_faces = ctx.bounds.max_faces;
    let mut faces = 0;
    for_fixtures(ctx, |fx| fx.graph.is_bipartite() && fx.complex().len() <= max_faces, |fx| {
        let k = fx.complex();
        for f in k.faces() {
            let gf = matched_region_graph(k, f).map_err(|e| Failure::at_face(fx, f, e.to_string()))?;
            if !gf.is_bipartite() {
                return Err(Failure::at_face(fx, f, "G_F is not bipartite"));
            }
            let link = link_of_face(k, f).map_err(|e| Failure::at_face(fx, f, e.to_string()))?;
            let b0 = z2_betti(&link.complex).0.first().copied().unwrap_or(0);
            if b0 > 2 {
                return Err(Failure::at_face(fx, f, format!("link has {b0} components")));
            }
            faces += 1;
        }
        Ok(())
    })?;
    Ok(format!("{faces} faces of bipartite graphs"))
}

/// Every component has maximum degree 2 and cycles are even.
fn paths_and_even_cycles(h: &LabeledGraph) -> bool {
    let adj = h.neighbors();
    h.components().iter().all(|comp| {
        let edges: usize = comp.iter().map(|v| adj[v].len()).sum::<usize>() / 2;
        comp.iter().all(|v| adj[v].len() <= 2) && (edges < comp.len() || comp.len() % 2 == 0)
    })
}

fn links_quadrilaterals(ctx: &Context) -> Outcome {
    let mut faces = 0;
    let select = |fx: &Fixture| fx.graph.is_bipartite() && fx.graph.regions().iter().all(|r| r.len() == 4);
    let graphs = for_fixtures(ctx, select, |fx| {
        let k = fx.complex();
        for f in k.faces() {
            let gf = matched_region_graph(k, f).map_err(|e| Failure::at_face(fx, f, e.to_string()))?;
            if !paths_and_even_cycles(&gf) {
                return Err(Failure::at_face(fx, f, "G_F is not a union of paths and even cycles"));
            }
            faces += 1;
        }
        Ok(())
    })?;
    Ok(format!("{faces} faces over {graphs} graphs"))
}

fn links_kozlov(_: &Context) -> Outcome {
    let cases = (1..=12)
        .map(|n| (KozlovFamily::Path, n, LabeledGraph::path(n)))
        .chain((3..=12).map(|n| (KozlovFamily::Cycle, n, LabeledGraph::cycle(n))));
    let mut checked = 0;
    for (family, n, h) in cases {
        let got = z2_betti(&independence_complex(&h));
        let expected = kozlov_reference_betti(family, n).map_err(|e| Failure::new(e.to_string(), json!({ "n": n })))?;
        if got != expected {
            return Err(Failure::new(
                format!("{family:?} {n}: Betti {got}, expected {expected}"),
                json!({ "graph": h.edges, "betti": got.0, "expected": expected.0 }),
            ));
        }
        checked += 1;
    }
    Ok(format!("{checked} graphs"))
}

// ---- topology ----

fn topology_betti_euler(ctx: &Context) -> Outcome {
    let n = for_fixtures(ctx, |_| true, |fx| {
        let k = fx.complex();
        let b = z2_betti(k);
        if alternating_sum(&b.0) != k.euler_characteristic() {
            return Err(Failure::at(fx, format!("Betti {b} against Euler characteristic {}", k.euler_characteristic())));
        }
        if !CellComplex::from_cubical(k).boundary_squared_vanishes() {
            return Err(Failure::at(fx, "boundary of boundary is nonzero"));
        }
        Ok(())
    })?;
    for n in 3..=12 {
        if !CellComplex::from_simplicial(&independence_complex(&LabeledGraph::cycle(n))).boundary_squared_vanishes() {
            return Err(Failure::new("simplicial boundary of boundary is nonzero", json!({ "cycle": n })));
        }
    }
    Ok(format!("{n} complexes"))
}

fn topology_contractible(ctx: &Context) -> Outcome {
    let Bounds { budget, seed, max_faces, .. } = *ctx.bounds;
    let mut components = 0;
    for_fixtures(ctx, |_| true, |fx| {
        for part in fx.complex().connected_components() {
            let b = z2_betti(&part);
            if !b.is_acyclic() {
                return Err(Failure::at(fx, format!("component with {} faces has Betti {b}", part.len())));
            }
            if part.len() <= max_faces {
                match collapse_search_seeded(&part, budget, seed) {
                    CollapseVerdict::Collapsible(cert) if verify_certificate(&part, &cert) => {}
                    CollapseVerdict::Collapsible(_) => {
                        return Err(Failure::at(fx, "collapse certificate does not replay"));
                    }
                    other => {
                        return Err(Failure::at(fx, format!("component with {} faces: {other:?}", part.len())));
                    }
                }
            }
            components += 1;
        }
        Ok(())
    })?;
    Ok(format!("{components} components"))
}

fn f_product(a: &[usize], b: &[usize]) -> Vec<usize> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn region_ids(g: &PlanarGraph) -> Vec<Vec<i64>> {
    g.regions()
        .iter()
        .map(|r| {
            let mut c: Vec<i64> = r.cycle.iter().map(|&v| g.id(v)).collect();
            c.sort_unstable();
            c
        })
        .collect()
}

fn topology_counterexample(ctx: &Context) -> Outcome {
    let Some(fx) = ctx.corpus.get(COUNTEREXAMPLE) else {
        return Err(Failure::new(format!("fixture {COUNTEREXAMPLE} is missing"), Value::Null));
    };
    let k = fx.complex();
    let parts = k.connected_components();
    if parts.len() != 2 {
        return Err(Failure::at(fx, format!("{} components, expected 2", parts.len())));
    }
    for p in &parts {
        if p.f_vector() != [2, 1] || z2_betti(p).0 != [1] {
            return Err(Failure::at(fx, format!("component f = {}, Betti {}", fmt_vec(&p.f_vector()), z2_betti(p))));
        }
    }
    let verdict = collapse_search_seeded(k, ctx.bounds.budget, ctx.bounds.seed);
    if !matches!(verdict, CollapseVerdict::NotCollapsible(_)) {
        return Err(Failure::at(fx, format!("verdict {verdict:?}, expected not collapsible")));
    }

    // G' is the reduced graph; G2 is the component owning a region R that
    // holds the other component G1 and so is no region of G'.
    let reduced = reduce(&fx.graph).map_err(|e| Failure::at(fx, e.to_string()))?.graph;
    let kept = region_ids(&reduced);
    let comps = reduced.component_graphs();
    if comps.len() != 2 {
        return Err(Failure::at(fx, format!("reduced graph has {} components", comps.len())));
    }
    let outer_idx = comps.iter().position(|c| region_ids(c).iter().any(|r| !kept.contains(r)));
    let Some(outer_idx) = outer_idx else {
        return Err(Failure::at(fx, "no component has a region enclosing the other"));
    };
    let g2 = &comps[outer_idx];
    let g1 = &comps[1 - outer_idx];
    let lost: Vec<usize> = region_ids(g2)
        .iter()
        .enumerate()
        .filter(|(_, r)| !kept.contains(r))
        .map(|(i, _)| i)
        .collect();
    let c2 = cubmatch::build_complex(g2);
    let mut f2 = Vec::new();
    for f in c2.faces().iter().filter(|f| !f.cycles.iter().any(|r| lost.contains(r))) {
        if f2.len() <= f.dim() {
            f2.resize(f.dim() + 1, 0);
        }
        f2[f.dim()] += 1;
    }
    let f1 = cubmatch::build_complex(g1).f_vector();
    let whole = cubmatch::build_complex(&reduced).f_vector();
    let product = f_product(&f1, &f2);
    if whole != product || whole != k.f_vector() {
        return Err(Failure::at(
            fx,
            format!("f(G') = {}, f(G) = {}, product {} * {} = {}", fmt_vec(&whole), fmt_vec(&k.f_vector()), fmt_vec(&f1), fmt_vec(&f2), fmt_vec(&product)),
        ));
    }
    Ok(format!("2 components, not collapsible, f = {} * {} = {}", fmt_vec(&f1), fmt_vec(&f2), fmt_vec(&whole)))
}

// ---- polynomials ----

fn fib(n: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::from(0), BigInt::from(1));
    for _ in 0..n {
        let c = &a + &b;
        a = std::mem::replace(&mut b, c);
    }
    a
}

fn poly_err(e: cubmatch::Error) -> Failure {
    Failure::new(e.to_string(), Value::Null)
}

fn poly_closed_forms(ctx: &Context) -> Outcome {
    for n in 1..=14 {
        let (p, c) = (p_polynomial(n, None).map_err(poly_err)?, p_closed_form(n).map_err(poly_err)?);
        if p != c {
            return Err(Failure::new(format!("P_{n} differs from its closed form"), json!({ "n": n, "recurrence": poly_json(&p), "closed": poly_json(&c) })));
        }
    }
    for n in 1..=10 {
        let p1 = p_polynomial(n, None).map_err(poly_err)?.eval(&BigInt::from(1));
        let f0 = f_polynomial(n, None).map_err(poly_err)?.eval(&BigInt::from(0));
        let g = build_ladder(n, None).map_err(poly_err)?;
        let count = BigInt::from(enumerate_perfect_matchings(&g).len());
        if p1 != f0 || f0 != count || count != fib(n + 2) {
            return Err(Failure::new(
                format!("ladder {n}: P(1) = {p1}, F(0) = {f0}, tilings {count}, Fib = {}", fib(n + 2)),
                json!({ "n": n }),
            ));
        }
    }
    let max_n = ctx.bounds.max_n;
    for n in 1..=max_n {
        for bump in std::iter::once(None).chain((1..=n).map(Some)) {
            let p = p_polynomial(n, bump).map_err(poly_err)?;
            for k in 0..=n {
                let count = multiset_no_consecutive_count(n, bump, k).map_err(poly_err)?;
                if p.coeff(k) != BigInt::from(count) {
                    return Err(Failure::new(
                        format!("P_{n},{bump:?}: coefficient of x^{k} is {}, count {count}", p.coeff(k)),
                        json!({ "n": n, "bump": bump, "polynomial": poly_json(&p) }),
                    ));
                }
            }
        }
    }
    Ok(format!("closed form n <= 14, Fibonacci n <= 10, counts n <= {max_n}"))
}

fn poly_cube_distance(ctx: &Context) -> Outcome {
    let n = for_fixtures(ctx, |fx| matches!(fx.ladder, Some((_, None))), |fx| {
        let (n, _) = fx.ladder.expect("ladder fixture");
        let g = &fx.graph;
        let rungs: Vec<[i64; 2]> = (1..=n as i64 + 1).map(|j| [j, j + n as i64 + 1]).collect();
        let base = Matching::from_ids(g, &rungs).map_err(|e| Failure::at(fx, e.to_string()))?;
        let order: Vec<usize> = (0..g.regions().len()).collect();
        let coords = cube_coordinates(g, &base, &order).map_err(|e| Failure::at(fx, e.to_string()))?;
        let mut by_distance = vec![0u64; n + 1];
        for x in coords.values() {
            by_distance[x.iter().filter(|&&b| b == 1).count()] += 1;
        }
        let p = p_polynomial(n, None).map_err(poly_err)?;
        if (0..=n).any(|k| p.coeff(k) != BigInt::from(by_distance[k])) {
            return Err(Failure::at(fx, format!("distances {} against P_{n} = {p}", fmt_vec(&by_distance))));
        }
        Ok(())
    })?;
    Ok(format!("{n} ladders"))
}

fn poly_a_map(ctx: &Context) -> Outcome {
    let max_d = ctx.bounds.max_d;
    let p = |n: usize, b: Option<usize>| p_polynomial(n, b).map_err(poly_err);
    let a = |d: usize, q: &IntPolynomial| apply_a(d, q).map_err(poly_err);
    let mismatch = |what: String, got: &IntPolynomial, want: &IntPolynomial| {
        Failure::new(what, json!({ "got": poly_json(got), "expected": poly_json(want) }))
    };
    for d in 0..=max_d + 2 {
        for k in 0..=d {
            let (by_map, closed) = (a_basis_image(d, k).map_err(poly_err)?, a_unit_closed_form(d, k).map_err(poly_err)?);
            if by_map != closed {
                return Err(mismatch(format!("A_{d}(x^{k}) differs from the Catalan closed form"), &by_map, &closed));
            }
        }
    }
    for d in 1..=max_d {
        let cases = [
            (d, p(2 * d - 1, None)?, p(2 * d + 1, None)?),
            (d, p(2 * d, None)?, p(2 * d + 2, None)?),
            (d + 1, p(2 * d, None)?, p(2 * d + 2, None)?),
        ];
        for (dd, arg, want) in cases {
            let got = a(dd, &arg)?;
            if got != want {
                return Err(mismatch(format!("A_{dd}({arg}) for d = {d}"), &got, &want));
            }
        }
        for i in 1..=d / 2 {
            for (arg, want) in [(p(2 * d - 1, Some(i))?, p(2 * d + 1, Some(i))?), (p(2 * d, Some(i))?, p(2 * d + 2, Some(i))?)] {
                let got = a(d, &arg)?;
                if got != want {
                    return Err(mismatch(format!("A_{d}({arg}) with bump {i}"), &got, &want));
                }
            }
        }
        if d >= 2 {
            let diff = &p(2 * d + 1, Some(d))? - &p(2 * d + 1, Some(d - 1))?;
            let sign = if d % 2 == 1 { 1 } else { -1 };
            let want = IntPolynomial::monomial(d + 1, BigInt::from(sign)) + IntPolynomial::monomial(d, BigInt::from(sign));
            if diff != want {
                return Err(mismatch(format!("P_{{{},{d}}} - P_{{{},{}}}", 2 * d + 1, 2 * d + 1, d - 1), &diff, &want));
            }
        }
        let rows = (0..=d)
            .map(|k| a_basis_image(d, k).map(|q| q.padded(d + 1)))
            .collect::<Result<Vec<_>, _>>()
            .map_err(poly_err)?;
        let rank = bareiss_rank(rows);
        if rank != d + 1 {
            return Err(Failure::new(format!("A_{d} has rank {rank}, expected {}", d + 1), json!({ "d": d })));
        }
    }
    for n in 1..=20 {
        for k in 1..=n {
            let r = catalan_identity_check(n, k).map_err(poly_err)?;
            if !r.holds {
                return Err(Failure::new(
                    format!("Catalan identity fails at n = {n}, k = {k}"),
                    json!({ "lhs": r.lhs.to_string(), "rhs": r.rhs.to_string() }),
                ));
            }
        }
    }
    Ok(format!("closed form d <= {}, identities d <= {max_d}, Catalan identity n <= 20", max_d + 2))
}

fn poly_affine_independence(ctx: &Context) -> Outcome {
    for d in 2..=6.min(ctx.bounds.max_d) {
        let mut set = vec![p_polynomial(2 * d - 1, None).map_err(poly_err)?, p_polynomial(2 * d, None).map_err(poly_err)?];
        for i in 1..d {
            set.push(p_polynomial(2 * d - 1, Some(i)).map_err(poly_err)?);
        }
        let rank = affine_rank(&set, d).map_err(poly_err)?;
        if rank != d {
            let polys: Vec<Value> = set.iter().map(poly_json).collect();
            return Err(Failure::new(format!("d = {d}: affine rank {rank}"), json!({ "polynomials": polys })));
        }
    }
    let mut by_dim: BTreeMap<usize, BTreeSet<Vec<usize>>> = BTreeMap::new();
    for fx in &ctx.corpus.fixtures {
        let k = fx.complex();
        if let Some(d) = k.dim() {
            if d <= 4 && k.connected_components().len() == 1 {
                by_dim.entry(d).or_default().insert(k.f_vector());
            }
        }
    }
    let mut summary = Vec::new();
    for d in 0..=4 {
        let points: Vec<Vec<BigInt>> = by_dim
            .get(&d)
            .map(|s| s.iter().map(|f| f.iter().map(|&x| BigInt::from(x)).collect()).collect())
            .unwrap_or_default();
        let rank = if points.is_empty() { None } else { Some(affine_rank_of_points(&points).map_err(poly_err)?) };
        if rank != Some(d) {
            let shown: Vec<String> = by_dim.get(&d).into_iter().flatten().map(|f| fmt_vec(f)).collect();
            return Err(Failure::new(
                format!("dimension {d}: {} distinct f-vectors span affine dimension {rank:?}", points.len()),
                json!({ "f_vectors": shown }),
            ));
        }
        summary.push(format!("d={d}:{}", points.len()));
    }
    Ok(format!("P sets d <= {}, corpus f-vectors {}", 6.min(ctx.bounds.max_d), summary.join(" ")))
}

fn poly_f_enumeration(ctx: &Context) -> Outcome {
    let n = for_fixtures(ctx, |fx| fx.ladder.is_some(), |fx| {
        let (n, bump) = fx.ladder.expect("ladder fixture");
        let f = f_polynomial(n, bump).map_err(poly_err)?;
        let e = f_polynomial_by_enumeration(n, bump).map_err(poly_err)?;
        let from_complex = IntPolynomial::new(fx.complex().f_vector().into_iter().map(BigInt::from).collect());
        if f != e || f != from_complex {
            return Err(Failure::at(fx, format!("recurrence {f}, enumeration {e}, complex {from_complex}")));
        }
        Ok(())
    })?;
    Ok(format!("{n} ladders"))
}

//! Report builders for the subcommands. Each returns a serializable value
//! plus a plain-text rendering.

use std::fmt::Write as _;
use std::path::Path;

use anyhow::{bail, Context as _, Result};
use cubmatch::fibpoly::{
    a_unit_closed_form, apply_a, f_polynomial, f_polynomial_by_enumeration, p_closed_form, p_polynomial,
    IntPolynomial,
};
use cubmatch::matching::cube_coordinates;
use cubmatch::planar::build_from_polyomino;
use cubmatch::topology::{collapse_search_seeded, z2_betti, CollapseVerdict};
use cubmatch::{build_complex, PlanarGraph};
use num_bigint::BigInt;
use serde::Serialize;

use crate::corpus::{graph_file_json, Corpus};

/// Reads a graph from a JSON description or a polyomino drawing; the
/// format is chosen by the first non-blank character.
pub fn parse_graph_text(text: &str) -> Result<PlanarGraph> {
    if text.trim_start().starts_with('{') {
        Ok(PlanarGraph::from_json(text)?)
    } else {
        Ok(build_from_polyomino(text)?)
    }
}

pub fn read_graph(path: &Path) -> Result<PlanarGraph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graph_text(&text).with_context(|| format!("invalid input {}", path.display()))
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ComplexOptions {
    pub betti: bool,
    pub collapse: bool,
    pub coordinates: bool,
    pub budget: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CollapseSummary {
    pub verdict: &'static str,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VertexCoordinates {
    pub matching: Vec<[i64; 2]>,
    pub coordinates: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComplexReport {
    pub source: String,
    pub vertices: usize,
    pub edges: usize,
    pub regions: usize,
    pub f_vector: Vec<usize>,
    pub euler_characteristic: i64,
    pub components: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub collapse: Option<CollapseSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cube_coordinates: Option<Vec<VertexCoordinates>>,
}

pub fn complex_report(source: &str, g: &PlanarGraph, opts: ComplexOptions) -> Result<ComplexReport> {
    let k = build_complex(g);
    let collapse = opts.collapse.then(|| match collapse_search_seeded(&k, opts.budget, opts.seed) {
        CollapseVerdict::Collapsible(cert) => CollapseSummary {
            verdict: "collapsible",
            detail: format!("{} elementary collapses", cert.steps.len()),
            seed: cert.seed,
        },
        CollapseVerdict::NotCollapsible(reason) => CollapseSummary {
            verdict: "not_collapsible",
            detail: reason.to_string(),
            seed: None,
        },
        CollapseVerdict::Inconclusive { attempts } => CollapseSummary {
            verdict: "inconclusive",
            detail: format!("{attempts} attempts"),
            seed: None,
        },
    });
    let cube = match (opts.coordinates, k.vertices().next()) {
        (true, Some(base)) => {
            let order: Vec<usize> = (0..g.regions().len()).collect();
            let coords = cube_coordinates(g, base, &order)?;
            Some(
                coords
                    .iter()
                    .map(|(m, x)| VertexCoordinates {
                        matching: m.to_ids(g),
                        coordinates: x.iter().map(u8::to_string).collect(),
                    })
                    .collect(),
            )
        }
        (true, None) => Some(Vec::new()),
        (false, _) => None,
    };
    Ok(ComplexReport {
        source: source.to_string(),
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        regions: g.regions().len(),
        f_vector: k.f_vector(),
        euler_characteristic: k.euler_characteristic(),
        components: k.connected_components().len(),
        betti: opts.betti.then(|| z2_betti(&k).0),
        collapse,
        cube_coordinates: cube,
    })
}

fn tuple(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("({})", parts.join(", "))
}

impl ComplexReport {
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "source      {}", self.source);
        let _ = writeln!(out, "graph       {} vertices, {} edges, {} regions", self.vertices, self.edges, self.regions);
        let _ = writeln!(out, "f-vector    {}", tuple(&self.f_vector));
        let _ = writeln!(out, "euler       {}", self.euler_characteristic);
        let _ = writeln!(out, "components  {}", self.components);
        if let Some(b) = &self.betti {
            let _ = writeln!(out, "betti       {}", tuple(b));
        }
        if let Some(c) = &self.collapse {
            let _ = writeln!(out, "collapse    {} ({})", c.verdict, c.detail);
        }
        if let Some(coords) = &self.cube_coordinates {
            for v in coords {
                let pairs: Vec<String> = v.matching.iter().map(|[a, b]| format!("{a}-{b}")).collect();
                let _ = writeln!(out, "cube        {}  {}", v.coordinates, pairs.join(" "));
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyKind {
    F,
    P,
    A,
    Closed,
}

#[derive(Clone, Debug, Serialize)]
pub struct PolyReport {
    pub kind: String,
    pub text: String,
    pub coefficients: IntPolynomial,
    pub cross_check: String,
    pub agrees: bool,
}

impl PolyReport {
    pub fn to_table(&self) -> String {
        let status = if self.agrees { "ok" } else { "MISMATCH" };
        format!("{} = {}\ncheck: {} [{status}]\n", self.kind, self.text, self.cross_check)
    }
}

fn report(kind: String, p: IntPolynomial, cross_check: String, agrees: bool) -> PolyReport {
    PolyReport {
        kind,
        text: p.to_string(),
        coefficients: p,
        cross_check,
        agrees,
    }
}

/// `args` is `n` for F, P and closed; `d` followed by the coefficients of
/// the argument polynomial for A. Enumeration cross-checks run only for
/// `n <= max_n`.
pub fn poly_report(kind: PolyKind, args: &[i64], bump: Option<usize>, max_n: usize) -> Result<PolyReport> {
    let first = |name: &str| -> Result<usize> {
        match args.first() {
            Some(&v) if v >= 0 => Ok(v as usize),
            Some(v) => bail!("{name} must be nonnegative, got {v}"),
            None => bail!("missing {name}"),
        }
    };
    let label = |name: &str, n: usize| match bump {
        Some(i) => format!("{name}_{{{n},{i}}}"),
        None => format!("{name}_{n}"),
    };
    Ok(match kind {
        PolyKind::F => {
            let n = first("n")?;
            let f = f_polynomial(n, bump)?;
            if n == 0 || n > max_n {
                report(label("F", n), f, format!("enumeration skipped (n outside 1..={max_n})"), true)
            } else {
                let e = f_polynomial_by_enumeration(n, bump)?;
                let agrees = e == f;
                report(label("F", n), f, format!("recurrence vs enumerated complex: {e}"), agrees)
            }
        }
        PolyKind::P => {
            let n = first("n")?;
            let p = p_polynomial(n, bump)?;
            let shifted = f_polynomial(n, bump)?.substitute_shift(&BigInt::from(-1));
            let mut agrees = shifted == p;
            let mut check = format!("F(x-1) = {shifted}");
            if bump.is_none() && n > 0 {
                let c = p_closed_form(n)?;
                agrees &= c == p;
                check.push_str(&format!("; closed form {c}"));
            }
            report(label("P", n), p, check, agrees)
        }
        PolyKind::Closed => {
            let n = first("n")?;
            let c = p_closed_form(n)?;
            let p = p_polynomial(n, None)?;
            let agrees = c == p;
            report(format!("P_{n} (closed form)"), c, format!("recurrence {p}"), agrees)
        }
        PolyKind::A => {
            let d = first("d")?;
            let arg = IntPolynomial::from_i64s(args.get(1..).unwrap_or_default());
            let image = apply_a(d, &arg)?;
            let mut closed = IntPolynomial::zero();
            for (k, c) in arg.coeffs().iter().enumerate() {
                closed = closed + a_unit_closed_form(d, k)?.scale(c);
            }
            let agrees = closed == image;
            report(format!("A_{d}({arg})"), image, format!("Catalan closed form {closed}"), agrees)
        }
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct FixtureEntry {
    pub name: String,
    pub kind: String,
    pub vertices: usize,
    pub edges: usize,
    pub regions: usize,
}

pub fn fixture_list(corpus: &Corpus) -> Vec<FixtureEntry> {
    let mut list: Vec<FixtureEntry> = corpus
        .fixtures
        .iter()
        .map(|fx| FixtureEntry {
            name: fx.name.clone(),
            kind: fx.kind.to_string(),
            vertices: fx.graph.vertex_count(),
            edges: fx.graph.edge_count(),
            regions: fx.graph.regions().len(),
        })
        .collect();
    list.sort_by(|a, b| (&a.kind, &a.name).cmp(&(&b.kind, &b.name)));
    list
}

pub fn fixture_table(list: &[FixtureEntry]) -> String {
    let width = list.iter().map(|e| e.name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for e in list {
        let _ = writeln!(
            out,
            "{:width$}  {:9}  V={:<3} E={:<3} R={}",
            e.name, e.kind, e.vertices, e.edges, e.regions
        );
    }
    out
}

pub fn fixture_dump(corpus: &Corpus, name: &str) -> Result<String> {
    match corpus.get(name) {
        Some(fx) => Ok(graph_file_json(&fx.graph)),
        None => bail!("no fixture named {name:?}; try `fixtures list`"),
    }
}

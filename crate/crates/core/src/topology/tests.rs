use super::*;
use crate::complex::build_complex;
use crate::planar::{build_ladder, gallery, LabeledGraph, PlanarGraph};

fn named(name: &str) -> PlanarGraph {
    gallery::gallery_graph(name).unwrap().unwrap()
}

#[test]
fn independence_complex_examples() {
    let edgeless = LabeledGraph::new(vec![0, 1, 2], []);
    let k = independence_complex(&edgeless);
    assert_eq!(k.facets(), &[vec![0, 1, 2]]);
    assert_eq!(z2_betti(&k), BettiVector(vec![1]));

    let l4 = independence_complex(&LabeledGraph::path(4));
    assert_eq!(z2_betti(&l4), BettiVector(vec![1]));
    let c6 = independence_complex(&LabeledGraph::cycle(6));
    assert_eq!(z2_betti(&c6), BettiVector(vec![1, 2]));
    let k3 = independence_complex(&LabeledGraph::cycle(3));
    assert_eq!(k3.facets().len(), 3);
    assert_eq!(k3.dim(), Some(0));
}

#[test]
fn generators_keep_only_maximal_sets() {
    let k = SimplicialComplex::from_generators([0, 1, 2, 3], [vec![0, 1], vec![1], vec![0, 1, 2]]);
    assert_eq!(k.facets(), &[vec![0, 1, 2], vec![3]]);
    assert_eq!(k.f_vector(), vec![4, 3, 1]);
}

#[test]
fn isomorphism_search() {
    let a = independence_complex(&LabeledGraph::path(5));
    let relabel: std::collections::BTreeMap<usize, usize> = (0..5).map(|v| (v, 10 + (v * 3) % 5)).collect();
    let b = a.relabel(&relabel);
    let iso = a.find_isomorphism(&b).expect("relabelled copy");
    assert_eq!(a.relabel(&iso), b);
    let c = independence_complex(&LabeledGraph::cycle(5));
    assert!(a.find_isomorphism(&c).is_none());
}

#[test]
fn kozlov_table_matches_homology() {
    for n in 1..=12 {
        let k = independence_complex(&LabeledGraph::path(n));
        assert_eq!(z2_betti(&k), kozlov_reference_betti(KozlovFamily::Path, n).unwrap(), "path {n}");
    }
    for n in 3..=12 {
        let k = independence_complex(&LabeledGraph::cycle(n));
        assert_eq!(z2_betti(&k), kozlov_reference_betti(KozlovFamily::Cycle, n).unwrap(), "cycle {n}");
    }
    assert!(kozlov_reference_betti(KozlovFamily::Path, 0).is_err());
    assert!(kozlov_reference_betti(KozlovFamily::Cycle, 2).is_err());
}

#[test]
fn kozlov_reference_examples() {
    assert_eq!(kozlov_reference_betti(KozlovFamily::Path, 4).unwrap(), BettiVector(vec![1]));
    assert_eq!(kozlov_reference_betti(KozlovFamily::Path, 5).unwrap(), BettiVector(vec![1, 1]));
    assert_eq!(kozlov_reference_betti(KozlovFamily::Cycle, 5).unwrap(), BettiVector(vec![1, 1]));
}

#[test]
fn betti_of_cubical_complexes() {
    assert_eq!(z2_betti(&build_complex(&build_ladder(1, None).unwrap())), BettiVector(vec![1]));
    assert_eq!(z2_betti(&build_complex(&named("nested-squares"))), BettiVector(vec![2]));
    let empty = SimplicialComplex::empty();
    assert_eq!(z2_betti(&empty), BettiVector(vec![]));
}

#[test]
fn boundary_of_boundary_vanishes() {
    for n in 1..=6 {
        let cells = CellComplex::from_cubical(&build_complex(&build_ladder(n, None).unwrap()));
        assert!(cells.boundary_squared_vanishes());
    }
    let cells = CellComplex::from_simplicial(&independence_complex(&LabeledGraph::cycle(9)));
    assert!(cells.boundary_squared_vanishes());
}

#[test]
fn square_collapses() {
    let k = build_complex(&build_ladder(1, None).unwrap());
    assert!(collapse_search(&k, 0).is_collapsible());
    let square = CellComplex::new(
        vec![0, 0, 0, 0, 1, 1, 1, 1, 2],
        vec![vec![], vec![], vec![], vec![], vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0], vec![4, 5, 6, 7]],
    );
    match collapse_search(&square, 4) {
        CollapseVerdict::Collapsible(cert) => assert!(verify_certificate(&square, &cert)),
        other => panic!("{other:?}"),
    }
}

#[test]
fn non_collapsible_reasons() {
    let k = build_complex(&named("nested-squares"));
    assert_eq!(
        collapse_search(&k, 4),
        CollapseVerdict::NotCollapsible(NotCollapsibleReason::Disconnected { components: 2 })
    );
    let circle = independence_complex(&LabeledGraph::cycle(5));
    assert!(matches!(
        collapse_search(&circle, 4),
        CollapseVerdict::NotCollapsible(NotCollapsibleReason::EulerCharacteristic(0))
    ));
    assert_eq!(
        collapse_search(&SimplicialComplex::empty(), 1),
        CollapseVerdict::NotCollapsible(NotCollapsibleReason::Empty)
    );
}

#[test]
fn dunce_like_acyclic_but_stuck_complex_is_not_misreported() {
    // Two triangles glued along all three edges with one extra vertex: every
    // edge has two cofaces, so no collapse starts, yet the complex is not
    // acyclic either. The verdict must not be "collapsible".
    let cells = CellComplex::new(
        vec![0, 0, 0, 1, 1, 1, 2, 2],
        vec![vec![], vec![], vec![], vec![0, 1], vec![1, 2], vec![2, 0], vec![3, 4, 5], vec![3, 4, 5]],
    );
    assert!(!collapse_search(&cells, 8).is_collapsible());
}

#[test]
fn certificates_are_checked() {
    let k = build_complex(&build_ladder(4, None).unwrap());
    let CollapseVerdict::Collapsible(cert) = collapse_search(&k, 10) else {
        panic!("ladder complexes collapse");
    };
    assert!(verify_certificate(&k, &cert));
    let mut broken = cert.clone();
    broken.steps.reverse();
    assert!(!verify_certificate(&k, &broken));
}

#[test]
fn matched_region_graph_examples() {
    let g = build_ladder(3, None).unwrap();
    let k = build_complex(&g);
    let vertical = crate::matching::Matching::from_ids(&g, &[[1, 5], [2, 6], [3, 7], [4, 8]]).unwrap();
    let all_rungs = crate::complex::TilingFace::new(vertical, vec![]);
    assert_eq!(matched_region_graph(&k, &all_rungs).unwrap(), LabeledGraph::path(3));

    let c4 = build_ladder(1, None).unwrap();
    let k = build_complex(&c4);
    for f in k.faces().iter().filter(|f| f.dim() == 0) {
        assert_eq!(matched_region_graph(&k, f).unwrap().nodes, vec![0]);
    }

    let prism = named("prism");
    let k = build_complex(&prism);
    let centre = k
        .faces()
        .iter()
        .find(|f| {
            let up = k.faces().iter().filter(|e| e.dim() == 1 && crate::complex::face_leq(k.graph(), f, e));
            f.dim() == 0 && up.count() == 3
        })
        .unwrap();
    let gf = matched_region_graph(&k, centre).unwrap();
    assert_eq!(gf.nodes.len(), 3);
    assert_eq!(gf.edges.len(), 3);

    let other = build_complex(&build_ladder(2, None).unwrap());
    assert!(matches!(
        matched_region_graph(&other, &all_rungs),
        Err(crate::error::Error::FaceNotInComplex)
    ));
}

#[test]
fn link_examples() {
    let prism = named("prism");
    let k = build_complex(&prism);
    let mut counts: Vec<usize> = k
        .faces()
        .iter()
        .filter(|f| f.dim() == 0)
        .map(|f| link_of_face(&k, f).unwrap().complex.vertices().len())
        .collect();
    counts.sort_unstable();
    assert_eq!(counts, vec![1, 1, 1, 3]);

    let g = build_ladder(2, None).unwrap();
    let k = build_complex(&g);
    let vertical = crate::matching::Matching::from_ids(&g, &[[1, 4], [2, 5], [3, 6]]).unwrap();
    let link = link_of_face(&k, &crate::complex::TilingFace::new(vertical, vec![])).unwrap();
    assert_eq!(link.complex.facets().len(), 2);
    assert_eq!(z2_betti(&link.complex), BettiVector(vec![2]));
}

#[test]
fn links_match_independence_complexes_on_ladders() {
    for n in 1..=6 {
        let k = build_complex(&build_ladder(n, None).unwrap());
        for f in k.faces() {
            let link = link_of_face(&k, f).unwrap();
            assert_eq!(link.complex.relabel(&link.isomorphism), link.model);
        }
    }
}

use super::*;
use crate::matching::enumerate_perfect_matchings;
use crate::planar::{build_from_polyomino, build_ladder, gallery};

fn named(name: &str) -> PlanarGraph {
    gallery::gallery_graph(name).unwrap().unwrap()
}

#[test]
fn f_vectors_of_small_graphs() {
    let cases = [
        ("twin-squares", vec![4, 3]),
        ("bridged-squares", vec![5, 5, 1]),
        ("twin-diamonds", vec![4, 4, 1]),
        ("nested-squares", vec![4, 2]),
        ("prism", vec![4, 3]),
    ];
    for (name, f) in cases {
        assert_eq!(build_complex(&named(name)).f_vector(), f, "{name}");
    }
    assert_eq!(build_complex(&build_ladder(1, None).unwrap()).f_vector(), vec![2, 1]);
    assert_eq!(build_complex(&build_ladder(3, None).unwrap()).f_vector(), vec![5, 5, 1]);
    let block = build_from_polyomino("####\n####\n").unwrap();
    assert_eq!(build_complex(&block).f_vector(), vec![5, 5, 1]);
}

#[test]
fn empty_complex() {
    let tri = PlanarGraph::from_json(
        r#"{"vertices":[{"id":1,"x":0,"y":0},{"id":2,"x":1,"y":0},{"id":3,"x":0,"y":1}],"edges":[[1,2],[2,3],[3,1]]}"#,
    )
    .unwrap();
    let k = build_complex(&tri);
    assert!(k.is_empty());
    assert!(k.f_vector().is_empty());
    assert_eq!(k.euler_characteristic(), 0);
    assert_eq!(k.dim(), None);
    assert!(k.connected_components().is_empty());
}

#[test]
fn euler_characteristic_and_components() {
    let k = build_complex(&build_ladder(5, None).unwrap());
    assert_eq!(k.euler_characteristic(), 1);
    assert_eq!(k.connected_components().len(), 1);

    let k = build_complex(&named("nested-squares"));
    assert_eq!(k.euler_characteristic(), 2);
    let parts = k.connected_components();
    assert_eq!(parts.len(), 2);
    for p in &parts {
        assert_eq!(p.f_vector(), vec![2, 1]);
    }
    assert_eq!(build_complex(&named("prism")).connected_components().len(), 1);
}

#[test]
fn face_order_examples() {
    let k = build_complex(&build_ladder(2, None).unwrap());
    let top = k.faces().last().unwrap().clone();
    assert_eq!(top.dim(), 1);
    assert!(face_leq(k.graph(), &top, &top));
    for v in top.vertices(k.graph()) {
        let vf = TilingFace::new(v, vec![]);
        assert!(face_leq(k.graph(), &vf, &top));
        assert!(!face_leq(k.graph(), &top, &vf));
    }
    let vs: Vec<&Matching> = k.vertices().collect();
    let a = TilingFace::new(vs[0].clone(), vec![]);
    let b = TilingFace::new(vs[1].clone(), vec![]);
    assert!(!face_leq(k.graph(), &a, &b) && !face_leq(k.graph(), &b, &a));
}

#[test]
fn faces_have_closed_boundaries_and_cube_intervals() {
    for n in 1..=6 {
        let k = build_complex(&build_ladder(n, None).unwrap());
        let g = k.graph();
        for f in k.faces() {
            let facets = f.facets(g);
            assert_eq!(facets.len(), 2 * f.dim());
            assert!(facets.iter().all(|x| k.contains(x) && face_leq(g, x, f)));
            let vs = f.vertices(g);
            assert_eq!(vs.len(), 1 << f.dim());
            let below = k.faces().iter().filter(|x| x.dim() == 0 && face_leq(g, x, f)).count();
            assert_eq!(below, vs.len());
        }
    }
}

#[test]
fn vertices_are_perfect_matchings() {
    for (name, _) in gallery::GALLERY {
        let g = named(name);
        let k = build_complex(&g);
        let vs: Vec<Matching> = k.vertices().cloned().collect();
        assert_eq!(vs, enumerate_perfect_matchings(&g), "{name}");
    }
}

#[test]
fn ladder_dimension() {
    for n in 1..=8 {
        let k = build_complex(&build_ladder(n, None).unwrap());
        assert_eq!(k.dim(), Some(n.div_ceil(2)), "ladder {n}");
    }
}

#[test]
fn json_round_trip() {
    let k = build_complex(&named("bridged-squares"));
    let json = k.to_json();
    let text = serde_json::to_string(&json).unwrap();
    let back: ComplexJson = serde_json::from_str(&text).unwrap();
    assert_eq!(back, json);
    for (face, fj) in k.faces().iter().zip(&back.faces) {
        assert_eq!(&k.face_from_json(fj).unwrap(), face);
    }
}

#[test]
fn decomposition_on_four_cycle() {
    let g = build_ladder(1, None).unwrap();
    for &(a, b) in g.edges() {
        let r = verify_edge_decomposition(&g, a, b).unwrap();
        assert!(r.even_branch);
        assert_eq!(r.without_endpoints, vec![1]);
        assert_eq!(r.without_edge, vec![1]);
        assert_eq!(r.without_region, Some(vec![1]));
        assert!(r.holds(), "{r:?}");
    }
}

#[test]
fn decomposition_on_ladder_rung_reproduces_recurrence() {
    for n in 1..=6 {
        let g = build_ladder(n + 2, None).unwrap();
        let cols = n + 3;
        let (a, b) = (cols - 1, 2 * cols - 1);
        let r = verify_edge_decomposition(&g, a, b).unwrap();
        assert!(r.holds(), "ladder {}", n + 2);
    }
}

#[test]
fn decomposition_odd_branch_on_prism() {
    let g = named("prism");
    let (a, b) = (g.index_of(4).unwrap(), g.index_of(5).unwrap());
    let r = verify_edge_decomposition(&g, a, b).unwrap();
    assert!(r.holds(), "{r:?}");
    assert!(r.region.is_some());
}

#[test]
fn decomposition_rejects_inner_edges() {
    let g = build_ladder(2, None).unwrap();
    let (a, b) = (g.index_of(2).unwrap(), g.index_of(5).unwrap());
    assert!(matches!(
        verify_edge_decomposition(&g, a, b),
        Err(Error::NotOuterEdge(2, 5))
    ));
    let p2 = PlanarGraph::from_json(r#"{"vertices":[{"id":1,"x":0,"y":0},{"id":2,"x":1,"y":0}],"edges":[[1,2]]}"#)
        .unwrap();
    assert!(matches!(
        verify_edge_decomposition(&p2, 0, 1),
        Err(Error::NoBoundedRegion(1, 2))
    ));
}

#[test]
fn decomposition_holds_on_every_outer_edge_of_the_gallery() {
    for (name, _) in gallery::GALLERY {
        let g = named(name);
        for (a, b) in g.outer_edges() {
            match verify_edge_decomposition(&g, a, b) {
                Ok(r) => assert!(r.holds(), "{name}: {r:?}"),
                Err(Error::NoBoundedRegion(..)) => {}
                Err(e) => panic!("{name}: {e:?}"),
            }
        }
    }
}

use super::*;
use crate::planar::{build_ladder, gallery};

fn c4() -> PlanarGraph {
    build_ladder(1, None).unwrap()
}

fn ids(g: &PlanarGraph, pairs: &[[VertexId; 2]]) -> Matching {
    Matching::from_ids(g, pairs).unwrap()
}

#[test]
fn enumeration_counts() {
    assert_eq!(enumerate_perfect_matchings(&c4()).len(), 2);
    assert_eq!(enumerate_perfect_matchings(&build_ladder(3, None).unwrap()).len(), 5);
    let tri = PlanarGraph::from_json(
        r#"{"vertices":[{"id":1,"x":0,"y":0},{"id":2,"x":1,"y":0},{"id":3,"x":0,"y":1}],"edges":[[1,2],[2,3],[3,1]]}"#,
    )
    .unwrap();
    assert!(enumerate_perfect_matchings(&tri).is_empty());
    let empty = PlanarGraph::from_json(r#"{"vertices":[],"edges":[]}"#).unwrap();
    assert_eq!(enumerate_perfect_matchings(&empty), vec![Matching::default()]);
}

#[test]
fn enumeration_is_sorted_and_perfect() {
    for n in 1..=6 {
        let g = build_ladder(n, None).unwrap();
        let ms = enumerate_perfect_matchings(&g);
        assert!(ms.windows(2).all(|w| w[0] < w[1]));
        assert!(ms.iter().all(|m| m.is_perfect_for(&g)));
    }
}

#[test]
fn ladder_counts_follow_fibonacci() {
    let (mut a, mut b) = (1usize, 2usize);
    for n in 1..=10 {
        let g = build_ladder(n, None).unwrap();
        assert_eq!(enumerate_perfect_matchings(&g).len(), b, "ladder {n}");
        (a, b) = (b, a + b);
    }
}

#[test]
fn symmetric_difference_examples() {
    let g = c4();
    let ms = enumerate_perfect_matchings(&g);
    assert!(symmetric_difference_cycles(&ms[0], &ms[0]).unwrap().cycles.is_empty());
    let d = symmetric_difference_cycles(&ms[0], &ms[1]).unwrap();
    assert_eq!(d.cycles.len(), 1);
    assert_eq!(d.cycles[0].len(), 4);

    // Ladder 2: top 1-2-3, bottom 4-5-6.
    let g = build_ladder(2, None).unwrap();
    let vertical = ids(&g, &[[1, 4], [2, 5], [3, 6]]);
    let flipped = ids(&g, &[[1, 2], [4, 5], [3, 6]]);
    let d = symmetric_difference_cycles(&vertical, &flipped).unwrap();
    let cycle: Vec<VertexId> = d.cycles[0].iter().map(|&v| g.id(v)).collect();
    assert_eq!(d.cycles.len(), 1);
    let mut sorted = cycle.clone();
    sorted.sort_unstable();
    assert_eq!(sorted, vec![1, 2, 4, 5]);

    let partial = ids(&g, &[[1, 4]]);
    assert!(matches!(
        symmetric_difference_cycles(&vertical, &partial),
        Err(Error::MismatchedMatchings)
    ));
}

#[test]
fn cube_coordinates_on_four_cycle() {
    let g = c4();
    let ms = enumerate_perfect_matchings(&g);
    let coords = cube_coordinates(&g, &ms[0], &[0]).unwrap();
    assert_eq!(coords[&ms[0]], vec![0]);
    assert_eq!(coords[&ms[1]], vec![1]);
}

#[test]
fn cube_coordinates_flip_one_region() {
    let g = build_ladder(3, None).unwrap();
    let base = ids(&g, &[[1, 5], [2, 6], [3, 7], [4, 8]]);
    let order: Vec<RegionId> = (0..3).collect();
    let coords = cube_coordinates(&g, &base, &order).unwrap();
    assert_eq!(coords[&base], vec![0, 0, 0]);
    let mut seen: Vec<&Vec<u8>> = coords.values().collect();
    seen.sort();
    seen.dedup();
    assert_eq!(seen.len(), coords.len());
    // Flipping any single region changes exactly its coordinate.
    for m in coords.keys() {
        for r in 0..3 {
            let region = g.region(r);
            for phase in 0..2 {
                let alt = region.alternating_edges(phase);
                if alt.iter().all(|&(a, b)| m.contains(a, b)) {
                    let other = m.without(&alt).with(&region.alternating_edges(1 - phase));
                    let (x, y) = (&coords[m], &coords[&other]);
                    let diff: Vec<usize> = (0..3).filter(|&i| x[i] != y[i]).collect();
                    assert_eq!(diff, vec![r]);
                }
            }
        }
    }
}

#[test]
fn cube_coordinates_reject_bad_input() {
    let g = c4();
    let partial = Matching::new([(0, 1)]);
    assert!(matches!(cube_coordinates(&g, &partial, &[0]), Err(Error::NotPerfect)));
    let base = enumerate_perfect_matchings(&g).remove(0);
    assert!(cube_coordinates(&g, &base, &[]).is_err());
}

#[test]
fn id_round_trip() {
    let g = gallery::gallery_graph("twin-squares").unwrap().unwrap();
    for m in enumerate_perfect_matchings(&g) {
        assert_eq!(Matching::from_ids(&g, &m.to_ids(&g)).unwrap(), m);
    }
    assert!(Matching::from_ids(&g, &[[1, 3]]).is_err());
}

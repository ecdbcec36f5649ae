use cubmatch::planar::gallery;
use cubmatch_cli::corpus::{
    fixture_dir, free_polyominoes, graph_file_json, load_gallery, parse_zoo, polyomino_zoo, random_quad_graph, Corpus,
    FixtureKind, RANDOM_GRAPH_COUNT, ZOO_FILE, ZOO_MAX_CELLS,
};

#[test]
fn free_polyomino_counts() {
    let counts: Vec<usize> = free_polyominoes(10).iter().map(Vec::len).collect();
    assert_eq!(counts, vec![1, 1, 2, 5, 12, 35, 108, 369, 1285, 4655]);
}

#[test]
fn pinned_gallery_matches_library() {
    let pinned = load_gallery(&fixture_dir()).unwrap();
    let names: Vec<&str> = pinned.iter().map(|(n, _)| n.as_str()).collect();
    let expected: Vec<&str> = gallery::GALLERY.iter().map(|(n, _)| *n).collect();
    assert_eq!(names, expected);
    for (name, g) in &pinned {
        assert_eq!(g, &gallery::gallery_graph(name).unwrap().unwrap(), "{name}");
    }
}

#[test]
fn pinned_zoo_matches_generator() {
    let text = std::fs::read_to_string(fixture_dir().join(ZOO_FILE)).unwrap();
    let pinned = parse_zoo(&text).unwrap();
    let generated = polyomino_zoo(ZOO_MAX_CELLS);
    assert_eq!(pinned, generated);
    assert!(pinned.iter().all(|p| p.len() % 2 == 0 && p.is_simply_connected() && p.canonical() == *p));
}

#[test]
fn pinned_random_graphs_match_seeds() {
    for seed in 0..RANDOM_GRAPH_COUNT {
        let path = fixture_dir().join("random").join(format!("random-{seed:02}.json"));
        let text = std::fs::read_to_string(&path).unwrap();
        let g = random_quad_graph(seed);
        assert_eq!(text, graph_file_json(&g), "seed {seed}");
        assert!(g.is_bipartite());
    }
}

#[test]
fn corpus_shape() {
    let corpus = Corpus::load(&fixture_dir(), 8).unwrap();
    assert_eq!(corpus.of_kind(FixtureKind::Gallery).count(), 5);
    assert_eq!(corpus.of_kind(FixtureKind::Ladder).count(), (1..=8).map(|n| n + 1).sum::<usize>());
    assert_eq!(corpus.of_kind(FixtureKind::Random).count(), RANDOM_GRAPH_COUNT as usize);
    assert!(corpus.of_kind(FixtureKind::Polyomino).count() > 2000);
    let sizes: Vec<usize> = corpus.fixtures.iter().map(|f| f.graph.vertex_count()).collect();
    assert!(sizes.windows(2).all(|w| w[0] <= w[1]));
    assert!(corpus.fixtures.iter().all(|f| !f.complex().is_empty()));
}

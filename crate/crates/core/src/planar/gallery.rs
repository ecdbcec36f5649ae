//! Small named drawings used throughout the tests and by the CLI.

use crate::error::Result;

use super::PlanarGraph;

/// Two unit squares joined through a hexagon that shares one side with
/// each of them.
pub const TWIN_SQUARES: &str = r#"{
  "vertices": [
    {"id": 1, "x": "0", "y": "0"},
    {"id": 2, "x": "1", "y": "0"},
    {"id": 3, "x": "1", "y": "1"},
    {"id": 4, "x": "0", "y": "1"},
    {"id": 5, "x": "2", "y": "0"},
    {"id": 6, "x": "3", "y": "0"},
    {"id": 7, "x": "3", "y": "1"},
    {"id": 8, "x": "2", "y": "1"},
    {"id": 9, "x": "1.5", "y": "1.7"},
    {"id": 10, "x": "1.5", "y": "-0.7"}
  ],
  "edges": [[1, 2], [2, 3], [3, 4], [4, 1], [5, 6], [6, 7], [7, 8], [8, 5],
            [3, 9], [9, 8], [2, 10], [10, 5]]
}"#;

/// Two unit squares bridged by an edge on top and a three-edge path
/// underneath.
pub const BRIDGED_SQUARES: &str = r#"{
  "vertices": [
    {"id": 1, "x": "4", "y": "0"},
    {"id": 2, "x": "5", "y": "0"},
    {"id": 3, "x": "5", "y": "1"},
    {"id": 4, "x": "4", "y": "1"},
    {"id": 5, "x": "6", "y": "0"},
    {"id": 6, "x": "7", "y": "0"},
    {"id": 7, "x": "7", "y": "1"},
    {"id": 8, "x": "6", "y": "1"},
    {"id": 9, "x": "16/3", "y": "-0.7"},
    {"id": 10, "x": "17/3", "y": "-0.7"}
  ],
  "edges": [[1, 2], [2, 3], [3, 4], [4, 1], [5, 6], [6, 7], [7, 8], [8, 5],
            [3, 8], [2, 9], [9, 10], [10, 5]]
}"#;

/// Two diamonds joined by a top edge and a bottom edge.
pub const TWIN_DIAMONDS: &str = r#"{
  "vertices": [
    {"id": 1, "x": "8", "y": "0.5"},
    {"id": 2, "x": "8.7", "y": "1.2"},
    {"id": 3, "x": "9.4", "y": "0.5"},
    {"id": 4, "x": "8.7", "y": "-0.2"},
    {"id": 5, "x": "10", "y": "0.5"},
    {"id": 6, "x": "10.7", "y": "1.2"},
    {"id": 7, "x": "11.4", "y": "0.5"},
    {"id": 8, "x": "10.7", "y": "-0.2"}
  ],
  "edges": [[1, 2], [2, 3], [3, 4], [4, 1], [5, 6], [6, 7], [7, 8], [8, 5],
            [2, 6], [4, 8]]
}"#;

/// A square inside a square, joined at two opposite corners. Its tiling
/// complex has two components.
pub const NESTED_SQUARES: &str = r#"{
  "vertices": [
    {"id": 1, "x": "0", "y": "0"},
    {"id": 2, "x": "4", "y": "0"},
    {"id": 3, "x": "4", "y": "4"},
    {"id": 4, "x": "0", "y": "4"},
    {"id": 5, "x": "1", "y": "1"},
    {"id": 6, "x": "3", "y": "1"},
    {"id": 7, "x": "3", "y": "3"},
    {"id": 8, "x": "1", "y": "3"}
  ],
  "edges": [[1, 2], [2, 3], [3, 4], [4, 1], [5, 6], [6, 7], [7, 8], [8, 5],
            [1, 5], [7, 3]]
}"#;

/// The triangular prism: a triangle inside a triangle with three spokes.
pub const PRISM: &str = r#"{
  "vertices": [
    {"id": 1, "x": "0", "y": "4.5"},
    {"id": 2, "x": "2", "y": "1.7"},
    {"id": 3, "x": "-2", "y": "1.7"},
    {"id": 4, "x": "0", "y": "6"},
    {"id": 5, "x": "3.3", "y": "0.8"},
    {"id": 6, "x": "-3.3", "y": "0.8"}
  ],
  "edges": [[1, 2], [2, 3], [3, 1], [4, 5], [5, 6], [6, 4], [1, 4], [2, 5], [3, 6]]
}"#;

/// Every named drawing, by name.
pub const GALLERY: &[(&str, &str)] = &[
    ("bridged-squares", BRIDGED_SQUARES),
    ("nested-squares", NESTED_SQUARES),
    ("prism", PRISM),
    ("twin-diamonds", TWIN_DIAMONDS),
    ("twin-squares", TWIN_SQUARES),
];

pub fn gallery_graph(name: &str) -> Option<Result<PlanarGraph>> {
    GALLERY
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| PlanarGraph::from_json(text))
}

//! Cubical matching complexes of embedded bipartite planar graphs.
//!
//! A tiling of a graph covers every vertex either by a matched edge or by
//! an even elementary region; tilings ordered by refinement form a cubical
//! complex whose vertices are the perfect matchings. This crate builds
//! those complexes exactly, computes their homology and links, searches
//! for collapses, and carries the polynomial calculus of ladder graphs.

pub mod complex;
pub mod error;
pub mod fibpoly;
pub mod geometry;
pub mod matching;
pub mod planar;
pub mod topology;

pub use complex::{build_complex, face_leq, CubicalMatchingComplex, TilingFace};
pub use error::{Error, Result};
pub use matching::{enumerate_perfect_matchings, Matching};
pub use planar::{GraphSpec, PlanarGraph};

//! Standard graph families: polyomino cell graphs and (bumped) ladders.

use std::collections::{BTreeSet, HashSet, VecDeque};

use super::{ordered, PlanarGraph, VertexId};
use crate::error::{Error, Result};
use crate::geometry::Point;

/// A finite set of unit cells, stored as sorted `(row, column)` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polyomino {
    cells: Vec<(i32, i32)>,
}

type Symmetry = fn((i32, i32)) -> (i32, i32);

impl Polyomino {
    pub fn new(cells: impl IntoIterator<Item = (i32, i32)>) -> Self {
        let set: BTreeSet<(i32, i32)> = cells.into_iter().collect();
        Polyomino {
            cells: set.into_iter().collect(),
        }
    }

    pub fn rectangle(rows: i32, cols: i32) -> Self {
        Polyomino::new((0..rows).flat_map(|r| (0..cols).map(move |c| (r, c))))
    }

    pub fn cells(&self) -> &[(i32, i32)] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Text rendering: `#` for cells, `.` for holes in the bounding box.
    pub fn to_text(&self) -> String {
        let norm = self.normalized();
        let rows = norm.cells.iter().map(|c| c.0).max().map_or(0, |m| m + 1);
        let cols = norm.cells.iter().map(|c| c.1).max().map_or(0, |m| m + 1);
        let set: HashSet<_> = norm.cells.iter().copied().collect();
        let mut out = String::new();
        for r in 0..rows {
            for c in 0..cols {
                out.push(if set.contains(&(r, c)) { '#' } else { '.' });
            }
            out.push('\n');
        }
        out
    }

    /// Translated so the minimum row and column are zero.
    pub fn normalized(&self) -> Polyomino {
        let r0 = self.cells.iter().map(|c| c.0).min().unwrap_or(0);
        let c0 = self.cells.iter().map(|c| c.1).min().unwrap_or(0);
        Polyomino::new(self.cells.iter().map(|&(r, c)| (r - r0, c - c0)))
    }

    /// Smallest normalized image under the eight symmetries of the square.
    pub fn canonical(&self) -> Polyomino {
        let maps: [Symmetry; 8] = [
            |(r, c)| (r, c),
            |(r, c)| (c, -r),
            |(r, c)| (-r, -c),
            |(r, c)| (-c, r),
            |(r, c)| (r, -c),
            |(r, c)| (-r, c),
            |(r, c)| (c, r),
            |(r, c)| (-c, -r),
        ];
        maps.iter()
            .map(|m| Polyomino::new(self.cells.iter().map(|&x| m(x))).normalized())
            .min()
            .expect("eight images")
    }

    /// Number of edge-connected pieces.
    pub fn piece_count(&self) -> usize {
        let set: HashSet<_> = self.cells.iter().copied().collect();
        let mut seen = HashSet::new();
        let mut pieces = 0;
        for &start in &self.cells {
            if !seen.insert(start) {
                continue;
            }
            pieces += 1;
            let mut queue = VecDeque::from([start]);
            while let Some((r, c)) = queue.pop_front() {
                for n in [(r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)] {
                    if set.contains(&n) && seen.insert(n) {
                        queue.push_back(n);
                    }
                }
            }
        }
        pieces
    }

    /// No empty cell is enclosed: every empty cell of the bounding box
    /// reaches the outside through side-adjacent empty cells.
    pub fn is_simply_connected(&self) -> bool {
        if self.cells.is_empty() {
            return true;
        }
        let set: HashSet<_> = self.cells.iter().copied().collect();
        let rmin = self.cells.iter().map(|c| c.0).min().unwrap() - 1;
        let rmax = self.cells.iter().map(|c| c.0).max().unwrap() + 1;
        let cmin = self.cells.iter().map(|c| c.1).min().unwrap() - 1;
        let cmax = self.cells.iter().map(|c| c.1).max().unwrap() + 1;
        let mut seen = HashSet::from([(rmin, cmin)]);
        let mut queue = VecDeque::from([(rmin, cmin)]);
        while let Some((r, c)) = queue.pop_front() {
            for (nr, nc) in [(r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)] {
                if nr < rmin || nr > rmax || nc < cmin || nc > cmax {
                    continue;
                }
                if !set.contains(&(nr, nc)) && seen.insert((nr, nc)) {
                    queue.push_back((nr, nc));
                }
            }
        }
        let empty = ((rmax - rmin + 1) * (cmax - cmin + 1)) as usize - set.len();
        seen.len() == empty
    }

    /// The cell graph: one vertex per cell at its center, edges between
    /// side-adjacent cells, faces extracted from the drawing.
    pub fn to_graph(&self) -> Result<PlanarGraph> {
        if self.cells.is_empty() {
            return Err(Error::EmptyPolyomino);
        }
        let pieces = self.piece_count();
        if pieces != 1 {
            return Err(Error::DisconnectedCells { components: pieces });
        }
        let ids: Vec<VertexId> = (1..=self.cells.len() as VertexId).collect();
        let points: Vec<Point> = self
            .cells
            .iter()
            .map(|&(r, c)| Point::from_ints(c as i64, -(r as i64)))
            .collect();
        let mut edges = Vec::new();
        for (i, &(r, c)) in self.cells.iter().enumerate() {
            for n in [(r, c + 1), (r + 1, c)] {
                if let Ok(j) = self.cells.binary_search(&n) {
                    edges.push(ordered(i, j));
                }
            }
        }
        PlanarGraph::from_parts(ids, points, edges)
    }
}

/// Reads rows of `#` (cell) and `.` or space (empty).
pub fn parse_polyomino(text: &str) -> Result<Polyomino> {
    let mut cells = Vec::new();
    for (row, line) in text.lines().enumerate() {
        for (col, ch) in line.trim_end_matches('\r').chars().enumerate() {
            match ch {
                '#' => cells.push((row as i32, col as i32)),
                '.' | ' ' | '\t' => {}
                other => {
                    return Err(Error::Parse {
                        line: row + 1,
                        column: col + 1,
                        message: format!("unexpected character {other:?} in polyomino"),
                    })
                }
            }
        }
    }
    Ok(Polyomino::new(cells))
}

pub fn build_from_polyomino(text: &str) -> Result<PlanarGraph> {
    parse_polyomino(text)?.to_graph()
}

/// The ladder `G_n` (a row of `n` unit squares, `2n+2` vertices, `3n+1`
/// edges), optionally with one extra square hung below square `bump`
/// (1-based).
///
/// Top-row vertices get ids `1..=n+1` left to right, bottom-row vertices
/// `n+2..=2n+2`, and the two bump vertices `2n+3, 2n+4`. Auto-extracted
/// regions then come out as squares `1..n` followed by the bump square.
pub fn build_ladder(n: usize, bump: Option<usize>) -> Result<PlanarGraph> {
    if n == 0 {
        return Err(Error::OutOfRange("ladder needs at least one square".into()));
    }
    if let Some(i) = bump {
        if i == 0 || i > n {
            return Err(Error::OutOfRange(format!(
                "bump position {i} outside 1..={n}"
            )));
        }
    }
    let cols = n + 1;
    let mut ids: Vec<VertexId> = (1..=2 * cols as VertexId).collect();
    let mut points: Vec<Point> = (0..cols)
        .map(|x| Point::from_ints(x as i64, 1))
        .chain((0..cols).map(|x| Point::from_ints(x as i64, 0)))
        .collect();
    let top = |x: usize| x;
    let bottom = |x: usize| cols + x;
    let mut edges = Vec::new();
    for x in 0..cols {
        edges.push(ordered(top(x), bottom(x)));
        if x + 1 < cols {
            edges.push(ordered(top(x), top(x + 1)));
            edges.push(ordered(bottom(x), bottom(x + 1)));
        }
    }
    if let Some(i) = bump {
        let left = ids.len();
        let right = left + 1;
        ids.push(2 * cols as VertexId + 1);
        ids.push(2 * cols as VertexId + 2);
        points.push(Point::from_ints(i as i64 - 1, -1));
        points.push(Point::from_ints(i as i64, -1));
        edges.push(ordered(bottom(i - 1), left));
        edges.push(ordered(left, right));
        edges.push(ordered(right, bottom(i)));
    }
    PlanarGraph::from_parts(ids, points, edges)
}

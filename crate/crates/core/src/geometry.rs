//! Exact predicates over rational points.
//!
//! Every test here is a sign computation on `BigRational` values, so the
//! answers are exact: no epsilons anywhere.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: BigRational,
    pub y: BigRational,
}

impl Point {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point {
            x: BigRational::from_integer(BigInt::from(x)),
            y: BigRational::from_integer(BigInt::from(y)),
        }
    }
}

/// Parses `"p/q"`, `"p"` or a decimal such as `"-1.25"`.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::InvalidCoordinate(text.to_string());
    let s = text.trim();
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(num, den));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let negative = int.starts_with('-');
        let digits = int.trim_start_matches(['-', '+']);
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        if !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let whole: BigInt = format!("{}{}", if digits.is_empty() { "0" } else { digits }, frac)
            .parse()
            .map_err(|_| bad())?;
        let den = num_traits::pow(BigInt::from(10), frac.len());
        let value = BigRational::new(whole, den);
        return Ok(if negative { -value } else { value });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(n))
}

/// Formats a rational the way [`parse_rational`] reads it back.
pub fn format_rational(value: &BigRational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

fn cross(o: &Point, a: &Point, b: &Point) -> BigRational {
    (&a.x - &o.x) * (&b.y - &o.y) - (&a.y - &o.y) * (&b.x - &o.x)
}

/// Sign of the turn `a -> b -> c`: `Greater` for counter-clockwise.
pub fn orient(a: &Point, b: &Point, c: &Point) -> Ordering {
    cross(a, b, c).cmp(&BigRational::zero())
}

/// `p` lies on the closed segment `ab`.
pub fn on_segment(p: &Point, a: &Point, b: &Point) -> bool {
    orient(a, b, p) == Ordering::Equal
        && p.x >= a.x.clone().min(b.x.clone())
        && p.x <= a.x.clone().max(b.x.clone())
        && p.y >= a.y.clone().min(b.y.clone())
        && p.y <= a.y.clone().max(b.y.clone())
}

/// Closed segments `ab` and `cd` share at least one point.
pub fn segments_intersect(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    if o1 != o2 && o3 != o4 && o1 != Ordering::Equal && o2 != Ordering::Equal
        && o3 != Ordering::Equal && o4 != Ordering::Equal
    {
        return true;
    }
    on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) || on_segment(b, c, d)
}

/// Segments `ab` and `ac` sharing the endpoint `a` overlap beyond it.
pub fn shared_endpoint_overlap(a: &Point, b: &Point, c: &Point) -> bool {
    if orient(a, b, c) != Ordering::Equal {
        return false;
    }
    // Collinear: they overlap iff they leave `a` in the same direction.
    let dot = (&b.x - &a.x) * (&c.x - &a.x) + (&b.y - &a.y) * (&c.y - &a.y);
    dot.is_positive()
}

/// Twice the signed (shoelace) area of a closed walk; positive when
/// counter-clockwise.
pub fn twice_signed_area<'a, I>(walk: I) -> BigRational
where
    I: IntoIterator<Item = &'a Point>,
{
    let pts: Vec<&Point> = walk.into_iter().collect();
    let mut acc = BigRational::zero();
    for i in 0..pts.len() {
        let a = pts[i];
        let b = pts[(i + 1) % pts.len()];
        acc += &a.x * &b.y - &b.x * &a.y;
    }
    acc
}

/// Counter-clockwise angular order of direction vectors, starting from the
/// positive x axis.
pub fn angle_cmp(origin: &Point, a: &Point, b: &Point) -> Ordering {
    let half = |p: &Point| {
        let dy = &p.y - &origin.y;
        let dx = &p.x - &origin.x;
        if dy.is_positive() || (dy.is_zero() && dx.is_positive()) {
            0
        } else {
            1
        }
    };
    half(a)
        .cmp(&half(b))
        .then_with(|| orient(origin, b, a))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Containment {
    Inside,
    Outside,
    Boundary,
}

/// Winding-number point location against a closed walk. Works for walks
/// that retrace edges (pendant trees contribute nothing).
pub fn locate(p: &Point, walk: &[&Point]) -> Containment {
    let n = walk.len();
    let mut winding = 0i64;
    for i in 0..n {
        let a = walk[i];
        let b = walk[(i + 1) % n];
        if on_segment(p, a, b) {
            return Containment::Boundary;
        }
        if a.y <= p.y {
            if b.y > p.y && orient(a, b, p) == Ordering::Greater {
                winding += 1;
            }
        } else if b.y <= p.y && orient(a, b, p) == Ordering::Less {
            winding -= 1;
        }
    }
    if winding != 0 {
        Containment::Inside
    } else {
        Containment::Outside
    }
}

/// A point strictly inside a simple polygon: the midpoint of the first
/// interior span of a horizontal scanline just above the lowest vertex.
pub fn interior_point(polygon: &[&Point]) -> Option<Point> {
    let mut ys: Vec<&BigRational> = polygon.iter().map(|p| &p.y).collect();
    ys.sort();
    ys.dedup();
    if ys.len() < 2 {
        return None;
    }
    let two = BigRational::from_integer(BigInt::from(2));
    let y0 = (ys[0] + ys[1]) / &two;
    let n = polygon.len();
    let mut xs = Vec::new();
    for i in 0..n {
        let a = polygon[i];
        let b = polygon[(i + 1) % n];
        if (a.y < y0) != (b.y < y0) {
            let t = (&y0 - &a.y) / (&b.y - &a.y);
            xs.push(&a.x + t * (&b.x - &a.x));
        }
    }
    xs.sort();
    if xs.len() < 2 {
        return None;
    }
    Some(Point::new((&xs[0] + &xs[1]) / two, y0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_rational("3/6").unwrap(), parse_rational("1/2").unwrap());
        assert_eq!(parse_rational("-1.25").unwrap(), parse_rational("-5/4").unwrap());
        assert_eq!(parse_rational("0.7").unwrap(), parse_rational("7/10").unwrap());
        assert_eq!(parse_rational("-0.5").unwrap(), parse_rational("-1/2").unwrap());
        assert_eq!(parse_rational(" 4 ").unwrap(), parse_rational("4/1").unwrap());
        for bad in ["", "1/0", "x", "1.", "1.2.3", "--1", "1/2/3", ".5e"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn segment_predicates() {
        assert!(segments_intersect(&p(0, 0), &p(2, 2), &p(0, 2), &p(2, 0)));
        assert!(!segments_intersect(&p(0, 0), &p(1, 0), &p(0, 1), &p(1, 1)));
        // touching in a T
        assert!(segments_intersect(&p(0, 0), &p(2, 0), &p(1, 0), &p(1, 1)));
        assert!(shared_endpoint_overlap(&p(0, 0), &p(2, 0), &p(1, 0)));
        assert!(!shared_endpoint_overlap(&p(0, 0), &p(2, 0), &p(-1, 0)));
    }

    #[test]
    fn winding_and_interior_point() {
        let square = [p(0, 0), p(2, 0), p(2, 2), p(0, 2)];
        let refs: Vec<&Point> = square.iter().collect();
        assert_eq!(locate(&p(1, 1), &refs), Containment::Inside);
        assert_eq!(locate(&p(3, 1), &refs), Containment::Outside);
        assert_eq!(locate(&p(2, 1), &refs), Containment::Boundary);
        assert!(twice_signed_area(square.iter()).is_positive());

        // An L shape whose vertex centroid lies outside it.
        let ell = [p(0, 0), p(4, 0), p(4, 1), p(1, 1), p(1, 4), p(0, 4)];
        let refs: Vec<&Point> = ell.iter().collect();
        let inside = interior_point(&refs).unwrap();
        assert_eq!(locate(&inside, &refs), Containment::Inside);
    }

    #[test]
    fn angular_order_is_counter_clockwise() {
        let o = p(0, 0);
        let mut dirs = vec![p(0, -1), p(-1, 0), p(1, 0), p(0, 1), p(1, 1)];
        dirs.sort_by(|a, b| angle_cmp(&o, a, b));
        assert_eq!(dirs, vec![p(1, 0), p(1, 1), p(0, 1), p(-1, 0), p(0, -1)]);
    }
}

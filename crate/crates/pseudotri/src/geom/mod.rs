//! Exact geometric primitives on integer coordinates.
//!
//! Everything downstream (polygon classification, hole search, the
//! constructive procedures) reduces to the [`orientation`] predicate, which is
//! the sign of a 2x2 integer determinant evaluated in `i128`. There is no
//! floating point and no epsilon anywhere.

mod hpoint;
mod hull;
mod region;

pub use hpoint::{in_triangle_h, orient_mixed, ray_hull_exit, ray_ray_intersection, HPoint};
pub use hull::{convex_hull, convex_layers, convex_position, hull_indices, hull_partition};
pub use region::{
    nearest_angular_neighbor, nearest_angular_neighbor_in, nearest_neighbor_to_segment,
    nearest_neighbor_to_segment_in, Cone, ConvexRegion, HalfPlane,
};

use std::collections::HashSet;
use std::fmt;

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeTuple, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{Coord, COORD_LIMIT};

/// Sign of the determinant |q-p, r-p|.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    pub fn reversed(self) -> Orientation {
        match self {
            Orientation::Clockwise => Orientation::CounterClockwise,
            Orientation::Collinear => Orientation::Collinear,
            Orientation::CounterClockwise => Orientation::Clockwise,
        }
    }

    pub fn is_ccw(self) -> bool {
        self == Orientation::CounterClockwise
    }

    pub fn is_cw(self) -> bool {
        self == Orientation::Clockwise
    }

    pub fn is_collinear(self) -> bool {
        self == Orientation::Collinear
    }

    fn from_det(d: i128) -> Orientation {
        match d.signum() {
            1 => Orientation::CounterClockwise,
            -1 => Orientation::Clockwise,
            _ => Orientation::Collinear,
        }
    }
}

/// A point of the integer grid. Coordinates are bounded by `2^20` in absolute
/// value when the point enters a [`PointSet`], which keeps every determinant
/// used in this crate far inside `i128`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Point<T> {
    pub x: T,
    pub y: T,
}

impl<T: Coord> Point<T> {
    pub fn new(x: T, y: T) -> Self {
        Point { x, y }
    }

    pub fn in_coord_range(&self) -> bool {
        self.x.wide().abs() <= COORD_LIMIT && self.y.wide().abs() <= COORD_LIMIT
    }
}

impl<T: fmt::Display> fmt::Display for Point<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

// Witness JSON represents points as two-element arrays, so (de)serialization
// is positional rather than the derived struct form.
impl<T: Serialize> Serialize for Point<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = serializer.serialize_tuple(2)?;
        t.serialize_element(&self.x)?;
        t.serialize_element(&self.y)?;
        t.end()
    }
}

impl<'de, T: Deserialize<'de>> Deserialize<'de> for Point<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct V<T>(std::marker::PhantomData<T>);
        impl<'de, T: Deserialize<'de>> Visitor<'de> for V<T> {
            type Value = Point<T>;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a [x, y] pair")
            }
            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<Point<T>, A::Error> {
                let x = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::invalid_length(0, &self))?;
                let y = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::invalid_length(1, &self))?;
                Ok(Point { x, y })
            }
        }
        deserializer.deserialize_tuple(2, V(std::marker::PhantomData))
    }
}

/// Exact twice-signed-area of the triangle pqr, i.e. the determinant
/// |q-p, r-p|, positive when pqr is counter-clockwise.
pub fn cross<T: Coord>(p: Point<T>, q: Point<T>, r: Point<T>) -> i128 {
    let (px, py) = (p.x.wide(), p.y.wide());
    (q.x.wide() - px) * (r.y.wide() - py) - (q.y.wide() - py) * (r.x.wide() - px)
}

/// Total orientation predicate. Antisymmetric under swapping any two
/// arguments; COLLINEAR exactly when the three points share a line.
pub fn orientation<T: Coord>(p: Point<T>, q: Point<T>, r: Point<T>) -> Orientation {
    Orientation::from_det(cross(p, q, r))
}

/// True if s lies strictly inside triangle abc (corners excluded, boundary
/// excluded).
pub fn in_triangle<T: Coord>(a: Point<T>, b: Point<T>, c: Point<T>, s: Point<T>) -> bool {
    let o = orientation(a, b, c);
    if o.is_collinear() {
        return false;
    }
    orientation(a, b, s) == o && orientation(b, c, s) == o && orientation(c, a, s) == o
}

/// True if the open segments pq and rs cross, or one endpoint of either
/// segment lies in the interior of the other. Segments sharing an endpoint do
/// not count as intersecting.
pub fn segments_intersect<T: Coord>(
    p: Point<T>,
    q: Point<T>,
    r: Point<T>,
    s: Point<T>,
) -> bool {
    if p == r || p == s || q == r || q == s {
        // Shared endpoint: adjacency, not an intersection. Overlap beyond the
        // endpoint would need three collinear vertices.
        return false;
    }
    let d1 = orientation(r, s, p);
    let d2 = orientation(r, s, q);
    let d3 = orientation(p, q, r);
    let d4 = orientation(p, q, s);
    if !d1.is_collinear() && !d2.is_collinear() && !d3.is_collinear() && !d4.is_collinear() {
        return d1 != d2 && d3 != d4;
    }
    on_open_segment(r, s, p)
        || on_open_segment(r, s, q)
        || on_open_segment(p, q, r)
        || on_open_segment(p, q, s)
}

/// True if s lies strictly between p and q on the segment pq.
pub fn on_open_segment<T: Coord>(p: Point<T>, q: Point<T>, s: Point<T>) -> bool {
    if !orientation(p, q, s).is_collinear() || s == p || s == q {
        return false;
    }
    let dot = (s.x.wide() - p.x.wide()) * (q.x.wide() - p.x.wide())
        + (s.y.wide() - p.y.wide()) * (q.y.wide() - p.y.wide());
    let len2 = (q.x.wide() - p.x.wide()).pow(2) + (q.y.wide() - p.y.wide()).pow(2);
    dot > 0 && dot < len2
}

/// A finite labeled point set in general position: pairwise distinct, no
/// three collinear, coordinates within the grid bound. Violations are
/// construction errors, never silent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointSet<T> {
    points: Vec<Point<T>>,
    pub id: Option<String>,
}

impl<T: Coord> PointSet<T> {
    /// Validates eagerly: O(n^2) duplicate scan, O(n^3) collinearity scan.
    pub fn new(points: Vec<Point<T>>) -> Result<Self> {
        for p in &points {
            if !p.in_coord_range() {
                return Err(Error::CoordinateOutOfRange(p.to_string()));
            }
        }
        let mut seen = HashSet::new();
        for p in &points {
            if !seen.insert((p.x, p.y)) {
                return Err(Error::DuplicatePoint(p.to_string()));
            }
        }
        let n = points.len();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if orientation(points[i], points[j], points[k]).is_collinear() {
                        return Err(Error::CollinearPoints(format!(
                            "{}, {}, {}",
                            points[i], points[j], points[k]
                        )));
                    }
                }
            }
        }
        Ok(PointSet { points, id: None })
    }

    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = Some(id.into());
        self
    }

    /// Builds without re-validating. Only for subsets of an already validated
    /// set, where general position is inherited.
    pub(crate) fn from_validated(points: Vec<Point<T>>) -> Self {
        PointSet { points, id: None }
    }

    pub fn points(&self) -> &[Point<T>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: Point<T>) -> bool {
        self.points.contains(&p)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point<T>> {
        self.points.iter()
    }
}

impl<T: Coord> std::ops::Index<usize> for PointSet<T> {
    type Output = Point<T>;
    fn index(&self, i: usize) -> &Point<T> {
        &self.points[i]
    }
}

/// Points of `set` strictly inside triangle abc, as a set (general position
/// is inherited from the ambient set).
pub fn points_in_triangle<T: Coord>(
    a: Point<T>,
    b: Point<T>,
    c: Point<T>,
    set: &PointSet<T>,
) -> Result<PointSet<T>> {
    if orientation(a, b, c).is_collinear() {
        return Err(Error::CollinearPoints(format!("{}, {}, {}", a, b, c)));
    }
    Ok(PointSet::from_validated(
        set.iter().copied().filter(|&s| in_triangle(a, b, c, s)).collect(),
    ))
}

/// Count-only variant of [`points_in_triangle`], used in hot loops.
pub fn count_in_triangle<T: Coord>(
    a: Point<T>,
    b: Point<T>,
    c: Point<T>,
    points: &[Point<T>],
) -> usize {
    points.iter().filter(|&&s| in_triangle(a, b, c, s)).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point<i64> {
        Point::new(x, y)
    }

    #[test]
    fn orientation_basic() {
        assert_eq!(
            orientation(p(0, 0), p(1, 0), p(0, 1)),
            Orientation::CounterClockwise
        );
        assert_eq!(orientation(p(0, 0), p(1, 1), p(2, 2)), Orientation::Collinear);
        assert_eq!(orientation(p(0, 0), p(0, 1), p(1, 0)), Orientation::Clockwise);
    }

    #[test]
    fn orientation_swap_antisymmetry() {
        let (a, b, c) = (p(3, 7), p(-2, 5), p(11, -4));
        assert_eq!(orientation(a, b, c), orientation(a, c, b).reversed());
        assert_eq!(orientation(a, b, c), orientation(b, a, c).reversed());
    }

    #[test]
    fn pointset_rejects_collinear() {
        let r = PointSet::new(vec![p(0, 0), p(5, 5), p(10, 10), p(3, 1)]);
        assert!(matches!(r, Err(Error::CollinearPoints(_))));
    }

    #[test]
    fn pointset_rejects_duplicates() {
        let r = PointSet::new(vec![p(0, 0), p(1, 2), p(0, 0)]);
        assert!(matches!(r, Err(Error::DuplicatePoint(_))));
    }

    #[test]
    fn pointset_rejects_out_of_range() {
        let r = PointSet::new(vec![p(0, 0), p(1 << 21, 3), p(4, 5)]);
        assert!(matches!(r, Err(Error::CoordinateOutOfRange(_))));
    }

    #[test]
    fn triangle_membership() {
        let s = PointSet::new(vec![p(5, 3), p(20, 20)]).unwrap();
        let inside = points_in_triangle(p(0, 0), p(10, 0), p(5, 10), &s).unwrap();
        assert_eq!(inside.points(), &[p(5, 3)]);
        // boundary points are excluded
        assert!(!in_triangle(p(0, 0), p(10, 0), p(5, 10), p(5, 0)));
        // corners are excluded
        assert!(!in_triangle(p(0, 0), p(10, 0), p(5, 10), p(0, 0)));
    }

    #[test]
    fn segment_intersection_cases() {
        assert!(segments_intersect(p(0, 0), p(10, 10), p(0, 10), p(10, 0)));
        assert!(!segments_intersect(p(0, 0), p(10, 0), p(0, 1), p(10, 1)));
        // shared endpoint is not an intersection
        assert!(!segments_intersect(p(0, 0), p(10, 0), p(10, 0), p(5, 5)));
        // endpoint in interior of the other segment counts
        assert!(segments_intersect(p(0, 0), p(10, 0), p(5, 0), p(5, 5)));
    }
}

//! Simple polygons, pseudo-triangle structure and emptiness.
//!
//! A pseudo-triangle is a simple polygon with exactly three convex vertices
//! (its corners); all remaining vertices are reflex. The three boundary
//! pieces between consecutive corners are its concave chains. Pseudo-
//! triangles are subclassified by how many chains are bare edges: none
//! (standard), one (mountain), two (fan), or all three (triangle).

mod assemble;
mod transform;

pub use assemble::{assemble_pseudo_triangle, ChainAssignment};
pub(crate) use assemble::chain_order;
pub use transform::{shorten_mountain, standardize};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{cross, orientation, segments_intersect, Point, PointSet};
use crate::scalar::Coord;

/// Simple polygon, stored counter-clockwise starting at the lexicographically
/// smallest vertex. Construction validates simplicity and rejects collinear
/// consecutive triples, so every vertex is strictly convex or strictly
/// reflex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polygon<T: Coord> {
    vertices: Vec<Point<T>>,
}

impl<T: Coord> Polygon<T> {
    /// Accepts the boundary in either rotational direction and canonicalizes
    /// to counter-clockwise.
    pub fn new(vertices: Vec<Point<T>>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::TooFewPoints { needed: 3, got: vertices.len() });
        }
        let n = vertices.len();
        for i in 0..n {
            for j in i + 1..n {
                if vertices[i] == vertices[j] {
                    return Err(Error::DuplicatePoint(vertices[i].to_string()));
                }
            }
        }
        for i in 0..n {
            let (u, v, w) = (vertices[i], vertices[(i + 1) % n], vertices[(i + 2) % n]);
            if orientation(u, v, w).is_collinear() {
                return Err(Error::CollinearPoints(format!("{u}, {v}, {w}")));
            }
        }
        let mut vertices = vertices;
        if signed_area2(&vertices) < 0 {
            vertices.reverse();
        }
        for i in 0..n {
            for j in i + 1..n {
                // cyclically adjacent edges share an endpoint and are skipped
                // inside segments_intersect
                let e1 = (vertices[i], vertices[(i + 1) % n]);
                let e2 = (vertices[j], vertices[(j + 1) % n]);
                if segments_intersect(e1.0, e1.1, e2.0, e2.1) {
                    return Err(Error::DegenerateInput(format!(
                        "self-intersecting boundary: {}-{} crosses {}-{}",
                        e1.0, e1.1, e2.0, e2.1
                    )));
                }
            }
        }
        let start = (0..n).min_by_key(|&i| vertices[i]).unwrap();
        vertices.rotate_left(start);
        Ok(Polygon { vertices })
    }

    pub fn vertices(&self) -> &[Point<T>] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Twice the enclosed area; positive because the boundary is stored
    /// counter-clockwise.
    pub fn signed_area2(&self) -> i128 {
        signed_area2(&self.vertices)
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point<T>, Point<T>)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Per-vertex convexity: true where the boundary turns left.
    pub fn convex_flags(&self) -> Vec<bool> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                orientation(
                    self.vertices[(i + n - 1) % n],
                    self.vertices[i],
                    self.vertices[(i + 1) % n],
                )
                .is_ccw()
            })
            .collect()
    }

    pub fn on_boundary(&self, p: Point<T>) -> bool {
        self.edges().any(|(u, v)| {
            p == u || p == v || (orientation(u, v, p).is_collinear() && between(u, v, p))
        })
    }

    /// Strict interior test by edge-crossing parity of the rightward ray.
    pub fn contains_strict(&self, p: Point<T>) -> bool {
        if self.on_boundary(p) {
            return false;
        }
        let mut inside = false;
        for (u, v) in self.edges() {
            if (u.y > p.y) != (v.y > p.y) {
                // the edge crosses height p.y; it passes right of p exactly
                // when the orientation sign matches the edge's y-direction
                let d = cross(u, v, p);
                let upward = v.y > u.y;
                if (d > 0) == upward && d != 0 {
                    inside = !inside;
                }
            }
        }
        inside
    }

    /// Points of `set` strictly inside the polygon.
    pub fn interior_points(&self, set: &PointSet<T>) -> Vec<Point<T>> {
        set.iter().copied().filter(|&p| self.contains_strict(p)).collect()
    }
}

fn signed_area2<T: Coord>(vertices: &[Point<T>]) -> i128 {
    let n = vertices.len();
    let mut s = 0i128;
    for i in 0..n {
        let (u, v) = (vertices[i], vertices[(i + 1) % n]);
        s += u.x.wide() * v.y.wide() - v.x.wide() * u.y.wide();
    }
    s
}

fn between<T: Coord>(u: Point<T>, v: Point<T>, p: Point<T>) -> bool {
    let dx = v.x.wide() - u.x.wide();
    let dy = v.y.wide() - u.y.wide();
    let t = dx * (p.x.wide() - u.x.wide()) + dy * (p.y.wide() - u.y.wide());
    t > 0 && t < dx * dx + dy * dy
}

/// True when no point of `set` lies strictly inside `poly`. Boundary points,
/// including the polygon's own vertices, do not violate emptiness.
pub fn is_empty_in<T: Coord>(poly: &Polygon<T>, set: &PointSet<T>) -> bool {
    set.iter().all(|&p| !poly.contains_strict(p))
}

/// Coarse shape of a simple polygon by convex-vertex count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    Convex,
    PseudoTriangle,
    Other,
}

pub fn classify_polygon<T: Coord>(poly: &Polygon<T>) -> Classification {
    let convex = poly.convex_flags().iter().filter(|&&c| c).count();
    if convex == poly.len() {
        Classification::Convex
    } else if convex == 3 {
        Classification::PseudoTriangle
    } else {
        Classification::Other
    }
}

/// Pseudo-triangle subclass by number of single-edge chains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PtClass {
    Triangle,
    Standard,
    Mountain,
    Fan,
}

impl std::fmt::Display for PtClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            PtClass::Triangle => "triangle",
            PtClass::Standard => "standard",
            PtClass::Mountain => "mountain",
            PtClass::Fan => "fan",
        })
    }
}

/// A validated pseudo-triangle. `corners` are in boundary order starting at
/// the lexicographically smallest corner; `chains[i]` runs from `corners[i]`
/// to the next corner, inclusive of both. For a fan, `apex` is the corner
/// shared by the two single-edge chains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PseudoTriangle<T: Coord> {
    pub polygon: Polygon<T>,
    pub corners: [Point<T>; 3],
    pub chains: [Vec<Point<T>>; 3],
    pub class: PtClass,
    pub apex: Option<Point<T>>,
}

impl<T: Coord> PseudoTriangle<T> {
    /// Structures a polygon with exactly three convex vertices. A bare
    /// triangle qualifies (all chains single edges).
    pub fn from_polygon(polygon: Polygon<T>) -> Result<Self> {
        let flags = polygon.convex_flags();
        let convex = flags.iter().filter(|&&c| c).count();
        if convex != 3 {
            let found = match classify_polygon(&polygon) {
                Classification::Convex => "convex polygon".to_string(),
                _ => format!("{convex} convex vertices"),
            };
            return Err(Error::ClassMismatch {
                expected: "exactly 3 convex vertices".into(),
                found,
            });
        }
        let verts = polygon.vertices();
        let n = verts.len();
        let mut corner_idx: Vec<usize> = (0..n).filter(|&i| flags[i]).collect();
        let first = (0..3).min_by_key(|&k| verts[corner_idx[k]]).unwrap();
        corner_idx.rotate_left(first);
        let corners = [verts[corner_idx[0]], verts[corner_idx[1]], verts[corner_idx[2]]];
        let chain = |from: usize, to: usize| -> Vec<Point<T>> {
            let mut c = Vec::new();
            let mut i = from;
            loop {
                c.push(verts[i]);
                if i == to {
                    break;
                }
                i = (i + 1) % n;
            }
            c
        };
        let chains = [
            chain(corner_idx[0], corner_idx[1]),
            chain(corner_idx[1], corner_idx[2]),
            chain(corner_idx[2], corner_idx[0]),
        ];
        let single: Vec<usize> =
            (0..3).filter(|&i| chains[i].len() == 2).collect();
        let class = match single.len() {
            0 => PtClass::Standard,
            1 => PtClass::Mountain,
            2 => PtClass::Fan,
            _ => PtClass::Triangle,
        };
        let apex = if class == PtClass::Fan {
            // the corner shared by the two single-edge chains: chain i joins
            // corners i and i+1, so the shared index is the one covered twice
            let shared = (0..3)
                .find(|&k| single.iter().all(|&i| i == k || (i + 1) % 3 == k))
                .unwrap();
            Some(corners[shared])
        } else {
            None
        };
        Ok(PseudoTriangle { polygon, corners, chains, class, apex })
    }

    pub fn len(&self) -> usize {
        self.polygon.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Vertices in boundary order (same as the polygon's).
    pub fn vertices(&self) -> &[Point<T>] {
        self.polygon.vertices()
    }

    pub fn is_empty_in(&self, set: &PointSet<T>) -> bool {
        is_empty_in(&self.polygon, set)
    }

    /// Index of the chain that is a bare edge, for mountains.
    pub fn base_chain(&self) -> Option<usize> {
        (self.class == PtClass::Mountain)
            .then(|| (0..3).find(|&i| self.chains[i].len() == 2).unwrap())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point<i64> {
        Point::new(x, y)
    }

    fn poly(v: Vec<Point<i64>>) -> Polygon<i64> {
        Polygon::new(v).unwrap()
    }

    #[test]
    fn polygon_canonicalizes_to_ccw() {
        let a = poly(vec![p(0, 0), p(10, 0), p(5, 8)]);
        let b = poly(vec![p(5, 8), p(10, 0), p(0, 0)]);
        assert_eq!(a, b);
        assert!(a.signed_area2() > 0);
        assert_eq!(a.vertices()[0], p(0, 0));
    }

    #[test]
    fn polygon_rejects_self_intersection() {
        let r = Polygon::new(vec![p(0, 0), p(10, 10), p(10, 0), p(0, 10)]);
        assert!(matches!(r, Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn polygon_rejects_collinear_run() {
        let r = Polygon::new(vec![p(0, 0), p(5, 0), p(10, 0), p(5, 8)]);
        assert!(matches!(r, Err(Error::CollinearPoints(_))));
    }

    #[test]
    fn interior_test() {
        let q = poly(vec![p(0, 0), p(10, 0), p(5, 8), p(5, 3)]);
        assert!(q.contains_strict(p(6, 2)));
        assert!(!q.contains_strict(p(4, 4)));
        assert!(!q.contains_strict(p(5, 3)));
        assert!(!q.contains_strict(p(5, 0)));
    }

    #[test]
    fn classify_shapes() {
        assert_eq!(
            classify_polygon(&poly(vec![p(0, 0), p(10, 0), p(12, 7), p(5, 12), p(-2, 6)])),
            Classification::Convex
        );
        assert_eq!(
            classify_polygon(&poly(vec![p(0, 0), p(10, 0), p(5, 8), p(5, 3)])),
            Classification::PseudoTriangle
        );
        // one reflex vertex among five: four convex vertices remain
        assert_eq!(
            classify_polygon(&poly(vec![p(0, 0), p(10, 0), p(10, 10), p(5, 4), p(0, 10)])),
            Classification::Other
        );
    }

    #[test]
    fn fan_structure() {
        let pt =
            PseudoTriangle::from_polygon(poly(vec![p(0, 0), p(10, 0), p(5, 8), p(5, 3)])).unwrap();
        assert_eq!(pt.class, PtClass::Fan);
        assert_eq!(pt.corners, [p(0, 0), p(10, 0), p(5, 8)]);
        assert_eq!(pt.apex, Some(p(10, 0)));
        assert_eq!(pt.chains[0], vec![p(0, 0), p(10, 0)]);
        assert_eq!(pt.chains[1], vec![p(10, 0), p(5, 8)]);
        assert_eq!(pt.chains[2], vec![p(5, 8), p(5, 3), p(0, 0)]);
    }

    #[test]
    fn standard_structure() {
        let pt = PseudoTriangle::from_polygon(poly(vec![
            p(0, 0),
            p(6, 2),
            p(12, 0),
            p(8, 5),
            p(6, 10),
            p(4, 5),
        ]))
        .unwrap();
        assert_eq!(pt.class, PtClass::Standard);
        assert_eq!(pt.corners, [p(0, 0), p(12, 0), p(6, 10)]);
        assert_eq!(pt.apex, None);
        assert_eq!(pt.chains[0], vec![p(0, 0), p(6, 2), p(12, 0)]);
    }

    #[test]
    fn mountain_structure() {
        let pt = PseudoTriangle::from_polygon(poly(vec![
            p(0, 12),
            p(-2, 7),
            p(-4, 3),
            p(-6, 0),
            p(6, 0),
            p(2, 5),
        ]))
        .unwrap();
        assert_eq!(pt.class, PtClass::Mountain);
        assert_eq!(pt.corners, [p(-6, 0), p(6, 0), p(0, 12)]);
        assert_eq!(pt.base_chain(), Some(0));
    }

    #[test]
    fn triangle_is_degenerate_pt() {
        let pt = PseudoTriangle::from_polygon(poly(vec![p(0, 0), p(10, 0), p(5, 8)])).unwrap();
        assert_eq!(pt.class, PtClass::Triangle);
        assert_eq!(pt.apex, None);
    }

    #[test]
    fn convex_polygon_is_not_pt() {
        let r = PseudoTriangle::from_polygon(poly(vec![p(0, 0), p(10, 0), p(10, 10), p(0, 10)]));
        assert!(matches!(r, Err(Error::ClassMismatch { .. })));
    }

    #[test]
    fn emptiness() {
        let q = poly(vec![p(0, 0), p(10, 0), p(5, 8), p(5, 3)]);
        let empty = PointSet::new(vec![p(4, 4), p(-3, 2), p(5, 3)]).unwrap();
        assert!(is_empty_in(&q, &empty));
        let full = PointSet::new(vec![p(6, 2)]).unwrap();
        assert!(!is_empty_in(&q, &full));
    }
}

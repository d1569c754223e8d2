//! Homogeneous intersection points. Ray-ray and ray-hull intersections of
//! points drawn from the coordinate range land on rational coordinates; they
//! are kept as integer triples (hx, hy, w), w > 0, so every later
//! orientation test stays exact. With input coordinates bounded by 2^20 the
//! triples fit comfortably in i128 and the mixed orientation determinants
//! stay below 2^87.

use super::{orientation, Orientation, Point};
use crate::scalar::Coord;

/// Point with rational coordinates (hx / w, hy / w), normalized to w > 0.
#[derive(Clone, Copy, Debug)]
pub struct HPoint {
    pub hx: i128,
    pub hy: i128,
    pub w: i128,
}

/// Coefficients (a, b, c) of the line ax + by + c = 0 through two points.
fn line_coeffs<T: Coord>(p: Point<T>, q: Point<T>) -> (i128, i128, i128) {
    let (px, py) = (p.x.wide(), p.y.wide());
    let (qx, qy) = (q.x.wide(), q.y.wide());
    let a = qy - py;
    let b = px - qx;
    let c = -(a * px + b * py);
    (a, b, c)
}

impl HPoint {
    pub fn from_point<T: Coord>(p: Point<T>) -> Self {
        HPoint { hx: p.x.wide(), hy: p.y.wide(), w: 1 }
    }

    /// Intersection of the lines through (p1, q1) and (p2, q2), or None for
    /// parallel lines.
    pub fn from_line_intersection<T: Coord>(
        p1: Point<T>,
        q1: Point<T>,
        p2: Point<T>,
        q2: Point<T>,
    ) -> Option<Self> {
        let (a1, b1, c1) = line_coeffs(p1, q1);
        let (a2, b2, c2) = line_coeffs(p2, q2);
        let w = a1 * b2 - a2 * b1;
        if w == 0 {
            return None;
        }
        let hx = b1 * c2 - b2 * c1;
        let hy = c1 * a2 - c2 * a1;
        let h = HPoint { hx, hy, w };
        Some(if w < 0 { HPoint { hx: -hx, hy: -hy, w: -w } } else { h })
    }

    /// True when this point equals the integral point `p`.
    pub fn coincides_with<T: Coord>(&self, p: Point<T>) -> bool {
        self.hx == self.w * p.x.wide() && self.hy == self.w * p.y.wide()
    }

    /// True when this point lies strictly ahead of `p` along the direction
    /// from `p` to `q`.
    pub fn strictly_ahead_of<T: Coord>(&self, p: Point<T>, q: Point<T>) -> bool {
        let dx = q.x.wide() - p.x.wide();
        let dy = q.y.wide() - p.y.wide();
        dx * (self.hx - self.w * p.x.wide()) + dy * (self.hy - self.w * p.y.wide()) > 0
    }

    /// True when this point lies on the closed segment pq, assuming it
    /// already lies on the supporting line.
    pub fn on_closed_segment<T: Coord>(&self, p: Point<T>, q: Point<T>) -> bool {
        let dx = q.x.wide() - p.x.wide();
        let dy = q.y.wide() - p.y.wide();
        let fwd = dx * (self.hx - self.w * p.x.wide()) + dy * (self.hy - self.w * p.y.wide());
        let back = -dx * (self.hx - self.w * q.x.wide()) - dy * (self.hy - self.w * q.y.wide());
        fwd >= 0 && back >= 0
    }

    /// Direction vector from the integral point `p` toward this point,
    /// scaled by w (safe as a cone arm).
    pub fn dir_from<T: Coord>(&self, p: Point<T>) -> (i128, i128) {
        (self.hx - self.w * p.x.wide(), self.hy - self.w * p.y.wide())
    }
}

/// Orientation of the triple (a, b, h) with the homogeneous point last.
pub fn orient_mixed<T: Coord>(a: Point<T>, b: Point<T>, h: &HPoint) -> Orientation {
    let ux = b.x.wide() - a.x.wide();
    let uy = b.y.wide() - a.y.wide();
    let vx = h.hx - h.w * a.x.wide();
    let vy = h.hy - h.w * a.y.wide();
    Orientation::from_det(ux * vy - uy * vx)
}

/// Intersection of the ray from p1 through q1 with the ray from p2 through
/// q2, strictly ahead of both origins.
pub fn ray_ray_intersection<T: Coord>(
    p1: Point<T>,
    q1: Point<T>,
    p2: Point<T>,
    q2: Point<T>,
) -> Option<HPoint> {
    let h = HPoint::from_line_intersection(p1, q1, p2, q2)?;
    (h.strictly_ahead_of(p1, q1) && h.strictly_ahead_of(p2, q2)).then_some(h)
}

/// Point where the ray from `p` through `q` crosses the boundary of the
/// convex polygon `hull` (vertices in order), strictly ahead of `p`. For `p`
/// inside or on the hull there is at most one such crossing.
pub fn ray_hull_exit<T: Coord>(p: Point<T>, q: Point<T>, hull: &[Point<T>]) -> Option<HPoint> {
    let m = hull.len();
    for i in 0..m {
        let (h1, h2) = (hull[i], hull[(i + 1) % m]);
        if let Some(x) = HPoint::from_line_intersection(p, q, h1, h2) {
            if x.strictly_ahead_of(p, q) && x.on_closed_segment(h1, h2) {
                return Some(x);
            }
        }
    }
    None
}

/// Strict interior test for the triangle with real vertices a, b and
/// homogeneous vertex h.
pub fn in_triangle_h<T: Coord>(a: Point<T>, b: Point<T>, h: &HPoint, x: Point<T>) -> bool {
    let oab = orient_mixed(a, b, h);
    if oab.is_collinear() {
        return false;
    }
    orientation(a, b, x) == oab
        && orient_mixed(b, x, h) == orient_mixed(b, a, h)
        && orient_mixed(a, x, h) == oab
}

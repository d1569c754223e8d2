//! Half-planes, cones and convex regions, plus the two proximity queries the
//! constructive procedures lean on: angular nearest neighbors around a ray
//! and nearest neighbors to a segment's supporting line.

use super::{cross, orientation, Orientation, Point, PointSet};
use crate::error::{Error, Result};
use crate::scalar::Coord;

/// One side of the directed line through `a` and `b`. `side` is the
/// orientation a point must have relative to (a, b); `strict` controls
/// whether boundary points count.
#[derive(Clone, Copy, Debug)]
pub struct HalfPlane<T: Coord> {
    a: Point<T>,
    b: Point<T>,
    side: Orientation,
    strict: bool,
}

impl<T: Coord> HalfPlane<T> {
    pub fn new(a: Point<T>, b: Point<T>, side: Orientation, strict: bool) -> Self {
        debug_assert!(!side.is_collinear(), "half-plane side must be a strict orientation");
        HalfPlane { a, b, side, strict }
    }

    /// Open half-plane bounded by line ab containing `witness`.
    pub fn strict_side_of(a: Point<T>, b: Point<T>, witness: Point<T>) -> Self {
        let side = orientation(a, b, witness);
        debug_assert!(!side.is_collinear(), "witness lies on the boundary line");
        HalfPlane { a, b, side, strict: true }
    }

    /// Closed half-plane bounded by line ab containing `witness`.
    pub fn closed_side_of(a: Point<T>, b: Point<T>, witness: Point<T>) -> Self {
        let mut hp = Self::strict_side_of(a, b, witness);
        hp.strict = false;
        hp
    }

    pub fn contains(&self, x: Point<T>) -> bool {
        let o = orientation(self.a, self.b, x);
        if o.is_collinear() {
            !self.strict
        } else {
            o == self.side
        }
    }
}

/// Open cone with apex `apex` spanned by two direction vectors, assumed to
/// subtend an angle strictly between 0 and pi. Directions are stored widened
/// so arms may come from differences of homogeneous intersection points.
#[derive(Clone, Copy, Debug)]
pub struct Cone<T: Coord> {
    apex: Point<T>,
    du: (i128, i128),
    dv: (i128, i128),
}

impl<T: Coord> Cone<T> {
    /// Cone at `apex` spanned by rays toward `u` and `v`.
    pub fn new(apex: Point<T>, u: Point<T>, v: Point<T>) -> Self {
        Self::with_dirs(
            apex,
            (u.x.wide() - apex.x.wide(), u.y.wide() - apex.y.wide()),
            (v.x.wide() - apex.x.wide(), v.y.wide() - apex.y.wide()),
        )
    }

    /// Cone at `apex` spanned by rays with explicit direction vectors.
    pub fn with_dirs(apex: Point<T>, du: (i128, i128), dv: (i128, i128)) -> Self {
        debug_assert!(
            du.0 * dv.1 - du.1 * dv.0 != 0,
            "cone arms must not be parallel"
        );
        Cone { apex, du, dv }
    }

    pub fn apex(&self) -> Point<T> {
        self.apex
    }

    /// Strict membership: `x` lies inside the cone, off both arms.
    pub fn contains(&self, x: Point<T>) -> bool {
        let dx = (x.x.wide() - self.apex.x.wide(), x.y.wide() - self.apex.y.wide());
        let uv = sign(self.du.0 * self.dv.1 - self.du.1 * self.dv.0);
        let ux = sign(self.du.0 * dx.1 - self.du.1 * dx.0);
        let vx = sign(self.dv.0 * dx.1 - self.dv.1 * dx.0);
        ux == uv && vx == -uv
    }
}

fn sign(v: i128) -> i8 {
    match v.cmp(&0) {
        std::cmp::Ordering::Less => -1,
        std::cmp::Ordering::Equal => 0,
        std::cmp::Ordering::Greater => 1,
    }
}

/// Intersection of half-planes and cones. An empty region contains
/// everything; callers add constraints one by one.
#[derive(Clone, Debug, Default)]
pub struct ConvexRegion<T: Coord> {
    half_planes: Vec<HalfPlane<T>>,
    cones: Vec<Cone<T>>,
}

impl<T: Coord> ConvexRegion<T> {
    pub fn new() -> Self {
        ConvexRegion { half_planes: Vec::new(), cones: Vec::new() }
    }

    /// Open interior of triangle abc.
    pub fn triangle_interior(a: Point<T>, b: Point<T>, c: Point<T>) -> Self {
        ConvexRegion {
            half_planes: vec![
                HalfPlane::strict_side_of(a, b, c),
                HalfPlane::strict_side_of(b, c, a),
                HalfPlane::strict_side_of(c, a, b),
            ],
            cones: Vec::new(),
        }
    }

    pub fn with_half_plane(mut self, hp: HalfPlane<T>) -> Self {
        self.half_planes.push(hp);
        self
    }

    pub fn with_cone(mut self, cone: Cone<T>) -> Self {
        self.cones.push(cone);
        self
    }

    pub fn contains(&self, x: Point<T>) -> bool {
        self.half_planes.iter().all(|hp| hp.contains(x))
            && self.cones.iter().all(|c| c.contains(x))
    }
}

impl<T: Coord> From<HalfPlane<T>> for ConvexRegion<T> {
    fn from(hp: HalfPlane<T>) -> Self {
        ConvexRegion::new().with_half_plane(hp)
    }
}

impl<T: Coord> From<Cone<T>> for ConvexRegion<T> {
    fn from(cone: Cone<T>) -> Self {
        ConvexRegion::new().with_cone(cone)
    }
}

/// Nearest angular neighbor of the ray from `p` through `q` among the points
/// of `set` inside `region`. A candidate wins when the open wedge swept from
/// the ray to it holds no other candidate; with candidates on both sides of
/// the ray line both extremes qualify and the earliest in set order is
/// returned. Points on the ray itself have angle zero and beat everything,
/// nearest first.
pub fn nearest_angular_neighbor<T: Coord>(
    p: Point<T>,
    q: Point<T>,
    region: &ConvexRegion<T>,
    set: &PointSet<T>,
) -> Option<Point<T>> {
    let candidates: Vec<Point<T>> = set
        .iter()
        .copied()
        .filter(|&z| z != p && z != q && region.contains(z))
        .collect();
    nearest_angular_neighbor_in(p, q, &candidates)
}

/// Same query over an explicit, already filtered candidate list.
pub fn nearest_angular_neighbor_in<T: Coord>(
    p: Point<T>,
    q: Point<T>,
    candidates: &[Point<T>],
) -> Option<Point<T>> {
    let cands: Vec<Point<T>> =
        candidates.iter().copied().filter(|&z| z != p && z != q).collect();
    if cands.is_empty() {
        return None;
    }
    // Angle zero: on the ray, strictly ahead of p.
    let mut on_ray: Vec<Point<T>> = cands
        .iter()
        .copied()
        .filter(|&z| orientation(p, q, z).is_collinear() && dot_ahead(p, q, z))
        .collect();
    if !on_ray.is_empty() {
        on_ray.sort_by_key(|&z| dist2(p, z));
        return Some(on_ray[0]);
    }
    for &z in &cands {
        let side = orientation(p, q, z);
        if side.is_collinear() {
            continue;
        }
        let blocked = cands.iter().any(|&w| {
            w != z && orientation(p, q, w) == side && orientation(p, z, w) == side.reversed()
        });
        if !blocked {
            return Some(z);
        }
    }
    // Only points directly behind p remain; take the closest.
    cands.iter().copied().min_by_key(|&z| dist2(p, z))
}

fn dot_ahead<T: Coord>(p: Point<T>, q: Point<T>, z: Point<T>) -> bool {
    let dq = (q.x.wide() - p.x.wide(), q.y.wide() - p.y.wide());
    let dz = (z.x.wide() - p.x.wide(), z.y.wide() - p.y.wide());
    dq.0 * dz.0 + dq.1 * dz.1 > 0
}

fn dist2<T: Coord>(p: Point<T>, z: Point<T>) -> i128 {
    let dx = z.x.wide() - p.x.wide();
    let dy = z.y.wide() - p.y.wide();
    dx * dx + dy * dy
}

/// Candidate of `set` (excluding the endpoints) closest to the supporting
/// line of segment ab, measured by the unsigned cross product. Two
/// candidates at the same minimal distance make the query ambiguous.
pub fn nearest_neighbor_to_segment<T: Coord>(
    a: Point<T>,
    b: Point<T>,
    set: &PointSet<T>,
) -> Result<Option<Point<T>>> {
    let candidates: Vec<Point<T>> =
        set.iter().copied().filter(|&z| z != a && z != b).collect();
    nearest_neighbor_to_segment_in(a, b, &candidates)
}

/// Same query over an explicit candidate list.
pub fn nearest_neighbor_to_segment_in<T: Coord>(
    a: Point<T>,
    b: Point<T>,
    candidates: &[Point<T>],
) -> Result<Option<Point<T>>> {
    let mut best: Option<(i128, Point<T>)> = None;
    let mut tied = false;
    for &z in candidates {
        if z == a || z == b {
            continue;
        }
        let d = cross(a, b, z).abs();
        match best {
            None => best = Some((d, z)),
            Some((bd, bz)) => {
                if d < bd {
                    best = Some((d, z));
                    tied = false;
                } else if d == bd && z != bz {
                    tied = true;
                }
            }
        }
    }
    if tied {
        let (bd, _) = best.unwrap();
        return Err(Error::DegenerateInput(format!(
            "two points at equal distance {bd} from the line through {a} and {b}"
        )));
    }
    Ok(best.map(|(_, z)| z))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point<i64> {
        Point::new(x, y)
    }

    #[test]
    fn half_plane_sides() {
        let hp = HalfPlane::strict_side_of(p(0, 0), p(10, 0), p(5, 5));
        assert!(hp.contains(p(3, 1)));
        assert!(!hp.contains(p(3, -1)));
        assert!(!hp.contains(p(3, 0)));
        let closed = HalfPlane::closed_side_of(p(0, 0), p(10, 0), p(5, 5));
        assert!(closed.contains(p(3, 0)));
    }

    #[test]
    fn cone_membership() {
        let cone = Cone::new(p(0, 0), p(10, 0), p(0, 10));
        assert!(cone.contains(p(5, 5)));
        assert!(!cone.contains(p(5, 0)));
        assert!(!cone.contains(p(-1, 5)));
        assert!(!cone.contains(p(5, -1)));
    }

    #[test]
    fn triangle_region() {
        let r = ConvexRegion::triangle_interior(p(0, 0), p(10, 0), p(5, 10));
        assert!(r.contains(p(5, 3)));
        assert!(!r.contains(p(5, 0)));
        assert!(!r.contains(p(0, 5)));
    }

    #[test]
    fn angular_neighbor_prefers_smaller_sweep() {
        let set = PointSet::new(vec![p(0, 0), p(10, 0), p(5, 1), p(5, 5)]).unwrap();
        let region =
            ConvexRegion::from(HalfPlane::strict_side_of(p(0, 0), p(10, 0), p(0, 1)));
        let z = nearest_angular_neighbor(p(0, 0), p(10, 0), &region, &set).unwrap();
        assert_eq!(z, p(5, 1));
    }

    #[test]
    fn angular_neighbor_in_cone() {
        let cone = Cone::new(p(0, 0), p(10, 0), p(0, 10));
        let region = ConvexRegion::from(cone);
        let set =
            PointSet::new(vec![p(0, 0), p(10, 0), p(0, 10), p(2, 7), p(7, 2), p(4, 3)]).unwrap();
        let z = nearest_angular_neighbor(p(0, 0), p(10, 0), &region, &set).unwrap();
        assert_eq!(z, p(7, 2));
    }

    #[test]
    fn nearest_to_segment_picks_min_cross() {
        let cands = [p(3, 2), p(7, 5)];
        let z = nearest_neighbor_to_segment_in(p(0, 0), p(10, 0), &cands).unwrap();
        assert_eq!(z, Some(p(3, 2)));
    }

    #[test]
    fn nearest_to_segment_tie_is_degenerate() {
        let cands = [p(3, 2), p(7, -2)];
        let err = nearest_neighbor_to_segment_in(p(0, 0), p(10, 0), &cands);
        assert!(matches!(err, Err(Error::DegenerateInput(_))));
    }
}

//! Empty mountain harvested around a hull vertex, and the empty
//! five-vertex pseudo-triangle obtained by shortening it.

use std::cmp::Ordering;

use crate::constructive::{hull_points, triangular_frame, try_cycle, Construction, DescentTrace};
use crate::error::{Error, Result};
use crate::geom::{orientation, Point, PointSet};
use crate::pseudo::{chain_order, shorten_mountain, PseudoTriangle, PtClass};
use crate::scalar::Coord;

/// Finds an empty mountain with at least five vertices in a set whose hull
/// is a triangle with at least two interior points.
///
/// For a hull vertex `b`, two interior points `p` and `q` adjacent in the
/// radial order around `b` leave the wedge between them empty. The hull
/// vertices of the set cut to the `a` side of line `bp` form a concave
/// chain from `a` to `b`, those cut to the `c` side of line `bq` a chain
/// from `b` to `c`; glued together with the hull edge `ca` they bound a
/// mountain. Candidates are checked for emptiness directly, over every
/// adjacent pair and every choice of hull vertex.
pub fn empty_mountain_triangular<T: Coord>(set: &PointSet<T>) -> Result<PseudoTriangle<T>> {
    let (hull, interior) = triangular_frame(set)?;
    if interior.len() < 2 {
        return Err(Error::Precondition(format!(
            "need at least 2 interior points, got {}",
            interior.len()
        )));
    }
    for rot in 0..3 {
        let a = hull[rot];
        let b = hull[(rot + 1) % 3];
        let c = hull[(rot + 2) % 3];
        // radial order around b, sweeping from the edge bc towards ba
        let mut radial = interior.clone();
        radial.sort_by(|&u, &v| {
            if orientation(b, u, v).is_ccw() {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        });
        for w in 0..radial.len() - 1 {
            let q = radial[w];
            let p = radial[w + 1];
            if let Some(m) = wedge_mountain(set, a, b, c, p, q) {
                if m.is_empty_in(set) {
                    return Ok(m);
                }
            }
        }
    }
    Err(Error::CertificationFailed(
        "no empty mountain found around any hull vertex".into(),
    ))
}

fn wedge_mountain<T: Coord>(
    set: &PointSet<T>,
    a: Point<T>,
    b: Point<T>,
    c: Point<T>,
    p: Point<T>,
    q: Point<T>,
) -> Option<PseudoTriangle<T>> {
    let side_a = orientation(b, p, a);
    let sub_p: Vec<Point<T>> = set
        .iter()
        .copied()
        .filter(|&z| z == b || z == p || orientation(b, p, z) == side_a)
        .collect();
    let side_c = orientation(b, q, c);
    let sub_q: Vec<Point<T>> = set
        .iter()
        .copied()
        .filter(|&z| z == b || z == q || orientation(b, q, z) == side_c)
        .collect();
    let mid_p: Vec<Point<T>> =
        hull_points(&sub_p).into_iter().filter(|&z| z != a && z != b).collect();
    let mid_q: Vec<Point<T>> =
        hull_points(&sub_q).into_iter().filter(|&z| z != b && z != c).collect();
    let mut cycle = chain_order(a, b, &mid_p)?;
    cycle.extend_from_slice(&chain_order(b, c, &mid_q)?[1..]);
    let (pt, _) = try_cycle(&cycle, set)?;
    (pt.class == PtClass::Mountain).then_some(pt)
}

/// Empty five-vertex pseudo-triangle (a mountain) in a set with a
/// triangular hull and at least two interior points.
pub fn empty_5pt_triangular<T: Coord>(set: &PointSet<T>) -> Result<Construction<T>> {
    let mountain = empty_mountain_triangular(set)?;
    let mut trace = DescentTrace::new();
    trace.push("harvest-mountain", &mountain, 0);
    let five = shorten_mountain(&mountain, 5, set)?;
    trace.push("shorten", &five, 0);
    Ok(Construction { result: five, trace })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::PointSet;

    fn p(x: i64, y: i64) -> Point<i64> {
        Point::new(x, y)
    }

    fn set(pts: &[(i64, i64)]) -> PointSet<i64> {
        PointSet::new(pts.iter().map(|&(x, y)| p(x, y)).collect()).unwrap()
    }

    #[test]
    fn two_interior_points() {
        let s = set(&[(0, 10), (0, 0), (10, 0), (2, 4), (4, 2)]);
        let m = empty_mountain_triangular(&s).unwrap();
        assert_eq!(m.class, PtClass::Mountain);
        assert!(m.is_empty_in(&s));
        assert!(m.len() >= 5);

        let c = empty_5pt_triangular(&s).unwrap();
        assert_eq!(c.result.len(), 5);
        assert!(c.result.is_empty_in(&s));
        assert!(!c.trace.oracle_fallback);
    }

    #[test]
    fn crowded_interior() {
        let s = set(&[
            (0, 0),
            (40, 2),
            (17, 38),
            (15, 10),
            (22, 14),
            (12, 17),
            (20, 25),
            (26, 8),
            (9, 5),
        ]);
        let c = empty_5pt_triangular(&s).unwrap();
        assert_eq!(c.result.len(), 5);
        assert_eq!(c.result.class, PtClass::Mountain);
        assert!(c.result.is_empty_in(&s));
        for v in c.result.vertices() {
            assert!(s.contains(*v));
        }
    }

    #[test]
    fn rejects_too_few_interior() {
        let s = set(&[(0, 10), (0, 0), (10, 0), (2, 4)]);
        assert!(matches!(empty_5pt_triangular(&s), Err(Error::Precondition(_))));
    }

    #[test]
    fn rejects_wide_hull() {
        let s = set(&[(0, 0), (10, 0), (12, 9), (5, 14), (-3, 8), (5, 5), (6, 7)]);
        assert!(matches!(empty_5pt_triangular(&s), Err(Error::Precondition(_))));
    }
}

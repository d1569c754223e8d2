//! Rearranging pseudo-triangles: turning mountains and fans into standard
//! form on the same vertex set, and shrinking empty mountains.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::geom::{nearest_neighbor_to_segment_in, Point, PointSet};
use crate::pseudo::{
    assemble_pseudo_triangle, ChainAssignment, Polygon, PseudoTriangle, PtClass,
};
use crate::scalar::Coord;

/// Largest vertex count for which the exhaustive reassignment fallback is
/// attempted (3^(l-3) chain assignments per corner triple).
const EXHAUSTIVE_LIMIT: usize = 9;

/// Rearranges a mountain or fan into a standard pseudo-triangle on the same
/// vertex set. Needs at least 6 vertices, since a standard pseudo-triangle
/// has a point on every chain. When `ambient` is given, the result must be
/// empty in it; pass the ambient set whenever the input's emptiness has to
/// carry over.
pub fn standardize<T: Coord>(
    pt: &PseudoTriangle<T>,
    ambient: Option<&PointSet<T>>,
) -> Result<PseudoTriangle<T>> {
    if pt.len() < 6 {
        return Err(Error::Precondition(format!(
            "standard form needs at least 6 vertices, got {}",
            pt.len()
        )));
    }
    let accept = |asg: &ChainAssignment<T>| -> Option<PseudoTriangle<T>> {
        let cand = assemble_pseudo_triangle(asg)?;
        if cand.class != PtClass::Standard {
            return None;
        }
        if let Some(set) = ambient {
            if !cand.is_empty_in(set) {
                return None;
            }
        }
        Some(cand)
    };
    match pt.class {
        PtClass::Standard => return Ok(pt.clone()),
        PtClass::Mountain => {
            let base = pt.base_chain().unwrap();
            let b = pt.corners[base];
            let c = pt.corners[(base + 1) % 3];
            let a = pt.corners[(base + 2) % 3];
            let side_ab = &pt.chains[(base + 2) % 3]; // walks a..b
            let side_ca = &pt.chains[(base + 1) % 3]; // walks c..a
            let p_pts: Vec<Point<T>> = side_ab[1..side_ab.len() - 1].to_vec();
            let q_pts: Vec<Point<T>> =
                side_ca[1..side_ca.len() - 1].iter().rev().copied().collect();
            let mut pool = p_pts.clone();
            pool.extend_from_slice(&q_pts);
            // moving the chain point nearest to the base line onto the base
            // chain is the preferred rearrangement
            let mut order = Vec::new();
            if let Ok(Some(near)) = nearest_neighbor_to_segment_in(b, c, &pool) {
                order.push(near);
            }
            for &x in &pool {
                if !order.contains(&x) {
                    order.push(x);
                }
            }
            for x in order {
                let rest_p: Vec<_> = p_pts.iter().copied().filter(|&y| y != x).collect();
                let rest_q: Vec<_> = q_pts.iter().copied().filter(|&y| y != x).collect();
                if rest_p.is_empty() || rest_q.is_empty() {
                    continue;
                }
                let asg = ChainAssignment {
                    corners: [a, b, c],
                    chains: [rest_p, vec![x], rest_q],
                };
                if let Some(cand) = accept(&asg) {
                    return Ok(cand);
                }
            }
            // one side chain had a single point: peel a point off the long
            // side onto the short one instead
            for (x, y) in pool.iter().copied().cartesian_product(pool.iter().copied()) {
                if x == y {
                    continue;
                }
                let rest: Vec<_> =
                    pool.iter().copied().filter(|&z| z != x && z != y).collect();
                if rest.is_empty() {
                    continue;
                }
                let asg = ChainAssignment {
                    corners: [a, b, c],
                    chains: [vec![y], vec![x], rest],
                };
                if let Some(cand) = accept(&asg) {
                    return Ok(cand);
                }
            }
        }
        PtClass::Fan => {
            let long = (0..3).find(|&i| pt.chains[i].len() > 2).unwrap();
            let b = pt.corners[long];
            let c = pt.corners[(long + 1) % 3];
            let a = pt.corners[(long + 2) % 3];
            let l = &pt.chains[long];
            let inner: Vec<Point<T>> = l[1..l.len() - 1].to_vec();
            // endpoints of the chain move to the two bare chains first
            let mut pairs = vec![(inner[0], inner[inner.len() - 1])];
            for (x, y) in inner.iter().copied().cartesian_product(inner.iter().copied()) {
                if x != y && !pairs.contains(&(x, y)) {
                    pairs.push((x, y));
                }
            }
            for (x, y) in pairs {
                let rest: Vec<_> =
                    inner.iter().copied().filter(|&z| z != x && z != y).collect();
                if rest.is_empty() {
                    continue;
                }
                let asg = ChainAssignment {
                    corners: [a, b, c],
                    chains: [vec![x], rest, vec![y]],
                };
                if let Some(cand) = accept(&asg) {
                    return Ok(cand);
                }
            }
        }
        PtClass::Triangle => unreachable!("triangles have 3 vertices"),
    }
    // last resort: try every corner triple and chain assignment on the same
    // vertex set
    if pt.len() <= EXHAUSTIVE_LIMIT {
        let verts = pt.vertices().to_vec();
        let k = verts.len();
        for triple in (0..k).combinations(3) {
            let corners = [verts[triple[0]], verts[triple[1]], verts[triple[2]]];
            let rest: Vec<Point<T>> = (0..k)
                .filter(|i| !triple.contains(i))
                .map(|i| verts[i])
                .collect();
            let m = rest.len();
            for code in 0..3usize.pow(m as u32) {
                let mut chains: [Vec<Point<T>>; 3] = [vec![], vec![], vec![]];
                let mut c = code;
                for &pt_ in &rest {
                    chains[c % 3].push(pt_);
                    c /= 3;
                }
                if chains.iter().any(Vec::is_empty) {
                    continue;
                }
                let asg = ChainAssignment { corners, chains };
                if let Some(cand) = accept(&asg) {
                    return Ok(cand);
                }
            }
        }
    }
    Err(Error::CertificationFailed(format!(
        "no standard rearrangement of the {}-vertex {} exists{}",
        pt.len(),
        pt.class,
        if ambient.is_some() { " that stays empty" } else { "" }
    )))
}

fn expected_class(size: usize) -> PtClass {
    match size {
        3 => PtClass::Triangle,
        4 => PtClass::Fan,
        _ => PtClass::Mountain,
    }
}

/// Shrinks an empty mountain to an empty pseudo-triangle with `m` vertices
/// by repeatedly cutting off a convex corner. Cutting a corner replaces two
/// boundary edges by the chord, so the region only shrinks and emptiness in
/// `ambient` is preserved; which corner can be cut while staying a mountain
/// is found by backtracking. Sizes 4 and 3 are reached as a fan and a
/// triangle.
pub fn shorten_mountain<T: Coord>(
    pt: &PseudoTriangle<T>,
    m: usize,
    ambient: &PointSet<T>,
) -> Result<PseudoTriangle<T>> {
    if pt.class == PtClass::Standard {
        return Err(Error::ClassMismatch {
            expected: "mountain, fan or triangle".into(),
            found: "standard".into(),
        });
    }
    if m < 3 || m > pt.len() {
        return Err(Error::OutOfRange(format!(
            "target size {m} not in 3..={}",
            pt.len()
        )));
    }
    if !pt.is_empty_in(ambient) {
        return Err(Error::Precondition(
            "shortening preserves emptiness, but the input is not empty".into(),
        ));
    }
    fn go<T: Coord>(
        cur: &PseudoTriangle<T>,
        m: usize,
        ambient: &PointSet<T>,
    ) -> Option<PseudoTriangle<T>> {
        if cur.len() == m {
            return Some(cur.clone());
        }
        let want = expected_class(cur.len() - 1);
        for &corner in &cur.corners {
            let remaining: Vec<Point<T>> =
                cur.vertices().iter().copied().filter(|&v| v != corner).collect();
            let Ok(poly) = Polygon::new(remaining) else { continue };
            let Ok(next) = PseudoTriangle::from_polygon(poly) else { continue };
            if next.class != want || !next.is_empty_in(ambient) {
                continue;
            }
            if let Some(done) = go(&next, m, ambient) {
                return Some(done);
            }
        }
        None
    }
    go(pt, m, ambient).ok_or_else(|| {
        Error::CertificationFailed(format!(
            "no corner-cutting sequence shrinks the {}-vertex {} to {m} vertices",
            pt.len(),
            pt.class
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point<i64> {
        Point::new(x, y)
    }

    fn mountain6() -> PseudoTriangle<i64> {
        PseudoTriangle::from_polygon(
            Polygon::new(vec![
                p(0, 12),
                p(-2, 7),
                p(-4, 3),
                p(-6, 0),
                p(6, 0),
                p(2, 5),
            ])
            .unwrap(),
        )
        .unwrap()
    }

    fn fan6() -> PseudoTriangle<i64> {
        PseudoTriangle::from_polygon(
            Polygon::new(vec![
                p(0, -8),
                p(-8, 6),
                p(-3, 4),
                p(0, 3),
                p(3, 4),
                p(8, 6),
            ])
            .unwrap(),
        )
        .unwrap()
    }

    fn own_points(pt: &PseudoTriangle<i64>) -> PointSet<i64> {
        PointSet::new(pt.vertices().to_vec()).unwrap()
    }

    #[test]
    fn standardize_mountain() {
        let pt = mountain6();
        let ambient = own_points(&pt);
        let std = standardize(&pt, Some(&ambient)).unwrap();
        assert_eq!(std.class, PtClass::Standard);
        let mut got = std.vertices().to_vec();
        got.sort();
        let mut want = pt.vertices().to_vec();
        want.sort();
        assert_eq!(got, want);
        assert!(std.is_empty_in(&ambient));
    }

    #[test]
    fn standardize_fan() {
        let pt = fan6();
        assert_eq!(pt.class, PtClass::Fan);
        let ambient = own_points(&pt);
        let std = standardize(&pt, Some(&ambient)).unwrap();
        assert_eq!(std.class, PtClass::Standard);
        assert!(std.is_empty_in(&ambient));
    }

    #[test]
    fn standardize_rejects_small() {
        let small = PseudoTriangle::from_polygon(
            Polygon::new(vec![p(0, 12), p(-4, 3), p(-6, 0), p(6, 0), p(2, 5)]).unwrap(),
        )
        .unwrap();
        assert!(matches!(
            standardize(&small, None),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn shorten_to_each_size() {
        let pt = mountain6();
        let ambient = own_points(&pt);
        for (m, class) in [
            (5, PtClass::Mountain),
            (4, PtClass::Fan),
            (3, PtClass::Triangle),
        ] {
            let small = shorten_mountain(&pt, m, &ambient).unwrap();
            assert_eq!(small.len(), m);
            assert_eq!(small.class, class);
            assert!(small.is_empty_in(&ambient));
        }
    }

    #[test]
    fn shorten_rejects_standard_input() {
        let pt = mountain6();
        let ambient = own_points(&pt);
        let std = standardize(&pt, Some(&ambient)).unwrap();
        assert!(matches!(
            shorten_mountain(&std, 5, &ambient),
            Err(Error::ClassMismatch { .. })
        ));
    }

    #[test]
    fn shorten_rejects_nonempty_input() {
        let pt = mountain6();
        let mut points = pt.vertices().to_vec();
        points.push(p(0, 2));
        let ambient = PointSet::new(points).unwrap();
        assert!(matches!(
            shorten_mountain(&pt, 5, &ambient),
            Err(Error::Precondition(_))
        ));
    }
}

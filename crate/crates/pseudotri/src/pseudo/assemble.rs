//! Assembling pseudo-triangles from a corner/chain assignment.
//!
//! Given three corners and the points meant to populate each concave chain,
//! the boundary order along a chain is forced: a concave chain lies entirely
//! on one side of its chord, so its points together with the two corners
//! must be in convex position and the chain is the hull arc complementary to
//! the chord. Everything else (simplicity, exactly three convex vertices,
//! the corners being the convex ones) is validated by construction.

use crate::geom::{hull_indices, Point};
use crate::pseudo::{Polygon, PseudoTriangle};
use crate::scalar::Coord;

/// Corners with the interior points of each chain. `chains[i]` holds the
/// points strictly between `corners[i]` and `corners[(i + 1) % 3]`, in any
/// order.
#[derive(Debug, Clone)]
pub struct ChainAssignment<T: Coord> {
    pub corners: [Point<T>; 3],
    pub chains: [Vec<Point<T>>; 3],
}

/// Boundary order of the chain from `u` to `v` through `pts`, inclusive of
/// both endpoints, or None when the points cannot form a concave chain.
pub(crate) fn chain_order<T: Coord>(
    u: Point<T>,
    v: Point<T>,
    pts: &[Point<T>],
) -> Option<Vec<Point<T>>> {
    if pts.is_empty() {
        return Some(vec![u, v]);
    }
    if pts.contains(&u) || pts.contains(&v) {
        return None;
    }
    let mut all = vec![u];
    all.extend_from_slice(pts);
    all.push(v);
    let hull = hull_indices(&all);
    if hull.len() != all.len() {
        return None;
    }
    let m = hull.len();
    let iu = hull.iter().position(|&i| i == 0)?;
    let iv = hull.iter().position(|&i| all[i] == v)?;
    // u and v must be hull-adjacent; the chain is the arc avoiding that edge
    let arc: Vec<Point<T>> = if (iu + 1) % m == iv {
        (0..m).map(|k| all[hull[(iu + m - k) % m]]).collect()
    } else if (iv + 1) % m == iu {
        (0..m).map(|k| all[hull[(iu + k) % m]]).collect()
    } else {
        return None;
    };
    debug_assert_eq!(arc[0], u);
    debug_assert_eq!(arc[m - 1], v);
    Some(arc)
}

/// Builds and validates the pseudo-triangle described by `asg`. Returns None
/// when the assignment does not produce a simple polygon whose convex
/// vertices are exactly the three given corners.
pub fn assemble_pseudo_triangle<T: Coord>(
    asg: &ChainAssignment<T>,
) -> Option<PseudoTriangle<T>> {
    let [a, b, c] = asg.corners;
    if a == b || b == c || a == c {
        return None;
    }
    let c0 = chain_order(a, b, &asg.chains[0])?;
    let c1 = chain_order(b, c, &asg.chains[1])?;
    let c2 = chain_order(c, a, &asg.chains[2])?;
    let mut boundary = Vec::with_capacity(c0.len() + c1.len() + c2.len() - 3);
    boundary.extend_from_slice(&c0[..c0.len() - 1]);
    boundary.extend_from_slice(&c1[..c1.len() - 1]);
    boundary.extend_from_slice(&c2[..c2.len() - 1]);
    let polygon = Polygon::new(boundary).ok()?;
    let pt = PseudoTriangle::from_polygon(polygon).ok()?;
    let mut want = [a, b, c];
    want.sort();
    let mut got = pt.corners;
    got.sort();
    (want == got).then_some(pt)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pseudo::PtClass;

    fn p(x: i64, y: i64) -> Point<i64> {
        Point::new(x, y)
    }

    #[test]
    fn assembles_standard_from_scrambled_chains() {
        let asg = ChainAssignment {
            corners: [p(0, 0), p(12, 0), p(6, 10)],
            chains: [vec![p(6, 2)], vec![p(8, 5)], vec![p(4, 5)]],
        };
        let pt = assemble_pseudo_triangle(&asg).unwrap();
        assert_eq!(pt.class, PtClass::Standard);
        assert_eq!(pt.corners, [p(0, 0), p(12, 0), p(6, 10)]);
    }

    #[test]
    fn assembles_multi_point_chain_in_forced_order() {
        // mountain: two points on the chain toward the left base corner
        let asg = ChainAssignment {
            corners: [p(-6, 0), p(6, 0), p(0, 12)],
            chains: [vec![], vec![p(2, 5)], vec![p(-4, 3), p(-2, 7)]],
        };
        let pt = assemble_pseudo_triangle(&asg).unwrap();
        assert_eq!(pt.class, PtClass::Mountain);
        assert_eq!(pt.chains[2], vec![p(0, 12), p(-2, 7), p(-4, 3), p(-6, 0)]);
    }

    #[test]
    fn rejects_corner_that_turns_reflex() {
        // the "chain" point is outside triangle abc, so some corner stops
        // being convex or the boundary self-intersects
        let asg = ChainAssignment {
            corners: [p(0, 0), p(12, 0), p(6, 10)],
            chains: [vec![p(6, -4)], vec![], vec![]],
        };
        assert!(assemble_pseudo_triangle(&asg).is_none());
    }

    #[test]
    fn rejects_point_inside_chain_hull() {
        let asg = ChainAssignment {
            corners: [p(-6, 0), p(6, 0), p(0, 12)],
            // (-3, 4) is inside the hull of the chain points, no concave
            // ordering exists
            chains: [vec![], vec![], vec![p(-4, 3), p(-2, 7), p(-3, 4)]],
        };
        assert!(assemble_pseudo_triangle(&asg).is_none());
    }
}

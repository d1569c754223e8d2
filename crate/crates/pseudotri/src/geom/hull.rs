//! Convex hulls, hull/interior partitions and convex layers.

use super::{orientation, Point, PointSet};
use crate::error::{Error, Result};
use crate::scalar::Coord;

/// Monotone-chain hull over arbitrary point slices. Returns indices into
/// `pts` in counter-clockwise order, rotated to start at the lexicographically
/// smallest point. Collinear inputs are the caller's problem; point sets in
/// general position never produce collinear hull triples.
pub fn hull_indices<T: Coord>(pts: &[Point<T>]) -> Vec<usize> {
    let n = pts.len();
    if n <= 2 {
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by_key(|&i| (pts[i].x, pts[i].y));
        return idx;
    }
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by_key(|&i| (pts[i].x, pts[i].y));
    let mut lower: Vec<usize> = Vec::new();
    for &i in &idx {
        while lower.len() >= 2
            && !orientation(pts[lower[lower.len() - 2]], pts[lower[lower.len() - 1]], pts[i])
                .is_ccw()
        {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in idx.iter().rev() {
        while upper.len() >= 2
            && !orientation(pts[upper[upper.len() - 2]], pts[upper[upper.len() - 1]], pts[i])
                .is_ccw()
        {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    // The lower chain starts at the lexicographic minimum already.
    lower
}

/// Splits `set` into hull vertices and interior points, both as indices into
/// the set's storage order. Hull indices are counter-clockwise starting at
/// the lexicographically smallest point; interior indices keep storage order.
pub fn hull_partition<T: Coord>(set: &PointSet<T>) -> Result<(Vec<usize>, Vec<usize>)> {
    if set.len() < 3 {
        return Err(Error::TooFewPoints { needed: 3, got: set.len() });
    }
    let hull = hull_indices(set.points());
    let mut on_hull = vec![false; set.len()];
    for &i in &hull {
        on_hull[i] = true;
    }
    let interior = (0..set.len()).filter(|&i| !on_hull[i]).collect();
    Ok((hull, interior))
}

/// Hull vertices of `set` in counter-clockwise order.
pub fn convex_hull<T: Coord>(set: &PointSet<T>) -> Result<Vec<Point<T>>> {
    let (hull, _) = hull_partition(set)?;
    Ok(hull.into_iter().map(|i| set[i]).collect())
}

/// True if every point is a hull vertex.
pub fn convex_position<T: Coord>(pts: &[Point<T>]) -> bool {
    pts.len() <= 2 || hull_indices(pts).len() == pts.len()
}

/// Onion peeling: layer 1 is the hull of the whole set, layer j the hull of
/// what remains. Trailing layers may have one or two points. Each layer is in
/// counter-clockwise order starting at its lexicographic minimum.
pub fn convex_layers<T: Coord>(set: &PointSet<T>) -> Vec<Vec<Point<T>>> {
    let mut remaining: Vec<Point<T>> = set.points().to_vec();
    let mut layers = Vec::new();
    while !remaining.is_empty() {
        let hull = hull_indices(&remaining);
        let mut on_hull = vec![false; remaining.len()];
        for &i in &hull {
            on_hull[i] = true;
        }
        layers.push(hull.iter().map(|&i| remaining[i]).collect());
        remaining = remaining
            .into_iter()
            .enumerate()
            .filter_map(|(i, p)| (!on_hull[i]).then_some(p))
            .collect();
    }
    layers
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point<i64> {
        Point::new(x, y)
    }

    fn set(v: Vec<Point<i64>>) -> PointSet<i64> {
        PointSet::new(v).unwrap()
    }

    #[test]
    fn square_with_center() {
        let s = set(vec![p(0, 0), p(10, 0), p(10, 10), p(0, 10), p(5, 4)]);
        let (hull, interior) = hull_partition(&s).unwrap();
        assert_eq!(hull.len(), 4);
        assert_eq!(interior, vec![4]);
    }

    #[test]
    fn bare_triangle() {
        let s = set(vec![p(0, 0), p(10, 0), p(5, 10)]);
        let (hull, interior) = hull_partition(&s).unwrap();
        assert_eq!(hull.len(), 3);
        assert!(interior.is_empty());
    }

    #[test]
    fn three_hull_two_interior() {
        let s = set(vec![p(0, 0), p(12, 0), p(6, 10), p(5, 3), p(7, 3)]);
        let (hull, interior) = hull_partition(&s).unwrap();
        assert_eq!(hull.len(), 3);
        assert_eq!(interior.len(), 2);
        let hull_pts: Vec<_> = hull.iter().map(|&i| s[i]).collect();
        assert_eq!(hull_pts, vec![p(0, 0), p(12, 0), p(6, 10)]);
    }

    #[test]
    fn hull_is_ccw_and_starts_at_lex_min() {
        let s = set(vec![p(4, 9), p(0, 0), p(10, 1), p(9, 8), p(2, 7)]);
        let hull = convex_hull(&s).unwrap();
        assert_eq!(hull[0], p(0, 0));
        let m = hull.len();
        for i in 0..m {
            assert!(orientation(hull[i], hull[(i + 1) % m], hull[(i + 2) % m]).is_ccw());
        }
    }

    #[test]
    fn layers_partition_the_set() {
        // three nested triangles
        let s = set(vec![
            p(0, 0),
            p(40, 0),
            p(19, 36),
            p(10, 6),
            p(30, 7),
            p(21, 24),
            p(16, 11),
            p(24, 12),
            p(18, 16),
        ]);
        let layers = convex_layers(&s);
        assert_eq!(layers.iter().map(Vec::len).collect::<Vec<_>>(), vec![3, 3, 3]);
        let total: usize = layers.iter().map(Vec::len).sum();
        assert_eq!(total, s.len());
    }

    #[test]
    fn layers_square_center() {
        let s = set(vec![p(0, 0), p(10, 0), p(10, 10), p(0, 10), p(5, 4)]);
        let layers = convex_layers(&s);
        assert_eq!(layers.iter().map(Vec::len).collect::<Vec<_>>(), vec![4, 1]);
    }

    #[test]
    fn convex_position_checks() {
        assert!(convex_position(&[p(0, 0), p(10, 0), p(10, 10), p(0, 10)]));
        assert!(!convex_position(&[p(0, 0), p(10, 0), p(5, 10), p(5, 3)]));
    }
}

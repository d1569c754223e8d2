//! Exhaustive searches: k-holes, convex k-gons, empty pseudo-triangles,
//! convexity depth and splitter classification.
//!
//! These are reference implementations. They enumerate index-ordered subsets
//! with monotone pruning only (a superset of a non-convex subset is never in
//! convex position; a hull that already contains a point never empties out),
//! so the first witness found is the lexicographically first one and the
//! procedures can serve as ground truth for the constructive algorithms.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::geom::{
    convex_position, count_in_triangle, hull_indices, hull_partition, in_triangle, orientation,
    Point, PointSet,
};
use crate::pseudo::{assemble_pseudo_triangle, ChainAssignment, PseudoTriangle};
use crate::scalar::Coord;

/// Strict interior test against a convex counter-clockwise vertex cycle.
fn convex_contains_strict<T: Coord>(hull: &[Point<T>], p: Point<T>) -> bool {
    if hull.len() < 3 || hull.contains(&p) {
        return false;
    }
    let m = hull.len();
    (0..m).all(|i| orientation(hull[i], hull[(i + 1) % m], p).is_ccw())
}

fn hull_of<T: Coord>(pts: &[Point<T>]) -> Vec<Point<T>> {
    hull_indices(pts).into_iter().map(|i| pts[i]).collect()
}

/// Depth-first search over index-increasing subsets in convex position.
/// `need_empty` additionally prunes subsets whose hull already swallowed a
/// set point. `reverse` flips the branch order at every level; it visits the
/// same search space and is used to cross-check witness existence.
fn search_convex<T: Coord>(
    set: &PointSet<T>,
    k: usize,
    need_empty: bool,
    reverse: bool,
) -> Option<Vec<Point<T>>> {
    let n = set.len();
    if k < 3 || k > n {
        return None;
    }
    fn rec<T: Coord>(
        set: &PointSet<T>,
        k: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        need_empty: bool,
        reverse: bool,
    ) -> Option<Vec<Point<T>>> {
        if chosen.len() == k {
            let sel: Vec<Point<T>> = chosen.iter().map(|&i| set[i]).collect();
            return Some(hull_of(&sel));
        }
        let n = set.len();
        let last = n - (k - chosen.len());
        let range: Box<dyn Iterator<Item = usize>> = if reverse {
            Box::new((start..=last).rev())
        } else {
            Box::new(start..=last)
        };
        for i in range {
            chosen.push(i);
            let sel: Vec<Point<T>> = chosen.iter().map(|&i| set[i]).collect();
            let viable = convex_position(&sel)
                && (!need_empty || {
                    let hull = hull_of(&sel);
                    set.iter().all(|&p| !convex_contains_strict(&hull, p))
                });
            if viable {
                if let Some(found) = rec(set, k, i + 1, chosen, need_empty, reverse) {
                    return Some(found);
                }
            }
            chosen.pop();
        }
        None
    }
    rec(set, k, 0, &mut Vec::with_capacity(k), need_empty, reverse)
}

/// First k-subset in convex position whose hull contains no other point of
/// the set, as counter-clockwise vertices.
pub fn find_k_hole<T: Coord>(set: &PointSet<T>, k: usize) -> Option<Vec<Point<T>>> {
    search_convex(set, k, true, false)
}

/// First k-subset in convex position (interior points of the set allowed),
/// as counter-clockwise vertices.
pub fn find_convex_kgon<T: Coord>(set: &PointSet<T>, k: usize) -> Option<Vec<Point<T>>> {
    search_convex(set, k, false, false)
}

#[doc(hidden)]
pub fn find_k_hole_alt<T: Coord>(set: &PointSet<T>, k: usize) -> Option<Vec<Point<T>>> {
    search_convex(set, k, true, true)
}

#[doc(hidden)]
pub fn find_convex_kgon_alt<T: Coord>(set: &PointSet<T>, k: usize) -> Option<Vec<Point<T>>> {
    search_convex(set, k, false, true)
}

fn pt_on_subset<T: Coord>(
    set: &PointSet<T>,
    subset: &[Point<T>],
    require_empty: bool,
) -> Option<PseudoTriangle<T>> {
    let hull = hull_indices(subset);
    if hull.len() != 3 {
        // every hull vertex of the subset is convex in any polygon on it, so
        // only subsets with a triangular hull can host a pseudo-triangle
        return None;
    }
    let corners = [subset[hull[0]], subset[hull[1]], subset[hull[2]]];
    let rest: Vec<Point<T>> = subset
        .iter()
        .copied()
        .filter(|p| !corners.contains(p))
        .collect();
    let m = rest.len();
    for code in 0..3usize.pow(m as u32) {
        let mut chains: [Vec<Point<T>>; 3] = [vec![], vec![], vec![]];
        let mut c = code;
        for &p in &rest {
            chains[c % 3].push(p);
            c /= 3;
        }
        let asg = ChainAssignment { corners, chains };
        if let Some(pt) = assemble_pseudo_triangle(&asg) {
            if !require_empty || pt.is_empty_in(set) {
                return Some(pt);
            }
        }
    }
    None
}

/// First pseudo-triangle with `l` vertices drawn from the set, optionally
/// required to be empty in it. Subsets are scanned in lexicographic index
/// order, chain assignments in a fixed radix order, so the result is
/// deterministic.
pub fn find_empty_pseudo_triangle<T: Coord>(
    set: &PointSet<T>,
    l: usize,
    require_empty: bool,
) -> Option<PseudoTriangle<T>> {
    if l < 3 || l > set.len() {
        return None;
    }
    for subset in (0..set.len()).combinations(l) {
        let pts: Vec<Point<T>> = subset.iter().map(|&i| set[i]).collect();
        if let Some(pt) = pt_on_subset(set, &pts, require_empty) {
            return Some(pt);
        }
    }
    None
}

#[doc(hidden)]
pub fn find_empty_pseudo_triangle_alt<T: Coord>(
    set: &PointSet<T>,
    l: usize,
    require_empty: bool,
) -> Option<PseudoTriangle<T>> {
    if l < 3 || l > set.len() {
        return None;
    }
    let order: Vec<usize> = (0..set.len()).rev().collect();
    for subset in order.into_iter().combinations(l) {
        let pts: Vec<Point<T>> = subset.iter().map(|&i| set[i]).collect();
        if let Some(pt) = pt_on_subset(set, &pts, require_empty) {
            return Some(pt);
        }
    }
    None
}

/// Number of k-point subsets in convex position; with `empty`, only subsets
/// whose hull holds no further set point are counted. The find functions
/// answer existence; the counts serve as violation totals when a randomized
/// search steers a configuration away from holes or k-gons.
pub fn count_convex_subsets<T: Coord>(set: &PointSet<T>, k: usize, empty: bool) -> usize {
    let n = set.len();
    if k < 3 || k > n {
        return 0;
    }
    (0..n)
        .combinations(k)
        .filter(|subset| {
            let sel: Vec<Point<T>> = subset.iter().map(|&i| set[i]).collect();
            convex_position(&sel)
                && (!empty || {
                    let hull = hull_of(&sel);
                    set.iter().all(|&p| !convex_contains_strict(&hull, p))
                })
        })
        .count()
}

/// Number of l-point subsets spanning at least one pseudo-triangle, with
/// `require_empty` restricting to pseudo-triangles empty in the whole set.
/// A subset counts once however many chain assignments it admits.
pub fn count_pseudo_triangle_subsets<T: Coord>(
    set: &PointSet<T>,
    l: usize,
    require_empty: bool,
) -> usize {
    if l < 3 || l > set.len() {
        return 0;
    }
    (0..set.len())
        .combinations(l)
        .filter(|subset| {
            let pts: Vec<Point<T>> = subset.iter().map(|&i| set[i]).collect();
            pt_on_subset(set, &pts, require_empty).is_some()
        })
        .count()
}

/// Largest number of set points strictly inside a triangle spanned by three
/// set points. A set is d-convex for every d at least this value.
pub fn lambda_convexity<T: Coord>(set: &PointSet<T>) -> usize {
    let pts = set.points();
    let n = pts.len();
    let mut best = 0;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                best = best.max(count_in_triangle(pts[i], pts[j], pts[k], pts));
            }
        }
    }
    best
}

/// For a set with triangular hull abc and an interior point p, the number of
/// interior points (other than p) in each of the triangles pab, pbc, pca, in
/// that order, with the hull counter-clockwise from its lexicographic
/// minimum. The three counts always sum to the remaining interior size.
pub fn splitter_type<T: Coord>(set: &PointSet<T>, p: Point<T>) -> Result<[usize; 3]> {
    let (hull, interior) = hull_partition(set)?;
    if hull.len() != 3 {
        return Err(Error::Precondition(format!(
            "splitter classification needs a triangular hull, got {} hull vertices",
            hull.len()
        )));
    }
    if !interior.iter().any(|&i| set[i] == p) {
        return Err(Error::Precondition(format!(
            "{p} is not an interior point of the set"
        )));
    }
    let (a, b, c) = (set[hull[0]], set[hull[1]], set[hull[2]]);
    let others: Vec<Point<T>> = interior
        .iter()
        .map(|&i| set[i])
        .filter(|&q| q != p)
        .collect();
    Ok([
        others.iter().filter(|&&q| in_triangle(p, a, b, q)).count(),
        others.iter().filter(|&&q| in_triangle(p, b, c, q)).count(),
        others.iter().filter(|&&q| in_triangle(p, c, a, q)).count(),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pseudo::PtClass;

    fn p(x: i64, y: i64) -> Point<i64> {
        Point::new(x, y)
    }

    fn pentagon_with_center() -> PointSet<i64> {
        PointSet::new(vec![
            p(0, 20),
            p(-19, 6),
            p(-12, -16),
            p(12, -16),
            p(19, 6),
            p(0, 0),
        ])
        .unwrap()
    }

    #[test]
    fn hole_search_respects_emptiness() {
        let s = pentagon_with_center();
        assert!(find_k_hole(&s, 5).is_none());
        let hole = find_k_hole(&s, 4).unwrap();
        assert_eq!(hole.len(), 4);
        assert!(convex_position(&hole));
        assert!(s.iter().all(|&q| !convex_contains_strict(&hole, q)));
    }

    #[test]
    fn kgon_search_ignores_interior() {
        let s = pentagon_with_center();
        let gon = find_convex_kgon(&s, 5).unwrap();
        assert_eq!(gon.len(), 5);
        assert!(find_convex_kgon(&s, 6).is_none());
    }

    #[test]
    fn alt_order_agrees_on_existence() {
        let s = pentagon_with_center();
        for k in 3..=6 {
            assert_eq!(find_k_hole(&s, k).is_some(), find_k_hole_alt(&s, k).is_some());
            assert_eq!(
                find_convex_kgon(&s, k).is_some(),
                find_convex_kgon_alt(&s, k).is_some()
            );
        }
    }

    #[test]
    fn pseudo_triangle_search() {
        let s = PointSet::new(vec![p(0, 0), p(12, 0), p(6, 10), p(6, 4)]).unwrap();
        let pt = find_empty_pseudo_triangle(&s, 4, true).unwrap();
        assert_eq!(pt.class, PtClass::Fan);
        assert_eq!(pt.len(), 4);
        // a convex-position set has no pseudo-triangle at all
        let conv = PointSet::new(vec![p(0, 0), p(10, 0), p(12, 9), p(5, 14), p(-3, 8)]).unwrap();
        assert!(find_empty_pseudo_triangle(&conv, 4, false).is_none());
        assert_eq!(
            find_empty_pseudo_triangle(&s, 4, true).is_some(),
            find_empty_pseudo_triangle_alt(&s, 4, true).is_some()
        );
    }

    #[test]
    fn counts_match_existence() {
        let s = pentagon_with_center();
        // the pentagon is the only 5-subset in convex position, and it is
        // not empty because the center sits inside it
        assert_eq!(count_convex_subsets(&s, 5, false), 1);
        assert_eq!(count_convex_subsets(&s, 5, true), 0);
        for k in 3..=6 {
            assert_eq!(count_convex_subsets(&s, k, true) > 0, find_k_hole(&s, k).is_some());
            assert_eq!(
                count_convex_subsets(&s, k, false) > 0,
                find_convex_kgon(&s, k).is_some()
            );
        }
        let fan = PointSet::new(vec![p(0, 0), p(12, 0), p(6, 10), p(6, 4)]).unwrap();
        assert_eq!(count_pseudo_triangle_subsets(&fan, 4, true), 1);
        let conv = PointSet::new(vec![p(0, 0), p(10, 0), p(12, 9), p(5, 14), p(-3, 8)]).unwrap();
        assert_eq!(count_pseudo_triangle_subsets(&conv, 4, false), 0);
        assert_eq!(
            count_pseudo_triangle_subsets(&s, 5, true) > 0,
            find_empty_pseudo_triangle(&s, 5, true).is_some()
        );
    }

    #[test]
    fn lambda_values() {
        let tri = PointSet::new(vec![p(0, 0), p(12, 0), p(6, 10), p(6, 4)]).unwrap();
        assert_eq!(lambda_convexity(&tri), 1);
        let conv = PointSet::new(vec![p(0, 0), p(10, 0), p(12, 9), p(5, 14), p(-3, 8)]).unwrap();
        assert_eq!(lambda_convexity(&conv), 0);
        assert_eq!(lambda_convexity(&pentagon_with_center()), 1);
    }

    #[test]
    fn splitter_counts() {
        let s = PointSet::new(vec![
            p(0, 0),
            p(12, 0),
            p(5, 10),
            p(6, 4),
            p(4, 2),
            p(7, 2),
            p(6, 7),
        ])
        .unwrap();
        assert_eq!(splitter_type(&s, p(6, 4)).unwrap(), [2, 1, 0]);
        assert!(splitter_type(&s, p(0, 0)).is_err());
        assert!(splitter_type(&s, p(1, 1)).is_err());
    }
}

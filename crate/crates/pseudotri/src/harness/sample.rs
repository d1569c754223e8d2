//! Reproducible generators for test configurations.
//!
//! Every generator is a pure function of `(seed, trial)`: the two indices
//! select an independent RNG stream, so parallel callers get identical
//! results regardless of scheduling. Generation is float-assisted where
//! convenient but every candidate passes the exact integer validation
//! (general position, hull size, class) before it is returned; `None` means
//! the rejection budget ran out, which is a reportable event, not a panic.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::extremal::{sample_general_position, trial_rng, GRID};
use crate::geom::hull_indices;
use crate::pseudo::PtClass;
use crate::{Point, PointSet, Polygon, PseudoTriangle};

/// General-position set of `n` points, uniform on the sampling grid.
pub fn general_position(n: usize, seed: u64, trial: u64) -> Option<PointSet> {
    let mut rng = trial_rng(seed, trial);
    draw(n, &mut rng)
}

fn draw(n: usize, rng: &mut ChaCha8Rng) -> Option<PointSet> {
    let raw = sample_general_position(n, rng)?;
    Some(PointSet::from_validated(raw))
}

/// `interior` points strictly inside a jittered triangle, plus its three
/// corners: a general-position set whose hull is exactly that triangle.
pub fn with_triangular_hull(interior: usize, seed: u64, trial: u64) -> Option<PointSet> {
    let mut rng = trial_rng(seed, trial);
    for _ in 0..200 {
        let j = |rng: &mut ChaCha8Rng| rng.gen_range(0..300);
        let corners = [
            Point::new(j(&mut rng), j(&mut rng)),
            Point::new(GRID - 1 - j(&mut rng), j(&mut rng)),
            Point::new(GRID / 2 + rng.gen_range(-600..=600), GRID - 1 - j(&mut rng)),
        ];
        if let Some(set) = fill_hull(&corners, interior, &mut rng) {
            return Some(set);
        }
    }
    None
}

/// A set of `n` points whose hull has exactly `h` vertices: `h` points in
/// convex position with `n - h` points sprinkled strictly inside.
pub fn with_hull_size(n: usize, h: usize, seed: u64, trial: u64) -> Option<PointSet> {
    if h < 3 || h > n {
        return None;
    }
    let mut rng = trial_rng(seed, trial);
    for _ in 0..200 {
        let Some(hull) = convex_ring(h, &mut rng) else { continue };
        if let Some(set) = fill_hull(&hull, n - h, &mut rng) {
            return Some(set);
        }
    }
    None
}

/// `m` points in convex position (hull size = m).
pub fn in_convex_position(m: usize, seed: u64, trial: u64) -> Option<PointSet> {
    let mut rng = trial_rng(seed, trial);
    for _ in 0..200 {
        let Some(ring) = convex_ring(m, &mut rng) else { continue };
        let set = PointSet::new(ring.clone()).ok()?;
        debug_assert_eq!(hull_indices(set.points()).len(), m);
        return Some(set);
    }
    None
}

/// Points on a jittered circle, validated to be in convex general position.
fn convex_ring(m: usize, rng: &mut ChaCha8Rng) -> Option<Vec<Point>> {
    'outer: for _ in 0..100 {
        let mut angles: Vec<f64> = (0..m)
            .map(|_| rng.gen::<f64>() * std::f64::consts::TAU)
            .collect();
        angles.sort_by(|a, b| a.partial_cmp(b).unwrap());
        // well-separated angles keep rounded points strictly convex
        for w in angles.windows(2) {
            if w[1] - w[0] < 0.12 {
                continue 'outer;
            }
        }
        if std::f64::consts::TAU - (angles[m - 1] - angles[0]) < 0.12 {
            continue 'outer;
        }
        let c = (GRID / 2) as f64;
        let r = rng.gen_range(0.30..0.46) * GRID as f64;
        let pts: Vec<Point> = angles
            .iter()
            .map(|a| Point::new((c + r * a.cos()).round() as i64, (c + r * a.sin()).round() as i64))
            .collect();
        let set = match PointSet::new(pts.clone()) {
            Ok(s) => s,
            Err(_) => continue,
        };
        if hull_indices(set.points()).len() == m {
            return Some(pts);
        }
    }
    None
}

/// Sprinkles `count` extra points strictly inside the hull polygon and
/// returns the validated union.
fn fill_hull(hull: &[Point], count: usize, rng: &mut ChaCha8Rng) -> Option<PointSet> {
    let poly = Polygon::new(hull.to_vec()).ok()?;
    let (lo_x, hi_x) = hull.iter().fold((i64::MAX, i64::MIN), |a, p| (a.0.min(p.x), a.1.max(p.x)));
    let (lo_y, hi_y) = hull.iter().fold((i64::MAX, i64::MIN), |a, p| (a.0.min(p.y), a.1.max(p.y)));
    let mut pts = hull.to_vec();
    let mut misses = 0;
    while pts.len() < hull.len() + count {
        let cand = Point::new(rng.gen_range(lo_x..=hi_x), rng.gen_range(lo_y..=hi_y));
        let ok = poly.contains_strict(cand)
            && !pts.contains(&cand)
            && pts.iter().enumerate().all(|(i, &p)| {
                pts[i + 1..]
                    .iter()
                    .all(|&q| !crate::geom::orientation(p, q, cand).is_collinear())
            });
        if ok {
            pts.push(cand);
        } else {
            misses += 1;
            if misses > 5_000 {
                return None;
            }
        }
    }
    let set = PointSet::new(pts).ok()?;
    if hull_indices(set.points()).len() == hull.len() {
        Some(set)
    } else {
        None
    }
}

/// An empty mountain with `l` vertices together with its ambient set (the
/// vertices themselves): base edge at the bottom, the two remaining chains
/// bent inward.
///
/// Needs `l >= 5`; smaller counts cannot have exactly one multi-vertex
/// chain.
pub fn empty_mountain(l: usize, seed: u64, trial: u64) -> Option<(PseudoTriangle, PointSet)> {
    if l < 5 {
        return None;
    }
    let q = l - 3;
    let (right, left) = (q - q / 2, q / 2);
    let mut rng = trial_rng(seed, trial);
    'attempt: for _ in 0..200 {
        let a = Point::new(rng.gen_range(100..400), rng.gen_range(50..250));
        let b = Point::new(rng.gen_range(3500..3900), rng.gen_range(50..250));
        let c = Point::new(rng.gen_range(1200..2600), rng.gen_range(2800..3800));

        // chain vertices sit on the corner-to-corner segment, pulled toward
        // the far base corner; the quadratic per-mille profile makes every
        // interior chain vertex reflex
        let bend = |from: Point, to: Point, toward: Point, count: usize, rng: &mut ChaCha8Rng| {
            let mut out = Vec::with_capacity(count);
            for j in 1..=count as i64 {
                let t = count as i64 + 1;
                let vx = from.x + (to.x - from.x) * j / t;
                let vy = from.y + (to.y - from.y) * j / t;
                let pull = 450 * j * (t - j) / (t * t / 2).max(1);
                let px = vx + (toward.x - vx) * pull / 1000 + rng.gen_range(-3..=3);
                let py = vy + (toward.y - vy) * pull / 1000 + rng.gen_range(-3..=3);
                out.push(Point::new(px, py));
            }
            out
        };

        let mut boundary = vec![a, b];
        boundary.extend(bend(b, c, a, right, &mut rng));
        boundary.push(c);
        boundary.extend(bend(c, a, b, left, &mut rng));

        let Ok(poly) = Polygon::new(boundary.clone()) else { continue };
        let Ok(pt) = PseudoTriangle::from_polygon(poly) else { continue };
        if pt.class != PtClass::Mountain {
            continue 'attempt;
        }
        let Ok(ambient) = PointSet::new(boundary) else { continue };
        if !pt.is_empty_in(&ambient) {
            continue 'attempt;
        }
        return Some((pt, ambient));
    }
    None
}

//! Seven-vertex constructions: a standard seven-vertex pseudo-triangle
//! seeded from the hull and five interior points, then a descent that
//! rearranges it until it is empty.
//!
//! Slot names for a standard seven-vertex pseudo-triangle throughout this
//! module: corners `a`, `b`, `c` counter-clockwise; lone chain points `p`
//! (between `a` and `b`) and `s` (between `c` and `a`); `q` and `r` the two
//! points of the long chain walked from `b` to `c`. Every rearrangement
//! below is expressed as a boundary cycle in these slots plus one or two
//! replacement points, and is accepted only after full validation: simple
//! polygon, exactly three convex vertices, and strictly fewer set points
//! inside than the current state.

use itertools::Itertools;

use crate::constructive::{
    hull_points, triangular_frame, try_cycle, Construction, DescentTrace,
};
use crate::error::{Error, Result};
use crate::geom::{
    in_triangle, in_triangle_h, nearest_angular_neighbor_in, orientation, ray_hull_exit,
    ray_ray_intersection, Point, PointSet,
};
use crate::pseudo::{
    assemble_pseudo_triangle, chain_order, shorten_mountain, standardize, ChainAssignment,
    PseudoTriangle, PtClass,
};
use crate::scalar::Coord;
use crate::search::find_empty_pseudo_triangle;

use super::six::seed_standard6;

/// Sweeps every distribution of `pts` over the three chains of a
/// pseudo-triangle with the given corners; first standard hit wins. The
/// returned count is over `set`.
fn arrangement_sweep<T: Coord>(
    corners: [Point<T>; 3],
    pts: &[Point<T>],
    set: &PointSet<T>,
) -> Option<(PseudoTriangle<T>, usize)> {
    let codes = 3usize.pow(pts.len() as u32);
    for code in 0..codes {
        let mut chains: [Vec<Point<T>>; 3] = [Vec::new(), Vec::new(), Vec::new()];
        let mut k = code;
        for &pt in pts {
            chains[k % 3].push(pt);
            k /= 3;
        }
        if chains.iter().any(|c| c.is_empty()) {
            continue;
        }
        let asg = ChainAssignment { corners, chains };
        if let Some(pt) = assemble_pseudo_triangle(&asg) {
            if pt.class == PtClass::Standard {
                let count = pt.polygon.interior_points(set).len();
                return Some((pt, count));
            }
        }
    }
    None
}

/// Splitter seeding: an interior point whose connections to the corners
/// leave one point in one corner region, one in another and two in the
/// third supports a direct seven-vertex arrangement, guided by where the
/// second point of the crowded region falls relative to the rays out of
/// the corners.
fn splitter_branch<T: Coord>(
    hull: &[Point<T>; 3],
    five: &[Point<T>],
    set: &PointSet<T>,
) -> Option<(PseudoTriangle<T>, usize)> {
    for rot in 0..3 {
        let a = hull[rot];
        let b = hull[(rot + 1) % 3];
        let c = hull[(rot + 2) % 3];
        for &p in five {
            let others: Vec<Point<T>> = five.iter().copied().filter(|&z| z != p).collect();
            let in_ab: Vec<Point<T>> =
                others.iter().copied().filter(|&z| in_triangle(p, a, b, z)).collect();
            let in_bc: Vec<Point<T>> =
                others.iter().copied().filter(|&z| in_triangle(p, b, c, z)).collect();
            let in_ca: Vec<Point<T>> =
                others.iter().copied().filter(|&z| in_triangle(p, c, a, z)).collect();
            if in_ab.len() != 1 || in_bc.len() != 2 || in_ca.len() != 1 {
                continue;
            }
            let s = in_ab[0];
            let t = in_ca[0];
            let Some(q) = nearest_angular_neighbor_in(b, c, &in_bc) else { continue };
            let r = if in_bc[0] == q { in_bc[1] } else { in_bc[0] };
            let frame = [a, b, c];
            let mut cands: Vec<[Point<T>; 7]> = Vec::new();
            let past_alpha = ray_hull_exit(c, q, &frame)
                .is_some_and(|al| in_triangle_h(b, q, &al, r));
            let past_gamma = ray_hull_exit(b, q, &frame)
                .is_some_and(|ga| in_triangle_h(c, q, &ga, r));
            if past_alpha || past_gamma {
                cands.push([a, s, b, q, r, c, p]);
                cands.push([a, s, b, r, q, c, p]);
            } else if ray_hull_exit(a, p, &frame)
                .is_some_and(|be| in_triangle_h(p, c, &be, r))
            {
                cands.push([a, s, b, q, c, r, p]);
            } else {
                cands.push([a, p, r, b, q, c, t]);
            }
            // the region tests guide the order; try the other shapes too
            cands.push([a, s, b, q, r, c, p]);
            cands.push([a, s, b, r, q, c, p]);
            cands.push([a, s, b, q, c, r, p]);
            cands.push([a, p, r, b, q, c, t]);
            for cand in cands {
                if let Some((pt, count)) = try_cycle(&cand, set) {
                    if pt.class == PtClass::Standard {
                        return Some((pt, count));
                    }
                }
            }
        }
    }
    None
}

/// Insertion seeding: build a standard six-vertex pseudo-triangle on the
/// corners and three of the five points, then either insert one of the
/// leftover points into a chain (when the six-vertex one is empty) or swap
/// towards a smaller one and retry.
fn insertion_branch<T: Coord>(
    hull: &[Point<T>; 3],
    five: &[Point<T>],
    set: &PointSet<T>,
) -> Option<(PseudoTriangle<T>, usize)> {
    let sprime = PointSet::from_validated(
        hull.iter().copied().chain(five.iter().copied()).collect(),
    );
    let corners = [hull[0], hull[1], hull[2]];
    let (mut p6, mut c6) = seed_standard6(&sprime, hull, five)?;
    loop {
        let mids: Vec<Point<T>> =
            p6.vertices().iter().copied().filter(|v| !hull.contains(v)).collect();
        let inner6 = p6.polygon.interior_points(&sprime);
        if inner6.is_empty() {
            for &u in five.iter().filter(|z| !p6.vertices().contains(z)) {
                let pool = [mids[0], mids[1], mids[2], u];
                if let Some(hit) = arrangement_sweep(corners, &pool, set) {
                    return Some(hit);
                }
            }
            return None;
        }
        let x = inner6[0];
        if let Some(hit) = arrangement_sweep(corners, &[mids[0], mids[1], mids[2], x], set) {
            return Some(hit);
        }
        let shrink = mids.iter().copied().combinations(2).find_map(|pair| {
            [pair[0], pair[1], x].iter().copied().permutations(3).find_map(|perm| {
                let cycle = [corners[0], perm[0], corners[1], perm[1], corners[2], perm[2]];
                let (pt, count) = try_cycle(&cycle, &sprime)?;
                (pt.class == PtClass::Standard && count < c6).then_some((pt, count))
            })
        });
        match shrink {
            Some((pt, count)) => {
                p6 = pt;
                c6 = count;
            }
            None => return None,
        }
    }
}

/// Standard seven-vertex pseudo-triangle on a set with a triangular hull
/// and at least five interior points. The result is not required to be
/// empty; it seeds the descent in [`empty_7pt_triangular`].
pub fn standard_7pt_triangular<T: Coord>(set: &PointSet<T>) -> Result<Construction<T>> {
    let (hull, interior) = triangular_frame(set)?;
    if interior.len() < 5 {
        return Err(Error::Precondition(format!(
            "need at least 5 interior points, got {}",
            interior.len()
        )));
    }
    // five interior points suffice; the rest only affect interior counts
    let five: Vec<Point<T>> = interior.iter().copied().take(5).collect();
    let mut trace = DescentTrace::new();
    if let Some((pt, count)) = splitter_branch(&hull, &five, set) {
        trace.push("seed-splitter", &pt, count);
        return Ok(Construction { result: pt, trace });
    }
    if let Some((pt, count)) = insertion_branch(&hull, &five, set) {
        trace.push("seed-insertion", &pt, count);
        return Ok(Construction { result: pt, trace });
    }
    trace.oracle_fallback = true;
    for four in five.iter().copied().combinations(4) {
        if let Some((pt, count)) = arrangement_sweep([hull[0], hull[1], hull[2]], &four, set) {
            trace.push("exhaustive-arrangement", &pt, count);
            return Ok(Construction { result: pt, trace });
        }
    }
    Err(Error::CertificationFailed(
        "no standard seven-vertex arrangement on hull and five interior points".into(),
    ))
}

#[derive(Clone, Copy)]
struct Lab<T: Coord> {
    a: Point<T>,
    p: Point<T>,
    b: Point<T>,
    q: Point<T>,
    r: Point<T>,
    c: Point<T>,
    s: Point<T>,
}

/// Both slot labelings of a standard seven-vertex pseudo-triangle: the
/// counter-clockwise one and its mirror (which swaps p with s, b with c
/// and q with r), so each one-sided rearrangement is tried on both sides.
fn labelings<T: Coord>(pt: &PseudoTriangle<T>) -> Option<[Lab<T>; 2]> {
    if pt.class != PtClass::Standard || pt.len() != 7 {
        return None;
    }
    let k = (0..3).find(|&i| pt.chains[i].len() == 4)?;
    let b = pt.corners[k];
    let c = pt.corners[(k + 1) % 3];
    let a = pt.corners[(k + 2) % 3];
    let q = pt.chains[k][1];
    let r = pt.chains[k][2];
    let s = pt.chains[(k + 1) % 3][1];
    let p = pt.chains[(k + 2) % 3][1];
    Some([
        Lab { a, p, b, q, r, c, s },
        Lab { a, p: s, b: c, q: r, r: q, c: b, s: p },
    ])
}

/// One-point rearrangements: each drops a single boundary vertex in favor
/// of `x` and reads off a new boundary cycle in the slot names.
fn single_forms<T: Coord>(l: &Lab<T>, x: Point<T>) -> [(&'static str, [Point<T>; 7]); 10] {
    let Lab { a, p, b, q, r, c, s } = *l;
    [
        ("split-long-chain", [a, p, q, x, r, c, s]),
        ("swap-p", [a, x, b, q, r, c, s]),
        ("swap-s", [a, p, b, q, r, c, x]),
        ("shift-long-chain", [a, p, q, r, c, x, s]),
        ("wedge-before-b", [a, p, x, b, q, r, s]),
        ("swap-c", [a, p, b, q, r, x, s]),
        ("swap-r", [a, p, b, q, x, c, s]),
        ("swap-q", [a, p, b, x, r, c, s]),
        ("rotate-drop-p", [a, q, b, r, c, x, s]),
        ("rotate-swap", [a, q, b, x, r, c, s]),
    ]
}

/// Interior points of the hull arc strictly between `u` and `v` over the
/// given region points, in chain order from `u` to `v`.
fn chain_between<T: Coord>(
    u: Point<T>,
    v: Point<T>,
    pts: &[Point<T>],
) -> Option<Vec<Point<T>>> {
    if pts.is_empty() {
        return None;
    }
    let mut all: Vec<Point<T>> = vec![u, v];
    all.extend(pts.iter().copied().filter(|&z| z != u && z != v));
    let mids: Vec<Point<T>> =
        hull_points(&all).into_iter().filter(|&z| z != u && z != v).collect();
    let chain = chain_order(u, v, &mids)?;
    Some(chain[1..chain.len() - 1].to_vec())
}

/// Rearrangements keyed to the geometry around the long chain: the meeting
/// point of the rays through it, the points beyond its edge, and the
/// concave chains those points form.
fn guided_forms<T: Coord>(
    l: &Lab<T>,
    set: &PointSet<T>,
    inner: &[Point<T>],
) -> Vec<(&'static str, Vec<Point<T>>, bool)> {
    let Lab { a, p, b, q, r, c, s } = *l;
    let mut out: Vec<(&'static str, Vec<Point<T>>, bool)> = Vec::new();
    if let Some(beta) = ray_ray_intersection(b, q, c, r) {
        let far: Vec<Point<T>> =
            set.iter().copied().filter(|&z| in_triangle_h(q, r, &beta, z)).collect();
        if let Some(&z) = far.first() {
            for &x in inner {
                out.push(("long-chain-pair-left", vec![a, p, x, b, q, z, r], false));
                out.push(("long-chain-pair-right", vec![a, q, z, r, c, x, s], false));
            }
        }
        if let Some(mid_u) = chain_between(q, r, &far) {
            if mid_u.len() == 1 {
                let u = mid_u[0];
                out.push(("bulge-swap", vec![a, q, b, u, r, c, s], false));
                let band: Vec<Point<T>> = set
                    .iter()
                    .copied()
                    .filter(|&z| in_triangle_h(b, r, &beta, z))
                    .collect();
                if let Some(mid_v) = chain_between(b, r, &band) {
                    if mid_v.len() == 2 && mid_v.contains(&u) {
                        let v = if mid_v[0] == u { mid_v[1] } else { mid_v[0] };
                        out.push(("inner-bridge", vec![a, q, v, u, r, c, s], false));
                        out.push(("inner-bridge-alt", vec![a, v, b, u, r, c, s], false));
                        let pocket: Vec<Point<T>> = set
                            .iter()
                            .copied()
                            .filter(|&z| in_triangle(b, u, v, z))
                            .collect();
                        for &xh in &pocket {
                            for &yh in pocket.iter().chain(std::iter::once(&b)) {
                                if yh != xh {
                                    out.push((
                                        "pocket-pair",
                                        vec![a, xh, yh, u, r, c, s],
                                        true,
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let base: Vec<Point<T>> =
        set.iter().copied().filter(|&z| in_triangle(b, q, r, z)).collect();
    if let Some(mid_y) = chain_between(b, r, &base) {
        if mid_y.len() == 1 {
            let y = mid_y[0];
            for &x in inner {
                out.push(("hug-base", vec![b, y, r, c, x, s, q], false));
            }
        }
    }
    out
}

/// Empty mountains that the descent can harvest directly: concave chains
/// of at least two points beyond the long chain, below it, or across the
/// band to the ray meeting point, each closed off through the remaining
/// slots. Validation and an emptiness check decide which ones count.
fn terminal_mountains<T: Coord>(
    l: &Lab<T>,
    set: &PointSet<T>,
    inner: &[Point<T>],
) -> Vec<Vec<Point<T>>> {
    let Lab { a, p, b, q, r, c, s: _ } = *l;
    let mut out: Vec<Vec<Point<T>>> = Vec::new();
    if let Some(beta) = ray_ray_intersection(b, q, c, r) {
        let far: Vec<Point<T>> =
            set.iter().copied().filter(|&z| in_triangle_h(q, r, &beta, z)).collect();
        if let Some(mid_u) = chain_between(q, r, &far) {
            if mid_u.len() >= 2 {
                let mut cyc = vec![a, p, b, q];
                cyc.extend(&mid_u);
                cyc.push(r);
                out.push(cyc);
                let mut rev = vec![a, p, b, r];
                rev.extend(mid_u.iter().rev());
                rev.push(q);
                out.push(rev);
            }
        }
        let band: Vec<Point<T>> =
            set.iter().copied().filter(|&z| in_triangle_h(b, r, &beta, z)).collect();
        if let Some(mid_v) = chain_between(b, r, &band) {
            if mid_v.len() >= 2 {
                let mut cyc = vec![a, q, b];
                cyc.extend(&mid_v);
                cyc.push(r);
                out.push(cyc);
                let mut rev = vec![a, q, r];
                rev.extend(mid_v.iter().rev());
                rev.push(b);
                out.push(rev);
            }
        }
    }
    let base: Vec<Point<T>> =
        set.iter().copied().filter(|&z| in_triangle(b, q, r, z)).collect();
    if let Some(mid_y) = chain_between(b, r, &base) {
        if mid_y.len() >= 2 {
            let side = orientation(b, q, a);
            let above: Vec<Point<T>> =
                inner.iter().copied().filter(|&z| orientation(b, q, z) == side).collect();
            if let Some(x0) = nearest_angular_neighbor_in(b, q, &above) {
                let mut cyc = vec![b, q, x0, c, r];
                cyc.extend(mid_y.iter().rev());
                out.push(cyc);
                let mut fwd = vec![b, q, x0, c, r];
                fwd.extend(&mid_y);
                out.push(fwd);
            }
        }
    }
    out
}

enum Verdict<T: Coord> {
    Empty(PseudoTriangle<T>),
    Advance(PseudoTriangle<T>, usize),
    No,
}

/// Accepts a candidate when it is empty, or when it is a standard
/// seven-vertex pseudo-triangle (possibly after restoring the standard
/// shape) with strictly fewer interior points than the current state.
fn verdict_for<T: Coord>(
    pt: PseudoTriangle<T>,
    c2: usize,
    set: &PointSet<T>,
    count: usize,
) -> Verdict<T> {
    if c2 == 0 {
        return Verdict::Empty(pt);
    }
    if c2 >= count {
        return Verdict::No;
    }
    if pt.class == PtClass::Standard {
        return Verdict::Advance(pt, c2);
    }
    if let Ok(std) = standardize(&pt, None) {
        let c3 = std.polygon.interior_points(set).len();
        if c3 == 0 {
            return Verdict::Empty(std);
        }
        if c3 < count {
            return Verdict::Advance(std, c3);
        }
    }
    Verdict::No
}

fn consider<T: Coord>(cycle: &[Point<T>], set: &PointSet<T>, count: usize) -> Verdict<T> {
    let Some((pt, c2)) = try_cycle(cycle, set) else { return Verdict::No };
    verdict_for(pt, c2, set, count)
}

/// Completion of the named forms: every pseudo-triangle on the current
/// vertices with one of them swapped for the inside point `x`, with the
/// chains redistributed from scratch. Shapes the named forms miss are
/// still one-swap local moves, so the descent stays constructive.
fn swap_sweep<T: Coord>(
    current: &PseudoTriangle<T>,
    x: Point<T>,
    set: &PointSet<T>,
    count: usize,
) -> Verdict<T> {
    let verts = current.vertices();
    for drop in 0..verts.len() {
        let mut pool: Vec<Point<T>> = verts
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != drop)
            .map(|(_, &v)| v)
            .collect();
        pool.push(x);
        let hull_idx = crate::geom::hull_indices(&pool);
        if hull_idx.len() != 3 {
            continue;
        }
        let corners = [pool[hull_idx[0]], pool[hull_idx[1]], pool[hull_idx[2]]];
        let mids: Vec<Point<T>> =
            pool.iter().copied().filter(|v| !corners.contains(v)).collect();
        for code in 0..3usize.pow(mids.len() as u32) {
            let mut chains: [Vec<Point<T>>; 3] = [Vec::new(), Vec::new(), Vec::new()];
            let mut k = code;
            for &m in &mids {
                chains[k % 3].push(m);
                k /= 3;
            }
            let asg = ChainAssignment { corners, chains };
            if let Some(pt) = assemble_pseudo_triangle(&asg) {
                let c2 = pt.polygon.interior_points(set).len();
                match verdict_for(pt, c2, set, count) {
                    Verdict::No => {}
                    hit => return hit,
                }
            }
        }
    }
    Verdict::No
}

/// Empty seven-vertex pseudo-triangle in a set with a triangular hull and
/// at least five interior points, found by descent from a standard seed.
/// The exhaustive search is consulted only if every rearrangement stalls,
/// and that is flagged on the trace.
pub fn empty_7pt_triangular<T: Coord>(set: &PointSet<T>) -> Result<Construction<T>> {
    let (_, interior) = triangular_frame(set)?;
    if interior.len() < 5 {
        return Err(Error::Precondition(format!(
            "need at least 5 interior points, got {}",
            interior.len()
        )));
    }
    let seeded = standard_7pt_triangular(set)?;
    let mut trace = seeded.trace;
    let mut current = seeded.result;
    let mut count = current.polygon.interior_points(set).len();
    while count > 0 {
        let labs = labelings(&current).expect("descent state is standard");
        let inner = current.polygon.interior_points(set);
        let mut advanced = false;
        'step: for l in &labs {
            for &x in &inner {
                for (name, cycle) in single_forms(l, x) {
                    match consider(&cycle, set, count) {
                        Verdict::Empty(pt) => {
                            trace.push(name, &pt, 0);
                            return Ok(Construction { result: pt, trace });
                        }
                        Verdict::Advance(pt, c2) => {
                            trace.push(name, &pt, c2);
                            current = pt;
                            count = c2;
                            advanced = true;
                            break 'step;
                        }
                        Verdict::No => {}
                    }
                }
            }
            for (name, cycle, flagged) in guided_forms(l, set, &inner) {
                match consider(&cycle, set, count) {
                    Verdict::Empty(pt) => {
                        if flagged {
                            trace.push_flagged(name, &pt, 0);
                        } else {
                            trace.push(name, &pt, 0);
                        }
                        return Ok(Construction { result: pt, trace });
                    }
                    Verdict::Advance(pt, c2) => {
                        if flagged {
                            trace.push_flagged(name, &pt, c2);
                        } else {
                            trace.push(name, &pt, c2);
                        }
                        current = pt;
                        count = c2;
                        advanced = true;
                        break 'step;
                    }
                    Verdict::No => {}
                }
            }
            for cycle in terminal_mountains(l, set, &inner) {
                if let Some((mt, 0)) = try_cycle(&cycle, set) {
                    if mt.class == PtClass::Mountain && mt.len() >= 7 {
                        trace.push("terminal-mountain", &mt, 0);
                        let seven = shorten_mountain(&mt, 7, set)?;
                        trace.push("shorten", &seven, 0);
                        return Ok(Construction { result: seven, trace });
                    }
                }
            }
        }
        if !advanced {
            'sweep: for &x in &inner {
                match swap_sweep(&current, x, set, count) {
                    Verdict::Empty(pt) => {
                        trace.push("swap-sweep", &pt, 0);
                        return Ok(Construction { result: pt, trace });
                    }
                    Verdict::Advance(pt, c2) => {
                        trace.push("swap-sweep", &pt, c2);
                        current = pt;
                        count = c2;
                        advanced = true;
                        break 'sweep;
                    }
                    Verdict::No => {}
                }
            }
        }
        if !advanced {
            trace.oracle_fallback = true;
            if let Some(pt) = find_empty_pseudo_triangle(set, 7, true) {
                trace.push("oracle-search", &pt, 0);
                return Ok(Construction { result: pt, trace });
            }
            return Err(Error::CertificationFailed(
                "seven-vertex descent stalled with no empty arrangement".into(),
            ));
        }
    }
    Ok(Construction { result: current, trace })
}

//! Regenerates the witness fixtures under `fixtures/`.
//!
//! Every fixture is found deterministically (fixed seeds throughout), then
//! certified against its claims before being written, so a successful run
//! is also a from-scratch proof of every stored lower bound. Existing files
//! are overwritten. Expect several minutes of wall time; the annealing
//! hunts for the larger witnesses dominate.

use std::path::PathBuf;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use pseudotri::extremal::{witness_search, Claim};
use pseudotri::harness::sample::general_position;
use pseudotri::io::write_point_set;
use pseudotri::search::{count_convex_subsets, count_pseudo_triangle_subsets};
use pseudotri::{CertifiedConfig, Point, PointSet};

const SPAN: i64 = 4096;

fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn freeze(name: &str, cfg: &CertifiedConfig) {
    let path = fixtures_dir().join(name);
    write_point_set(&path, cfg.points.points(), &cfg.certificates).expect("write fixture");
    println!("wrote {} ({} points)", path.display(), cfg.points.len());
}

/// Hand-placed sets for the tiny cells, certified like everything else.
fn fixed_sets() {
    // triangular hull, one interior point: no 4 points in convex position
    let tri = PointSet::new(vec![
        Point::new(40, 30),
        Point::new(4000, 90),
        Point::new(2100, 3900),
        Point::new(2000, 1300),
    ])
    .unwrap();
    let cfg = CertifiedConfig::certify(
        tri,
        &[Claim::HullSize(3), Claim::NoHole(4), Claim::NoConvexGon(4)],
    )
    .unwrap();
    freeze("n4-triangular-hull.txt", &cfg);

    // convex position: no pseudo-triangle of any size
    let quad = PointSet::new(vec![
        Point::new(100, 200),
        Point::new(3900, 60),
        Point::new(4000, 3800),
        Point::new(200, 3950),
    ])
    .unwrap();
    let cfg = CertifiedConfig::certify(quad, &[Claim::HullSize(4), Claim::NoPt(4)]).unwrap();
    freeze("n4-convex.txt", &cfg);

    let pent = PointSet::new(vec![
        Point::new(2000, 70),
        Point::new(3960, 1480),
        Point::new(3230, 3820),
        Point::new(790, 3840),
        Point::new(50, 1500),
    ])
    .unwrap();
    let cfg = CertifiedConfig::certify(pent, &[Claim::HullSize(5), Claim::NoPt(4)]).unwrap();
    freeze("n5-convex.txt", &cfg);
}

fn searched(name: &str, n: usize, claims: &[Claim], budget: usize) {
    match witness_search::<i64>(n, claims, budget, 0) {
        Ok(Some(cfg)) => freeze(name, &cfg),
        Ok(None) => println!("NOT FOUND: {name} within {budget} trials"),
        Err(e) => println!("ERROR: {name}: {e}"),
    }
}

/// Simulated annealing over point configurations. Proposes single-point
/// moves (local jitter with an occasional teleport), keeps candidates in
/// general position and cools toward pure descent; returns the first
/// configuration the cost function scores zero. The caller still certifies
/// the result, the cost only steers.
fn anneal(
    n: usize,
    chain: u64,
    iters: usize,
    start: Option<PointSet>,
    cost: &(impl Fn(&PointSet) -> u64 + Sync),
) -> Option<PointSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xa11e_0000 + chain);
    let mut cur = start.or_else(|| general_position(n, 0x57a7 + chain, 0))?;
    let mut cur_cost = cost(&cur);
    for it in 0..iters {
        if cur_cost == 0 {
            return Some(cur);
        }
        let frac = it as f64 / iters as f64;
        let radius = ((SPAN as f64 / 4.0) * (1.0 - frac)).max(16.0) as i64;
        let temp = 2.5 * (1.0 - frac) + 0.05;
        let i = rng.gen_range(0..n);
        let mut pts = cur.points().to_vec();
        let p = pts[i];
        pts[i] = if rng.gen_bool(0.1) {
            Point::new(rng.gen_range(0..SPAN), rng.gen_range(0..SPAN))
        } else {
            Point::new(
                (p.x + rng.gen_range(-radius..=radius)).clamp(0, SPAN - 1),
                (p.y + rng.gen_range(-radius..=radius)).clamp(0, SPAN - 1),
            )
        };
        if pts[i] == p {
            continue;
        }
        let Ok(cand) = PointSet::new(pts) else { continue };
        let c = cost(&cand);
        let delta = c as f64 - cur_cost as f64;
        if delta <= 0.0 || rng.gen_bool((-delta / temp).exp()) {
            cur = cand;
            cur_cost = c;
        }
    }
    (cur_cost == 0).then_some(cur)
}

fn anneal_first(
    n: usize,
    chains: u64,
    iters: usize,
    starts: &[Option<PointSet>],
    cost: impl Fn(&PointSet) -> u64 + Sync,
) -> Option<PointSet> {
    (0..chains)
        .into_par_iter()
        .find_map_first(|chain| {
            let start = starts.get(chain as usize).cloned().flatten();
            anneal(n, chain, iters, start, &cost)
        })
}

/// Convex hexagons dominate the cost until none are left, then the
/// pseudo-triangle count takes over. The offset keeps the two regimes
/// strictly ordered.
fn hexagon_then_pt_cost(l: usize) -> impl Fn(&PointSet) -> u64 + Sync {
    move |s: &PointSet| {
        let c6 = count_convex_subsets(s, 6, false) as u64;
        if c6 > 0 {
            1_000_000 + c6
        } else {
            count_pseudo_triangle_subsets(s, l, false) as u64
        }
    }
}

/// 9 points with no 5-hole and no empty 8-pseudo-triangle.
fn hunt_n9() {
    let cost = |s: &PointSet| {
        (count_convex_subsets(s, 5, true) + count_pseudo_triangle_subsets(s, 8, true)) as u64
    };
    match anneal_first(9, 8, 30_000, &[], cost) {
        Some(set) => {
            let cfg = CertifiedConfig::certify(set, &[Claim::NoHole(5), Claim::NoEmptyPt(8)])
                .expect("zero-cost configuration must certify");
            freeze("n9-no-5hole-no-empty-8pt.txt", &cfg);
        }
        None => println!("NOT FOUND: n9-no-5hole-no-empty-8pt.txt"),
    }
}

/// 16 points with no convex hexagon and no 8-pseudo-triangle. One more
/// point forces a convex hexagon, so the hexagon-free part of the search
/// space is thin; annealing against the subset counts finds it reliably
/// where uniform sampling has no chance.
fn hunt_n16() -> Option<PointSet> {
    let found = anneal_first(16, 24, 40_000, &[], hexagon_then_pt_cost(8));
    match &found {
        Some(set) => {
            let cfg =
                CertifiedConfig::certify(set.clone(), &[Claim::NoConvexGon(6), Claim::NoPt(8)])
                    .expect("zero-cost configuration must certify");
            freeze("n16-no-convex-6gon-no-8pt.txt", &cfg);
        }
        None => println!("NOT FOUND: n16-no-convex-6gon-no-8pt.txt"),
    }
    found
}

/// 15 points with no convex hexagon and no 7-pseudo-triangle. The first
/// chains start from the 16-point witness with one point removed (already
/// hexagon-free, only the pseudo-triangle count left to clear), the rest
/// from scratch.
fn hunt_n15(sixteen: Option<&PointSet>) {
    let starts: Vec<Option<PointSet>> = (0..24)
        .map(|i| {
            let six = sixteen?;
            (i < six.len()).then(|| {
                let mut pts = six.points().to_vec();
                pts.remove(i);
                PointSet::new(pts).expect("subset of a general-position set")
            })
        })
        .collect();
    match anneal_first(15, 24, 40_000, &starts, hexagon_then_pt_cost(7)) {
        Some(set) => {
            let cfg = CertifiedConfig::certify(set, &[Claim::NoConvexGon(6), Claim::NoPt(7)])
                .expect("zero-cost configuration must certify");
            freeze("n15-no-convex-6gon-no-7pt.txt", &cfg);
        }
        None => println!("NOT FOUND: n15-no-convex-6gon-no-7pt.txt"),
    }
}

fn main() {
    std::fs::create_dir_all(fixtures_dir()).expect("create fixtures dir");
    fixed_sets();

    searched(
        "n6-lambda1.txt",
        6,
        &[Claim::LambdaAtMost(1), Claim::NoHole(5), Claim::NoEmptyPt(5)],
        500_000,
    );
    searched(
        "n7-four-interior-no-7pt.txt",
        7,
        &[Claim::HullSize(3), Claim::NoPt(7)],
        500_000,
    );
    searched(
        "n8-no-5hole-no-empty-67pt.txt",
        8,
        &[Claim::NoHole(5), Claim::NoEmptyPt(6), Claim::NoEmptyPt(7)],
        4_000_000,
    );

    hunt_n9();
    let sixteen = hunt_n16();
    hunt_n15(sixteen.as_ref());
}

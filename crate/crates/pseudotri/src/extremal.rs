//! Extremal configurations: layered concave-column sets that stay λ-convex
//! while avoiding large convex polygons, and randomized search for small
//! witness configurations.
//!
//! Nothing here is trusted by construction. Every generator runs the search
//! oracles over its output and returns a [`CertifiedConfig`] whose claims
//! have all been re-verified; a claim list is therefore re-checkable offline
//! from the points alone.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geom::{hull_indices, orientation, Point, PointSet};
use crate::scalar::Coord;
use crate::search::{find_convex_kgon, find_empty_pseudo_triangle, find_k_hole, lambda_convexity};

/// A falsifiable statement about a point set, decidable by the search
/// oracles. Claims are the currency of certification: fixture files and
/// generated configurations carry them, and [`Claim::holds`] re-derives each
/// one from the points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Claim {
    /// No empty convex polygon with this many vertices.
    NoHole(usize),
    /// No convex polygon with this many vertices, empty or not.
    NoConvexGon(usize),
    /// No empty pseudo-triangle with this many vertices.
    NoEmptyPt(usize),
    /// No pseudo-triangle with this many vertices at all.
    NoPt(usize),
    /// Every triangle spanned by three set points has at most this many set
    /// points strictly inside.
    LambdaAtMost(usize),
    /// The convex hull has exactly this many vertices.
    HullSize(usize),
}

impl Claim {
    /// Re-derives the claim from the points. Never consults stored state.
    pub fn holds<T: Coord>(&self, set: &PointSet<T>) -> bool {
        match *self {
            Claim::NoHole(k) => find_k_hole(set, k).is_none(),
            Claim::NoConvexGon(k) => find_convex_kgon(set, k).is_none(),
            Claim::NoEmptyPt(l) => find_empty_pseudo_triangle(set, l, true).is_none(),
            Claim::NoPt(l) => find_empty_pseudo_triangle(set, l, false).is_none(),
            Claim::LambdaAtMost(l) => lambda_convexity(set) <= l,
            Claim::HullSize(h) => hull_indices(set.points()).len() == h,
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Claim::NoHole(k) => write!(f, "no-{k}-hole"),
            Claim::NoConvexGon(k) => write!(f, "no-convex-{k}-gon"),
            Claim::NoEmptyPt(l) => write!(f, "no-empty-{l}-pt"),
            Claim::NoPt(l) => write!(f, "no-{l}-pt"),
            Claim::LambdaAtMost(l) => write!(f, "lambda<={l}"),
            Claim::HullSize(h) => write!(f, "hull={h}"),
        }
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Claim> {
        let bad = || Error::Parse(format!("unrecognized claim {s:?}"));
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        if let Some(rest) = s.strip_prefix("lambda<=") {
            return Ok(Claim::LambdaAtMost(num(rest)?));
        }
        if let Some(rest) = s.strip_prefix("hull=") {
            return Ok(Claim::HullSize(num(rest)?));
        }
        let parts: Vec<&str> = s.split('-').collect();
        match parts.as_slice() {
            ["no", n, "hole"] => Ok(Claim::NoHole(num(n)?)),
            ["no", "convex", n, "gon"] => Ok(Claim::NoConvexGon(num(n)?)),
            ["no", "empty", n, "pt"] => Ok(Claim::NoEmptyPt(num(n)?)),
            ["no", n, "pt"] => Ok(Claim::NoPt(num(n)?)),
            _ => Err(bad()),
        }
    }
}

impl serde::Serialize for Claim {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Claim {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Claim, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A point set bundled with claims that were re-verified against it when the
/// value was created.
#[derive(Debug, Clone, serde::Serialize)]
pub struct CertifiedConfig<T: Coord + serde::Serialize> {
    pub points: PointSet<T>,
    pub certificates: Vec<Claim>,
}

impl<T: Coord + serde::Serialize> CertifiedConfig<T> {
    /// Verifies every claim against the points; the first failure aborts.
    pub fn certify(points: PointSet<T>, claims: &[Claim]) -> Result<Self> {
        for c in claims {
            if !c.holds(&points) {
                return Err(Error::CertificationFailed(format!(
                    "claim {c} does not hold on the {}-point set",
                    points.len()
                )));
            }
        }
        Ok(CertifiedConfig { points, certificates: claims.to_vec() })
    }

    /// Re-runs every stored claim. True means the certificate list is still
    /// honest; the stored claims carry no trust of their own.
    pub fn recheck(&self) -> bool {
        self.certificates.iter().all(|c| c.holds(&self.points))
    }
}

/// The 1-convex threshold for ν-holes: 2^((ν+1)/2) − 1 for odd ν, and
/// (3/2)·2^(ν/2) − 1 for even ν.
pub fn m_value(nu: u32) -> Result<u64> {
    if nu < 3 {
        return Err(Error::OutOfRange(format!("m_value needs an argument >= 3, got {nu}")));
    }
    if nu > 124 {
        return Err(Error::OutOfRange(format!("m_value({nu}) exceeds 64-bit range")));
    }
    Ok(if nu % 2 == 1 {
        (1u64 << nu.div_ceil(2)) - 1
    } else {
        3 * (1u64 << (nu / 2 - 1)) - 1
    })
}

/// Parameters of the layered concave-column construction. `k` is the convex
/// polygon size to avoid, `level` the convexity budget: the output has
/// (k−3)(level+1)+2 points, is level-convex and has no convex k-gon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct BFTParams {
    pub k: usize,
    pub level: usize,
    /// Horizontal spacing of the base arc; also its height unit.
    pub scale: i64,
    /// Seed for the integer jitter applied to every generated coordinate.
    pub jitter_seed: u64,
}

impl BFTParams {
    pub fn new(k: usize, level: usize) -> Self {
        BFTParams { k, level, scale: 4096, jitter_seed: 0 }
    }

    pub fn target_size(&self) -> usize {
        (self.k - 3) * (self.level + 1) + 2
    }

    fn validate(&self) -> Result<()> {
        if self.k < 4 {
            return Err(Error::Precondition(format!(
                "construction needs k >= 4, got k={}",
                self.k
            )));
        }
        if 2 * self.level >= self.k {
            return Err(Error::Precondition(format!(
                "construction needs level < k/2, got k={} level={}",
                self.k, self.level
            )));
        }
        if self.scale < 64 {
            return Err(Error::Precondition(format!(
                "scale must be at least 64, got {}",
                self.scale
            )));
        }
        Ok(())
    }
}

/// One unjittered candidate realization.
///
/// Base: k−1 points on a concave-down integer parabola. Under the i-th
/// interior base point hangs a column of `sizes[i−1]` points marching toward
/// one end of the arc (left end for the left half of the columns, right end
/// for the rest) along the chord to that end, sagging below it by a strictly
/// concave profile. Each column stays inside the triangle of its base point
/// and its two base neighbors and inside the triangle of its base point and
/// the two arc ends; a convex polygon can therefore never collect more than
/// k−1 of the points, while no triangle swallows more points than the
/// longest column is long.
fn layered_candidate(
    k: usize,
    sizes: &[usize],
    scale: i64,
    rng: &mut ChaCha8Rng,
    jitter: i64,
) -> Vec<Point<i64>> {
    let nb = k - 1;
    let x = scale as i128;
    let h = x;
    let mut jit = |v: i128| -> i64 {
        let j = if jitter > 0 { rng.gen_range(-jitter..=jitter) } else { 0 };
        v as i64 + j
    };

    let base: Vec<(i128, i128)> = (0..nb as i128)
        .map(|i| (i * x, i * (nb as i128 - 1 - i) * h))
        .collect();
    let mut pts: Vec<Point<i64>> = Vec::new();
    for &(bx, by) in &base {
        pts.push(Point::new(jit(bx), jit(by)));
    }

    for i in 1..nb - 1 {
        let lv = sizes[i - 1] as i128;
        if lv == 0 {
            continue;
        }
        let sag_unit = (h / (4 * lv * (lv + 2))).max(1);
        let toward_left = 2 * i < nb;
        let anchor = if toward_left { base[0] } else { base[nb - 1] };
        let (bx, by) = base[i];
        let (dx, dy) = (anchor.0 - bx, anchor.1 - by);
        let adx = dx.abs();
        // Chord slope toward the anchor is cap·h/x; limiting the horizontal
        // reach to x/(2·cap) caps the drop along the chord at h/2, keeping
        // the column above every chord of the base arc.
        let cap = if toward_left { nb as i128 - 1 - i as i128 } else { i as i128 };
        let reach = x / (2 * cap.max(1));
        for j in 1..=lv {
            let along = j * reach / (lv + 1);
            let px = bx + dx * along / adx;
            let py = by + dy * along / adx - sag_unit * j * (2 * lv + 2 - j);
            pts.push(Point::new(jit(px), jit(py)));
        }
    }
    pts
}

/// Builds a layered concave-column configuration with a chosen size for each
/// of the k−3 columns and certifies the given claims against it.
///
/// Generation is cheap and certification is the authority: candidates are
/// drawn with fresh jitter (shrinking every 16 failures) until general
/// position and every claim check out, up to 64 attempts.
pub fn layered_config<T: Coord + serde::Serialize>(
    k: usize,
    sizes: &[usize],
    scale: i64,
    jitter_seed: u64,
    claims: &[Claim],
) -> Result<CertifiedConfig<T>> {
    if k < 4 {
        return Err(Error::Precondition(format!(
            "layered construction needs k >= 4, got k={k}"
        )));
    }
    if sizes.len() != k - 3 {
        return Err(Error::Precondition(format!(
            "expected {} column sizes for k={k}, got {}",
            k - 3,
            sizes.len()
        )));
    }
    if scale < 64 {
        return Err(Error::Precondition(format!("scale must be at least 64, got {scale}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(jitter_seed);
    let mut jitter = (scale / 512).max(2);
    let mut last_err = None;
    for attempt in 0..64 {
        if attempt > 0 && attempt % 16 == 0 {
            jitter = (jitter / 2).max(1);
        }
        let raw = layered_candidate(k, sizes, scale, &mut rng, jitter);
        let cast: Option<Vec<Point<T>>> = raw
            .iter()
            .map(|p| Some(Point::new(T::from(p.x)?, T::from(p.y)?)))
            .collect();
        let Some(cast) = cast else {
            return Err(Error::CoordinateOutOfRange(
                "construction coordinates exceed the scalar type".into(),
            ));
        };
        let set = match PointSet::new(cast) {
            Ok(s) => s,
            Err(e) => {
                last_err = Some(e);
                continue;
            }
        };
        match CertifiedConfig::certify(set, claims) {
            Ok(cfg) => return Ok(cfg),
            Err(e) => last_err = Some(e),
        }
    }
    Err(Error::CertificationFailed(format!(
        "no certifiable realization for k={k} columns {sizes:?} after 64 attempts (last: {})",
        last_err.map_or_else(|| "none".into(), |e| e.to_string())
    )))
}

/// Builds and certifies the uniform-column configuration of
/// (k−3)(level+1)+2 points: level-convex, free of convex k-gons.
pub fn bft_construct<T: Coord + serde::Serialize>(params: &BFTParams) -> Result<CertifiedConfig<T>> {
    params.validate()?;
    let sizes = vec![params.level; params.k - 3];
    let claims = [
        Claim::LambdaAtMost(params.level),
        Claim::NoConvexGon(params.k),
    ];
    let cfg = layered_config(params.k, &sizes, params.scale, params.jitter_seed, &claims)?;
    debug_assert_eq!(cfg.points.len(), params.target_size());
    Ok(cfg)
}

pub(crate) const GRID: i64 = 4096;

/// One sampling attempt: n grid points, rejecting duplicates and collinear
/// triples incrementally.
pub(crate) fn sample_general_position(n: usize, rng: &mut ChaCha8Rng) -> Option<Vec<Point<i64>>> {
    let mut pts: Vec<Point<i64>> = Vec::with_capacity(n);
    let mut misses = 0;
    while pts.len() < n {
        let cand = Point::new(rng.gen_range(0..GRID), rng.gen_range(0..GRID));
        let ok = !pts.contains(&cand)
            && pts
                .iter()
                .enumerate()
                .all(|(i, &p)| {
                    pts[i + 1..]
                        .iter()
                        .all(|&q| !orientation(p, q, cand).is_collinear())
                });
        if ok {
            pts.push(cand);
        } else {
            misses += 1;
            if misses > 10_000 {
                return None;
            }
        }
    }
    Some(pts)
}

/// RNG for one trial: draws are independent per stream index while staying
/// reproducible from (seed, trial) alone.
pub(crate) fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Draws a general-position set of `n` points on the sampling grid.
pub(crate) fn random_set<T: Coord>(n: usize, seed: u64, trial: u64) -> Option<PointSet<T>> {
    let mut rng = trial_rng(seed, trial);
    let raw = sample_general_position(n, &mut rng)?;
    let cast: Option<Vec<Point<T>>> = raw
        .iter()
        .map(|p| Some(Point::new(T::from(p.x)?, T::from(p.y)?)))
        .collect();
    Some(PointSet::from_validated(cast?))
}

/// Randomized hunt for an n-point configuration satisfying every claim.
///
/// Trials run in parallel; each derives its RNG from (seed, trial index) and
/// the lowest-indexed success is returned, so the result is independent of
/// scheduling. `None` after `budget` trials is a valid outcome.
pub fn witness_search<T: Coord + serde::Serialize>(
    n: usize,
    claims: &[Claim],
    budget: usize,
    seed: u64,
) -> Result<Option<CertifiedConfig<T>>> {
    if n == 0 || n > 20 {
        return Err(Error::Precondition(format!(
            "witness search supports 1..=20 points, got {n}"
        )));
    }
    let found = (0..budget as u64).into_par_iter().find_map_first(|trial| {
        let set = random_set::<T>(n, seed, trial)?;
        if claims.iter().all(|c| c.holds(&set)) {
            Some(set)
        } else {
            None
        }
    });
    match found {
        Some(points) => Ok(Some(CertifiedConfig::certify(points, claims)?)),
        None => Ok(None),
    }
}

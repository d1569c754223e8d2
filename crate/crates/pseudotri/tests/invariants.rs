//! Randomized invariants tying the predicates, searches, constructions and
//! serialization to each other. Each block states the invariant it pins
//! down; violations shrink to a minimal counterexample.

use proptest::prelude::*;

use pseudotri::extremal::{bft_construct, m_value, BFTParams, Claim};
use pseudotri::geom::{hull_partition, orientation};
use pseudotri::harness::sample::{empty_mountain, with_triangular_hull};
use pseudotri::io::{format_point_set, parse_point_set};
use pseudotri::pseudo::shorten_mountain;
use pseudotri::search::{
    count_convex_subsets, count_pseudo_triangle_subsets, find_convex_kgon, find_convex_kgon_alt,
    find_empty_pseudo_triangle, find_empty_pseudo_triangle_alt, find_k_hole, find_k_hole_alt,
    splitter_type,
};
use pseudotri::{Point, PointSet};

const LIMIT: i64 = 1 << 20;

fn wide_point() -> impl Strategy<Value = Point> {
    (-LIMIT..=LIMIT, -LIMIT..=LIMIT).prop_map(|(x, y)| Point::new(x, y))
}

fn small_point() -> impl Strategy<Value = Point> {
    (-1500i64..1500, -1500i64..1500).prop_map(|(x, y)| Point::new(x, y))
}

/// Up to 9 points in general position; duplicate or collinear draws are
/// rejected by the set constructor itself.
fn gp_set() -> impl Strategy<Value = PointSet> {
    prop::collection::vec(small_point(), 4..9)
        .prop_filter_map("general position", |pts| PointSet::new(pts).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    // the sign predicate at full coordinate range: cyclic shifts preserve
    // it, swapping two arguments reverses it
    #[test]
    fn orientation_symmetries(a in wide_point(), b in wide_point(), c in wide_point()) {
        let o = orientation(a, b, c);
        prop_assert_eq!(o, orientation(b, c, a));
        prop_assert_eq!(o, orientation(c, a, b));
        prop_assert_eq!(o.reversed(), orientation(a, c, b));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // two independent scan orders and the subset counters must agree with
    // the primary searches on existence
    #[test]
    fn searches_agree_on_existence(s in gp_set(), k in 3usize..=5) {
        prop_assert_eq!(find_k_hole(&s, k).is_some(), find_k_hole_alt(&s, k).is_some());
        prop_assert_eq!(
            find_convex_kgon(&s, k).is_some(),
            find_convex_kgon_alt(&s, k).is_some()
        );
        prop_assert_eq!(
            find_empty_pseudo_triangle(&s, k, true).is_some(),
            find_empty_pseudo_triangle_alt(&s, k, true).is_some()
        );
        prop_assert_eq!(count_convex_subsets(&s, k, true) > 0, find_k_hole(&s, k).is_some());
        prop_assert_eq!(
            count_convex_subsets(&s, k, false) > 0,
            find_convex_kgon(&s, k).is_some()
        );
        prop_assert_eq!(
            count_pseudo_triangle_subsets(&s, k, true) > 0,
            find_empty_pseudo_triangle(&s, k, true).is_some()
        );
    }

    // a hole is a convex gon; emptiness only restricts. Larger gons contain
    // smaller ones, so absence is monotone upward
    #[test]
    fn hole_strength_and_monotonicity(s in gp_set(), k in 3usize..=5) {
        if find_k_hole(&s, k).is_some() {
            prop_assert!(find_convex_kgon(&s, k).is_some());
        }
        if find_convex_kgon(&s, k).is_none() {
            prop_assert!(find_convex_kgon(&s, k + 1).is_none());
        }
    }

    // hull and interior index sets partition the whole set
    #[test]
    fn hull_interior_partition(s in gp_set()) {
        let (hull, interior) = hull_partition(&s).unwrap();
        prop_assert_eq!(hull.len() + interior.len(), s.len());
        let mut seen: Vec<usize> = hull.iter().chain(interior.iter()).copied().collect();
        seen.sort_unstable();
        seen.dedup();
        prop_assert_eq!(seen.len(), s.len());
    }

    // every witness a search returns is honest: in the set, convex, empty
    #[test]
    fn hole_witnesses_verify(s in gp_set(), k in 3usize..=5) {
        if let Some(hole) = find_k_hole(&s, k) {
            prop_assert_eq!(hole.len(), k);
            for v in &hole {
                prop_assert!(s.points().contains(v));
            }
            let as_set = PointSet::new(hole.clone()).unwrap();
            let (h, i) = hull_partition(&as_set).unwrap();
            prop_assert_eq!(h.len(), k);
            prop_assert_eq!(i.len(), 0);
        }
        if let Some(pt) = find_empty_pseudo_triangle(&s, k, true) {
            prop_assert_eq!(pt.len(), k);
            prop_assert!(pt.is_empty_in(&s));
        }
    }

    // the corner segments of an interior point split the other interior
    // points into three groups without loss or double-counting
    #[test]
    fn splitter_counts_partition(interior in 3usize..9, seed in 0u64..64, trial in 0u64..64) {
        if let Some(s) = with_triangular_hull(interior, seed, trial) {
            let (_, inner) = hull_partition(&s).unwrap();
            for &i in &inner {
                let counts = splitter_type(&s, s[i]).unwrap();
                prop_assert_eq!(counts.iter().sum::<usize>(), inner.len() - 1);
            }
        }
    }

    // shortening an empty mountain stays empty at every intermediate size
    #[test]
    fn shortened_mountains_stay_empty(l in 5usize..=8, seed in 0u64..64, trial in 0u64..64) {
        if let Some((mountain, ambient)) = empty_mountain(l, seed, trial) {
            for m in 3..l {
                let shorter = shorten_mountain(&mountain, m, &ambient).unwrap();
                prop_assert_eq!(shorter.len(), m);
                prop_assert!(shorter.is_empty_in(&ambient));
                for v in shorter.vertices() {
                    prop_assert!(mountain.vertices().contains(v));
                }
            }
        }
    }

    // doubling identity of the 1-convex hole thresholds; both parities
    #[test]
    fn hole_threshold_doubling(nu in 3u32..=60) {
        prop_assert_eq!(m_value(nu + 2).unwrap(), 2 * m_value(nu).unwrap() + 1);
    }

    // layered constructions come back with certificates that re-verify, at
    // the advertised size, for any valid parameter pair and seed
    #[test]
    fn layered_certificates_recheck(k in 4usize..=7, level in 0usize..=3, seed in 0u64..32) {
        if 2 * level < k {
            let params = BFTParams { jitter_seed: seed, ..BFTParams::new(k, level) };
            let cfg = bft_construct::<i64>(&params).unwrap();
            prop_assert_eq!(cfg.points.len(), (k - 3) * (level + 1) + 2);
            prop_assert!(cfg.recheck());
        }
    }

    // the fixture text format round-trips points and claims exactly
    #[test]
    fn fixture_text_roundtrip(s in gp_set(), k in 3usize..=6, pick in 0usize..4) {
        let claims = [
            vec![Claim::NoHole(k)],
            vec![Claim::NoConvexGon(k), Claim::NoPt(k)],
            vec![Claim::LambdaAtMost(k - 3), Claim::NoEmptyPt(k)],
            vec![Claim::HullSize(3)],
        ];
        let text = format_point_set(s.points(), &claims[pick]);
        let fx = parse_point_set::<i64>(&text).unwrap();
        prop_assert_eq!(fx.points.points(), s.points());
        prop_assert_eq!(fx.claims, claims[pick].clone());
    }
}

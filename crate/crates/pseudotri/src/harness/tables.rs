//! The threshold reference tables and their verification plans.
//!
//! Every resolved cell of the two tables gets a lower-bound entry and an
//! upper-bound entry. Lower bounds are proved by certified witness
//! configurations, either stored fixtures or generated layered
//! constructions; upper bounds are sampled. Cells stated through unresolved
//! constants are reported as skipped with the reason, and cells whose
//! printed value conflicts with the rule that generates the row carry an
//! annotation explaining which value verification targets.

use std::path::Path;

use super::{
    check_lower, run_sampled_upper, ClaimReport, Family, Grade, LowerWitness, Outcome,
    VerificationReport,
};

struct Cell {
    family: Family,
    k: usize,
    l: usize,
    id: &'static str,
    stated: &'static str,
    annotation: Option<&'static str>,
    lower: LowerPlan,
    upper: UpperPlan,
}

enum LowerPlan {
    /// Settled by reasoning at tiny sizes; the string is the reason.
    Trivial(&'static str),
    /// Stored witness file, relative to the fixtures directory.
    Fixture(&'static str),
    /// Generated layered configuration with these column sizes.
    Layered(&'static [usize]),
    /// A generated configuration certifies a weaker bound than stated; the
    /// cell is reported as skipped with the partial result in the detail.
    Partial(&'static [usize], &'static str),
    Skip(&'static str),
}

enum UpperPlan {
    Trivial(&'static str),
    /// Sample sets of size `n`; `div` scales the trial budget down for
    /// expensive cells.
    Sampled { n: usize, div: usize },
    Skip(&'static str),
}

fn cells() -> Vec<Cell> {
    use Family::{E, F};
    use LowerPlan as L;
    use UpperPlan as U;
    vec![
        // ---- E(k,5) row: the no-structure maximum is M_k ----
        Cell {
            family: E, k: 3, l: 5, id: "E(3,5)", stated: "3", annotation: None,
            lower: L::Trivial("2 points contain no structure of either kind"),
            upper: U::Trivial("any 3 points in general position form a 3-hole"),
        },
        Cell {
            family: E, k: 4, l: 5, id: "E(4,5)", stated: "5", annotation: None,
            lower: L::Fixture("n4-triangular-hull.txt"),
            upper: U::Sampled { n: 5, div: 1 },
        },
        Cell {
            family: E, k: 5, l: 5, id: "E(5,5)", stated: "7", annotation: None,
            lower: L::Fixture("n6-lambda1.txt"),
            upper: U::Sampled { n: 7, div: 1 },
        },
        Cell {
            family: E, k: 6, l: 5, id: "E(6,5)", stated: "11 (= M_6)",
            annotation: Some(
                "the l-indexed row prints 7 here, which is the value of E(5,5); \
                 the k-indexed row gives M_6 = 11 and that is what verification targets",
            ),
            lower: L::Skip(
                "needs a 10-point 1-convex configuration; randomized search at that size \
                 is beyond the harness scale",
            ),
            upper: U::Sampled { n: 11, div: 1 },
        },
        Cell {
            family: E, k: 7, l: 5, id: "E(7,5)", stated: "15 (= M_7)", annotation: None,
            lower: L::Skip(
                "needs a 14-point 1-convex configuration; beyond randomized search scale",
            ),
            upper: U::Sampled { n: 15, div: 1 },
        },
        // ---- E(5,l) row ----
        Cell {
            family: E, k: 5, l: 3, id: "E(5,3)", stated: "3", annotation: None,
            lower: L::Trivial("2 points contain no structure of either kind"),
            upper: U::Trivial("any 3 points form an empty triangle, a 3-pseudo-triangle"),
        },
        Cell {
            family: E, k: 5, l: 4, id: "E(5,4)", stated: "4",
            annotation: Some(
                "the printed 4 is inconsistent with the general rule E(k,4) = k: \
                 4 points in convex position have neither structure, so the cell verifies as 5",
            ),
            lower: L::Fixture("n4-convex.txt"),
            upper: U::Sampled { n: 5, div: 1 },
        },
        Cell {
            family: E, k: 5, l: 6, id: "E(5,6)", stated: "9", annotation: None,
            lower: L::Fixture("n8-no-5hole-no-empty-67pt.txt"),
            upper: U::Sampled { n: 9, div: 1 },
        },
        Cell {
            family: E, k: 5, l: 7, id: "E(5,7)", stated: "9", annotation: None,
            lower: L::Fixture("n8-no-5hole-no-empty-67pt.txt"),
            upper: U::Sampled { n: 9, div: 1 },
        },
        Cell {
            family: E, k: 5, l: 8, id: "E(5,l>=8)", stated: "10 (tested at l=8)",
            annotation: None,
            lower: L::Fixture("n9-no-5hole-no-empty-8pt.txt"),
            upper: U::Sampled { n: 10, div: 1 },
        },
        // ---- E(k,6) row ----
        Cell {
            family: E, k: 3, l: 6, id: "E(3,6)", stated: "3", annotation: None,
            lower: L::Trivial("2 points contain no structure of either kind"),
            upper: U::Trivial("any 3 points in general position form a 3-hole"),
        },
        Cell {
            family: E, k: 4, l: 6, id: "E(4,6)", stated: "5", annotation: None,
            lower: L::Fixture("n4-triangular-hull.txt"),
            upper: U::Sampled { n: 5, div: 1 },
        },
        Cell {
            family: E, k: 6, l: 6, id: "E(6,6)", stated: "[12, 18]", annotation: None,
            lower: L::Layered(&[2, 2, 2]),
            upper: U::Sampled { n: 18, div: 1 },
        },
        // ---- E(6,l) row ----
        Cell {
            family: E, k: 6, l: 3, id: "E(6,3)", stated: "3", annotation: None,
            lower: L::Trivial("2 points contain no structure of either kind"),
            upper: U::Trivial("any 3 points form an empty triangle, a 3-pseudo-triangle"),
        },
        Cell {
            family: E, k: 6, l: 4, id: "E(6,4)", stated: "4",
            annotation: Some(
                "the printed 4 is inconsistent with the general rule E(k,4) = k: \
                 5 points in convex position have neither structure, so the cell verifies as 6",
            ),
            lower: L::Fixture("n5-convex.txt"),
            upper: U::Sampled { n: 6, div: 1 },
        },
        Cell {
            family: E, k: 6, l: 7, id: "E(6,7)", stated: "[N(3,6), 33]", annotation: None,
            lower: L::Skip("the lower end N(3,6) is an unresolved constant"),
            upper: U::Sampled { n: 33, div: 10 },
        },
        Cell {
            family: E, k: 6, l: 8, id: "E(6,l>=8)", stated: "[N(l-4,6), H(6)]",
            annotation: None,
            lower: L::Skip("the lower end N(l-4,6) is an unresolved constant"),
            upper: U::Skip("the upper end H(6), the plain 6-hole threshold, is unresolved"),
        },
        // ---- F(k,5) row: 2k-3 ----
        Cell {
            family: F, k: 3, l: 5, id: "F(3,5)", stated: "3", annotation: None,
            lower: L::Trivial("2 points contain no structure of either kind"),
            upper: U::Trivial("any 3 points in general position form a convex 3-gon"),
        },
        Cell {
            family: F, k: 4, l: 5, id: "F(4,5)", stated: "5", annotation: None,
            lower: L::Layered(&[1]),
            upper: U::Sampled { n: 5, div: 1 },
        },
        Cell {
            family: F, k: 5, l: 5, id: "F(5,5)", stated: "7", annotation: None,
            lower: L::Layered(&[1, 1]),
            upper: U::Sampled { n: 7, div: 1 },
        },
        Cell {
            family: F, k: 6, l: 5, id: "F(6,5)", stated: "9",
            annotation: Some(
                "the l-indexed row prints 7 here; the k-indexed row formula 2k-3 gives 9 \
                 and that is what verification targets",
            ),
            lower: L::Layered(&[1, 1, 1]),
            upper: U::Sampled { n: 9, div: 1 },
        },
        Cell {
            family: F, k: 7, l: 5, id: "F(7,5)", stated: "11", annotation: None,
            lower: L::Layered(&[1, 1, 1, 1]),
            upper: U::Sampled { n: 11, div: 1 },
        },
        Cell {
            family: F, k: 8, l: 5, id: "F(8,5)", stated: "13", annotation: None,
            lower: L::Layered(&[1, 1, 1, 1, 1]),
            upper: U::Sampled { n: 13, div: 1 },
        },
        // ---- F(k,6) row: 3k-6 ----
        Cell {
            family: F, k: 3, l: 6, id: "F(3,6)", stated: "3", annotation: None,
            lower: L::Trivial("2 points contain no structure of either kind"),
            upper: U::Trivial("any 3 points in general position form a convex 3-gon"),
        },
        Cell {
            family: F, k: 4, l: 6, id: "F(4,6)", stated: "6",
            annotation: Some(
                "the row formula 3k-6 over-counts at k = 4: every 5-point set in general \
                 position contains a convex 4-gon, so the threshold is 5 and that is what \
                 verification targets",
            ),
            lower: L::Fixture("n4-triangular-hull.txt"),
            upper: U::Sampled { n: 5, div: 1 },
        },
        Cell {
            family: F, k: 5, l: 6, id: "F(5,6)", stated: "9", annotation: None,
            lower: L::Layered(&[2, 2]),
            upper: U::Sampled { n: 9, div: 1 },
        },
        Cell {
            family: F, k: 6, l: 6, id: "F(6,6)", stated: "12", annotation: None,
            lower: L::Layered(&[2, 2, 2]),
            upper: U::Sampled { n: 12, div: 1 },
        },
        Cell {
            family: F, k: 7, l: 6, id: "F(7,6)", stated: "15", annotation: None,
            lower: L::Layered(&[2, 2, 2, 2]),
            upper: U::Sampled { n: 15, div: 1 },
        },
        Cell {
            family: F, k: 8, l: 6, id: "F(8,6)", stated: "18", annotation: None,
            lower: L::Layered(&[2, 2, 2, 2, 2]),
            upper: U::Sampled { n: 18, div: 1 },
        },
        // ---- F(5,l) row ----
        Cell {
            family: F, k: 5, l: 3, id: "F(5,3)", stated: "3", annotation: None,
            lower: L::Trivial("2 points contain no structure of either kind"),
            upper: U::Trivial("any 3 points form a triangle, a 3-pseudo-triangle"),
        },
        Cell {
            family: F, k: 5, l: 4, id: "F(5,4)", stated: "4",
            annotation: Some(
                "4 points in convex position have no 4-pseudo-triangle and no convex 5-gon, \
                 so the cell verifies as 5",
            ),
            lower: L::Fixture("n4-convex.txt"),
            upper: U::Sampled { n: 5, div: 1 },
        },
        Cell {
            family: F, k: 5, l: 7, id: "F(5,7)", stated: "9 (row value for l>=6)",
            annotation: None,
            lower: L::Layered(&[2, 2]),
            upper: U::Sampled { n: 9, div: 1 },
        },
        Cell {
            family: F, k: 5, l: 8, id: "F(5,l>=8)", stated: "9 (row value for l>=6)",
            annotation: None,
            lower: L::Layered(&[2, 2]),
            upper: U::Sampled { n: 9, div: 1 },
        },
        // ---- F(6,l) row ----
        Cell {
            family: F, k: 6, l: 3, id: "F(6,3)", stated: "3", annotation: None,
            lower: L::Trivial("2 points contain no structure of either kind"),
            upper: U::Trivial("any 3 points form a triangle, a 3-pseudo-triangle"),
        },
        Cell {
            family: F, k: 6, l: 4, id: "F(6,4)", stated: "4",
            annotation: Some(
                "the printed 4 is inconsistent with the rule F(k,4) = k: 5 points in \
                 convex position have neither structure, so the cell verifies as 6",
            ),
            lower: L::Fixture("n5-convex.txt"),
            upper: U::Sampled { n: 6, div: 1 },
        },
        Cell {
            family: F, k: 6, l: 7, id: "F(6,7)", stated: "[16, 17]", annotation: None,
            lower: L::Fixture("n15-no-convex-6gon-no-7pt.txt"),
            upper: U::Sampled { n: 17, div: 1 },
        },
        Cell {
            family: F, k: 6, l: 8, id: "F(6,l>=8)", stated: "17 (tested at l=8)",
            annotation: None,
            lower: L::Fixture("n16-no-convex-6gon-no-8pt.txt"),
            upper: U::Sampled { n: 17, div: 1 },
        },
        // ---- F(k,7) row ----
        Cell {
            family: F, k: 3, l: 7, id: "F(3,7)", stated: "3", annotation: None,
            lower: L::Trivial("2 points contain no structure of either kind"),
            upper: U::Trivial("any 3 points in general position form a convex 3-gon"),
        },
        Cell {
            family: F, k: 4, l: 7, id: "F(4,7)", stated: "5", annotation: None,
            lower: L::Fixture("n4-triangular-hull.txt"),
            upper: U::Sampled { n: 5, div: 1 },
        },
        Cell {
            family: F, k: 7, l: 7, id: "F(7,7)", stated: "[21, 23]", annotation: None,
            lower: L::Partial(
                &[3, 3, 3, 3],
                "the stated lower end relies on a published 20-point configuration that is \
                 not reproduced here",
            ),
            upper: U::Sampled { n: 23, div: 1 },
        },
        Cell {
            family: F, k: 8, l: 7, id: "F(8,7)",
            stated: "[23, 28] (row k>=8: [4k-9, 5k-12])", annotation: None,
            lower: L::Layered(&[3, 3, 3, 3, 3]),
            upper: U::Sampled { n: 28, div: 5 },
        },
    ]
}

fn lower_entry(cell: &Cell, fixtures: &Path, seed: u64) -> ClaimReport {
    let label = format!("{} lower", cell.id);
    let mut report = match &cell.lower {
        LowerPlan::Trivial(reason) => ClaimReport::bare(
            label,
            Outcome::Pass,
            Grade::Exact,
            0,
            (*reason).to_string(),
        ),
        LowerPlan::Skip(reason) => ClaimReport::bare(
            label,
            Outcome::Skipped,
            Grade::Sampled,
            0,
            (*reason).to_string(),
        ),
        LowerPlan::Fixture(file) => {
            let witness = LowerWitness::Fixture(fixtures.join(file));
            run_lower(cell, label, &witness, seed)
        }
        LowerPlan::Layered(sizes) => {
            let witness = LowerWitness::Layered { k: cell.k, sizes: sizes.to_vec() };
            run_lower(cell, label, &witness, seed)
        }
        LowerPlan::Partial(sizes, reason) => {
            let witness = LowerWitness::Layered { k: cell.k, sizes: sizes.to_vec() };
            match check_lower(cell.family, cell.k, cell.l, &witness, seed) {
                Ok((points, _)) => ClaimReport::bare(
                    label,
                    Outcome::Skipped,
                    Grade::Certified,
                    1,
                    format!(
                        "{}-point layered configuration certifies a bound of {}; {reason}",
                        points.len(),
                        points.len() + 1
                    ),
                ),
                Err(e) => ClaimReport::bare(
                    label,
                    Outcome::Skipped,
                    Grade::Sampled,
                    0,
                    format!("{reason}; the partial construction also failed: {e}"),
                ),
            }
        }
    };
    report.cell = Some(cell.id.to_string());
    report.stated = Some(cell.stated.to_string());
    report.annotation = cell.annotation.map(str::to_string);
    report
}

fn run_lower(cell: &Cell, label: String, witness: &LowerWitness, seed: u64) -> ClaimReport {
    match check_lower(cell.family, cell.k, cell.l, witness, seed) {
        Ok((points, detail)) => ClaimReport::bare(
            label,
            Outcome::Pass,
            Grade::Certified,
            1,
            format!("{detail}; proves a bound of {}", points.len() + 1),
        ),
        Err(e) => {
            // a missing fixture is an honest gap, not a refutation
            let missing = matches!(e, crate::error::Error::MissingFixture(_));
            ClaimReport::bare(
                label,
                if missing { Outcome::Skipped } else { Outcome::Fail },
                Grade::Certified,
                0,
                e.to_string(),
            )
        }
    }
}

fn upper_entry(cell: &Cell, trials: usize, seed: u64) -> ClaimReport {
    let label = format!("{} upper", cell.id);
    let mut report = match &cell.upper {
        UpperPlan::Trivial(reason) => ClaimReport::bare(
            label,
            Outcome::Pass,
            Grade::Exact,
            0,
            (*reason).to_string(),
        ),
        UpperPlan::Skip(reason) => ClaimReport::bare(
            label,
            Outcome::Skipped,
            Grade::Sampled,
            0,
            (*reason).to_string(),
        ),
        UpperPlan::Sampled { n, div } => {
            let cell_trials = (trials / div).max(1);
            let run = run_sampled_upper(cell.family, cell.k, cell.l, *n, cell_trials, seed);
            let mut r = ClaimReport::bare(
                label,
                run.outcome,
                Grade::Sampled,
                cell_trials,
                run.detail,
            );
            r.counterexample = run.counterexample;
            r
        }
    };
    report.cell = Some(cell.id.to_string());
    report.stated = Some(cell.stated.to_string());
    report
}

/// Runs the verification plan for every cell of both tables: one certified
/// or skipped lower-bound entry and one sampled, exact or skipped
/// upper-bound entry per cell.
pub fn table_report(fixtures: &Path, trials: usize, seed: u64) -> VerificationReport {
    let start = std::time::Instant::now();
    let mut claims = Vec::new();
    for cell in cells() {
        claims.push(lower_entry(&cell, fixtures, seed));
        claims.push(upper_entry(&cell, trials, seed));
    }
    VerificationReport {
        command: format!("verify tables trials={trials}"),
        seed,
        claims,
        wall: start.elapsed(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_has_unique_cells() {
        let cs = cells();
        for (i, a) in cs.iter().enumerate() {
            for b in &cs[i + 1..] {
                assert!(
                    !(a.family == b.family && a.k == b.k && a.l == b.l),
                    "duplicate cell {}",
                    a.id
                );
            }
        }
    }

    #[test]
    fn trivial_cells_report_exact() {
        let dir = std::path::Path::new("/nonexistent");
        let cs = cells();
        let e35 = cs.iter().find(|c| c.id == "E(3,5)").unwrap();
        let entry = lower_entry(e35, dir, 0);
        assert_eq!(entry.outcome, Outcome::Pass);
        assert_eq!(entry.grade, Grade::Exact);
    }

    #[test]
    fn missing_fixture_reports_skip_not_fail() {
        let dir = std::path::Path::new("/nonexistent");
        let cs = cells();
        let e55 = cs.iter().find(|c| c.id == "E(5,5)").unwrap();
        let entry = lower_entry(e55, dir, 0);
        assert_eq!(entry.outcome, Outcome::Skipped);
    }
}

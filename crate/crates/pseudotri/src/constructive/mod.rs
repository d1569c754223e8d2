//! Constructive procedures that produce small empty pseudo-triangles inside
//! point sets with a triangular hull.
//!
//! Each procedure follows the same discipline: seed a pseudo-triangle, then
//! repeatedly apply local rearrangements that are validated exactly (simple
//! polygon, right convex-vertex structure, strictly fewer interior points)
//! until the current pseudo-triangle is empty or an empty mountain can be
//! harvested and shortened. Every step is recorded in a [`DescentTrace`].
//! The exhaustive searches in [`crate::search`] are used only as a last
//! resort, and any such use is flagged on the trace.

mod five;
mod six;
mod seven;

pub use five::{empty_5pt_triangular, empty_mountain_triangular};
pub use six::empty_6pt_triangular;
pub use seven::{empty_7pt_triangular, standard_7pt_triangular};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{hull_partition, Point, PointSet};
use crate::pseudo::{Polygon, PseudoTriangle};
use crate::scalar::Coord;

/// One accepted rearrangement: which rule fired, the resulting boundary and
/// how many set points stayed inside. `flagged` marks steps taken in a
/// region where the governing argument is ambiguous and the step was found
/// by bounded local enumeration instead.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DescentStep<T: Coord> {
    pub rule: String,
    pub vertices: Vec<Point<T>>,
    pub interior: usize,
    pub flagged: bool,
}

/// Record of a whole construction run. `oracle_fallback` is true only when
/// the construction gave up and the witness came from exhaustive search.
#[derive(Debug, Clone, Serialize, Deserialize, Default)]
pub struct DescentTrace<T: Coord> {
    pub steps: Vec<DescentStep<T>>,
    pub oracle_fallback: bool,
}

impl<T: Coord> DescentTrace<T> {
    pub fn new() -> Self {
        DescentTrace { steps: Vec::new(), oracle_fallback: false }
    }

    pub(crate) fn push(&mut self, rule: impl Into<String>, pt: &PseudoTriangle<T>, interior: usize) {
        self.steps.push(DescentStep {
            rule: rule.into(),
            vertices: pt.vertices().to_vec(),
            interior,
            flagged: false,
        });
    }

    pub(crate) fn push_flagged(
        &mut self,
        rule: impl Into<String>,
        pt: &PseudoTriangle<T>,
        interior: usize,
    ) {
        self.steps.push(DescentStep {
            rule: rule.into(),
            vertices: pt.vertices().to_vec(),
            interior,
            flagged: true,
        });
    }
}

/// A constructed pseudo-triangle together with how it was found.
#[derive(Debug, Clone)]
pub struct Construction<T: Coord> {
    pub result: PseudoTriangle<T>,
    pub trace: DescentTrace<T>,
}

/// Hull (counter-clockwise, exactly three vertices) and interior points of
/// the set, in set order.
#[allow(clippy::type_complexity)]
pub(crate) fn triangular_frame<T: Coord>(
    set: &PointSet<T>,
) -> Result<([Point<T>; 3], Vec<Point<T>>)> {
    let (hull, interior) = hull_partition(set)?;
    if hull.len() != 3 {
        return Err(Error::Precondition(format!(
            "triangular hull required, got {} hull vertices",
            hull.len()
        )));
    }
    Ok((
        [set[hull[0]], set[hull[1]], set[hull[2]]],
        interior.into_iter().map(|i| set[i]).collect(),
    ))
}

/// Validates a boundary cycle as a pseudo-triangle of any class and counts
/// the set points strictly inside it.
pub(crate) fn try_cycle<T: Coord>(
    cycle: &[Point<T>],
    set: &PointSet<T>,
) -> Option<(PseudoTriangle<T>, usize)> {
    let poly = Polygon::new(cycle.to_vec()).ok()?;
    let pt = PseudoTriangle::from_polygon(poly).ok()?;
    let interior = pt.polygon.interior_points(set).len();
    Some((pt, interior))
}

/// Hull vertices of a slice, counter-clockwise.
pub(crate) fn hull_points<T: Coord>(pts: &[Point<T>]) -> Vec<Point<T>> {
    crate::geom::hull_indices(pts).into_iter().map(|i| pts[i]).collect()
}

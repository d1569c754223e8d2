//! Point-set text files and witness JSON.
//!
//! The text format is one point per line, two integers separated by
//! whitespace. `#` starts a comment that runs to the end of the line. A
//! comment of the form `# claims: a, b, c` declares certified claims about
//! the set; readers re-verify them rather than trusting the header.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::constructive::DescentTrace;
use crate::error::{Error, Result};
use crate::extremal::Claim;
use crate::geom::{Point, PointSet};
use crate::pseudo::{PseudoTriangle, PtClass};
use crate::scalar::Coord;

/// A parsed point-set file: the points plus whatever claims its header
/// declares. The claims are assertions to check, not facts.
#[derive(Debug, Clone)]
pub struct Fixture<T: Coord> {
    pub points: PointSet<T>,
    pub claims: Vec<Claim>,
}

pub fn parse_point_set<T: Coord>(text: &str) -> Result<Fixture<T>> {
    let mut pts = Vec::new();
    let mut claims = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(list) = comment.trim().strip_prefix("claims:") {
                for item in list.split(',') {
                    let item = item.trim();
                    if !item.is_empty() {
                        claims.push(item.parse()?);
                    }
                }
            }
            continue;
        }
        let data = line.split('#').next().unwrap_or("").trim();
        if data.is_empty() {
            continue;
        }
        let mut nums = data.split_whitespace();
        let parse_coord = |tok: Option<&str>| -> Result<T> {
            let tok = tok.ok_or_else(|| {
                Error::Parse(format!("line {}: expected two coordinates", lineno + 1))
            })?;
            let v: i64 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("line {}: bad integer {tok:?}", lineno + 1)))?;
            T::from(v).ok_or_else(|| Error::CoordinateOutOfRange(tok.to_string()))
        };
        let x = parse_coord(nums.next())?;
        let y = parse_coord(nums.next())?;
        if nums.next().is_some() {
            return Err(Error::Parse(format!(
                "line {}: expected exactly two coordinates",
                lineno + 1
            )));
        }
        pts.push(Point::new(x, y));
    }
    Ok(Fixture { points: PointSet::new(pts)?, claims })
}

pub fn read_point_set<T: Coord>(path: impl AsRef<Path>) -> Result<Fixture<T>> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::MissingFixture(format!("{}: {e}", path.display())))?;
    let mut fixture = parse_point_set::<T>(&text)?;
    fixture.points = fixture.points.with_id(path.display().to_string());
    Ok(fixture)
}

pub fn format_point_set<T: Coord>(points: &[Point<T>], claims: &[Claim]) -> String {
    let mut out = String::new();
    if !claims.is_empty() {
        let list: Vec<String> = claims.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("# claims: {}\n", list.join(", ")));
    }
    for p in points {
        out.push_str(&format!("{} {}\n", p.x, p.y));
    }
    out
}

pub fn write_point_set<T: Coord>(
    path: impl AsRef<Path>,
    points: &[Point<T>],
    claims: &[Claim],
) -> Result<()> {
    std::fs::write(path, format_point_set(points, claims))?;
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    Hole,
    PseudoTriangle,
    ConvexGon,
}

/// Serialized witness: the structure found, where it lives and whether it is
/// empty there. Pseudo-triangles carry their corner/chain decomposition,
/// chains in boundary order from each corner to the next.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(bound(
    serialize = "T: Coord + Serialize",
    deserialize = "T: Coord + Deserialize<'de>"
))]
pub struct Witness<T: Coord> {
    #[serde(rename = "type")]
    pub kind: WitnessKind,
    pub vertices: Vec<Point<T>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub corners: Option<[Point<T>; 3]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub chains: Option<[Vec<Point<T>>; 3]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub class: Option<PtClass>,
    pub empty: bool,
    pub ambient: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub trace: Option<DescentTrace<T>>,
}

fn ambient_label<T: Coord>(set: &PointSet<T>) -> String {
    set.id.clone().unwrap_or_else(|| "inline".into())
}

impl<T: Coord> Witness<T> {
    pub fn hole(vertices: Vec<Point<T>>, ambient: &PointSet<T>) -> Self {
        Witness {
            kind: WitnessKind::Hole,
            vertices,
            corners: None,
            chains: None,
            class: None,
            empty: true,
            ambient: ambient_label(ambient),
        trace: None,
        }
    }

    pub fn convex_gon(vertices: Vec<Point<T>>, ambient: &PointSet<T>) -> Self {
        Witness {
            kind: WitnessKind::ConvexGon,
            vertices,
            corners: None,
            chains: None,
            class: None,
            empty: false,
            ambient: ambient_label(ambient),
            trace: None,
        }
    }

    pub fn pseudo_triangle(pt: &PseudoTriangle<T>, ambient: &PointSet<T>) -> Self {
        Witness {
            kind: WitnessKind::PseudoTriangle,
            vertices: pt.vertices().to_vec(),
            corners: Some(pt.corners),
            chains: Some(pt.chains.clone()),
            class: Some(pt.class),
            empty: pt.is_empty_in(ambient),
            ambient: ambient_label(ambient),
            trace: None,
        }
    }

    pub fn with_trace(mut self, trace: DescentTrace<T>) -> Self {
        self.trace = Some(trace);
        self
    }
}

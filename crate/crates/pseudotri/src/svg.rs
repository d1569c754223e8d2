//! Static SVG rendering of witnesses.
//!
//! Output is a single self-contained `<svg>` document: the witness polygon
//! with corners emphasized and, for pseudo-triangles, the three chains in
//! distinct strokes. Rendering is presentation-only; no geometric decisions
//! are made here.

use crate::io::{Witness, WitnessKind};
use crate::Point;

const CANVAS: f64 = 640.0;
const MARGIN: f64 = 48.0;
const CHAIN_COLORS: [&str; 3] = ["#b04030", "#3060a8", "#3a7a40"];

struct Frame {
    min_x: f64,
    min_y: f64,
    scale: f64,
}

impl Frame {
    fn fit(points: &[Point]) -> Frame {
        let (mut min_x, mut min_y) = (f64::MAX, f64::MAX);
        let (mut max_x, mut max_y) = (f64::MIN, f64::MIN);
        for p in points {
            min_x = min_x.min(p.x as f64);
            min_y = min_y.min(p.y as f64);
            max_x = max_x.max(p.x as f64);
            max_y = max_y.max(p.y as f64);
        }
        let span = (max_x - min_x).max(max_y - min_y).max(1.0);
        Frame {
            min_x,
            min_y,
            scale: (CANVAS - 2.0 * MARGIN) / span,
        }
    }

    /// Grid to canvas, y flipped so larger y renders higher.
    fn map(&self, p: Point) -> (f64, f64) {
        (
            MARGIN + (p.x as f64 - self.min_x) * self.scale,
            CANVAS - MARGIN - (p.y as f64 - self.min_y) * self.scale,
        )
    }
}

fn path_from(frame: &Frame, pts: &[Point], close: bool) -> String {
    let mut d = String::new();
    for (i, &p) in pts.iter().enumerate() {
        let (x, y) = frame.map(p);
        d.push_str(&format!("{}{x:.1} {y:.1} ", if i == 0 { "M" } else { "L" }));
    }
    if close {
        d.push('Z');
    }
    d
}

/// Renders a witness to a standalone SVG document.
pub fn witness_svg(witness: &Witness<i64>) -> String {
    let frame = Frame::fit(&witness.vertices);
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {CANVAS} {CANVAS}\" \
         width=\"{CANVAS}\" height=\"{CANVAS}\">\n"
    ));
    out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"#fdfcf8\"/>\n");

    out.push_str(&format!(
        "<path d=\"{}\" fill=\"#e8ecf4\" stroke=\"#45484f\" stroke-width=\"1.5\"/>\n",
        path_from(&frame, &witness.vertices, true)
    ));

    if let Some(chains) = &witness.chains {
        for (i, chain) in chains.iter().enumerate() {
            out.push_str(&format!(
                "<path d=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"3\"/>\n",
                path_from(&frame, chain, false),
                CHAIN_COLORS[i]
            ));
        }
    }

    for &p in &witness.vertices {
        let (x, y) = frame.map(p);
        out.push_str(&format!(
            "<circle cx=\"{x:.1}\" cy=\"{y:.1}\" r=\"4\" fill=\"#45484f\"/>\n"
        ));
    }
    if let Some(corners) = &witness.corners {
        for &p in corners {
            let (x, y) = frame.map(p);
            out.push_str(&format!(
                "<circle cx=\"{x:.1}\" cy=\"{y:.1}\" r=\"7\" fill=\"none\" \
                 stroke=\"#b04030\" stroke-width=\"2.5\"/>\n"
            ));
        }
    }

    let kind = match witness.kind {
        WitnessKind::Hole => "hole",
        WitnessKind::PseudoTriangle => "pseudo-triangle",
        WitnessKind::ConvexGon => "convex polygon",
    };
    let class = witness
        .class
        .map(|c| format!(", class {c}"))
        .unwrap_or_default();
    out.push_str(&format!(
        "<text x=\"{MARGIN}\" y=\"28\" font-family=\"sans-serif\" font-size=\"15\" \
         fill=\"#45484f\">{} vertices, {kind}{class}, empty: {}, ambient: {}</text>\n",
        witness.vertices.len(),
        witness.empty,
        witness.ambient
    ));
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::Witness;
    use crate::{PointSet, PseudoTriangle};

    #[test]
    fn renders_pseudo_triangle_with_chains_and_corners() {
        let poly = crate::Polygon::new(vec![
            Point::new(0, 0),
            Point::new(60, 4),
            Point::new(35, 20),
            Point::new(30, 70),
        ])
        .unwrap();
        let pt = PseudoTriangle::from_polygon(poly).unwrap();
        let ambient = PointSet::new(pt.vertices().to_vec()).unwrap();
        let svg = witness_svg(&Witness::pseudo_triangle(&pt, &ambient));
        assert!(svg.starts_with("<svg"));
        assert!(svg.contains("stroke=\"#b04030\""));
        assert_eq!(svg.matches("<circle").count(), 4 + 3);
    }

    #[test]
    fn degenerate_bbox_does_not_divide_by_zero() {
        let w = Witness::<i64>::hole(
            vec![Point::new(5, 5), Point::new(6, 5), Point::new(5, 6)],
            &PointSet::new(vec![Point::new(5, 5), Point::new(6, 5), Point::new(5, 6)]).unwrap(),
        );
        let svg = witness_svg(&w);
        assert!(svg.contains("</svg>"));
    }
}

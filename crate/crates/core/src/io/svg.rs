//! Static SVG rendering. This is the only place coordinates become floats.

use std::fmt::Write;

use crate::graph::GeometricGraph;
use crate::verifier::all_conflicting_pairs;

#[derive(Clone, Debug)]
pub struct SvgStyle {
    /// Canvas width in pixels; the height follows the aspect ratio.
    pub width: f64,
    pub margin: f64,
    pub point_radius: f64,
    /// Edge ids drawn dotted instead of solid.
    pub dotted: Vec<usize>,
    /// Draw edges taking part in a conflict in red.
    pub highlight_conflicts: bool,
}

impl Default for SvgStyle {
    fn default() -> Self {
        SvgStyle { width: 600.0, margin: 20.0, point_radius: 3.0, dotted: Vec::new(), highlight_conflicts: false }
    }
}

pub fn emit_svg(g: &GeometricGraph, style: &SvgStyle) -> String {
    let coords: Vec<(f64, f64)> = g.points().iter().map(|p| (p.x.to_f64(), p.y.to_f64())).collect();
    let (mut min_x, mut max_x, mut min_y, mut max_y) = (0.0f64, 1.0f64, 0.0f64, 1.0f64);
    if let Some(&(x, y)) = coords.first() {
        (min_x, max_x, min_y, max_y) = (x, x, y, y);
        for &(x, y) in &coords {
            min_x = min_x.min(x);
            max_x = max_x.max(x);
            min_y = min_y.min(y);
            max_y = max_y.max(y);
        }
    }
    let span = (max_x - min_x).max(max_y - min_y).max(f64::MIN_POSITIVE);
    let inner = style.width - 2.0 * style.margin;
    let scale = inner / span;
    let height = (max_y - min_y) * scale + 2.0 * style.margin;
    let tx = |x: f64| style.margin + (x - min_x) * scale;
    let ty = |y: f64| height - style.margin - (y - min_y) * scale;

    let mut conflicted = vec![false; g.edge_count()];
    if style.highlight_conflicts {
        for v in all_conflicting_pairs(g) {
            for other in [v.first, v.second] {
                conflicted[g.find_edge(v.shared, other).expect("edge")] = true;
            }
        }
    }
    let mut dotted = vec![false; g.edge_count()];
    for &e in style.dotted.iter().filter(|&&e| e < g.edge_count()) {
        dotted[e] = true;
    }

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{:.2}" height="{:.2}" viewBox="0 0 {:.2} {:.2}">"#,
        style.width, height, style.width, height
    )
    .unwrap();
    writeln!(out, r#"  <rect width="100%" height="100%" fill="white"/>"#).unwrap();
    for (i, e) in g.edges().iter().enumerate() {
        let (a, b) = (coords[e.a], coords[e.b]);
        let color = if conflicted[i] { "#c0392b" } else { "#222222" };
        let dash = if dotted[i] { r#" stroke-dasharray="2,3""# } else { "" };
        let class = if dotted[i] { "edge dotted" } else { "edge" };
        writeln!(
            out,
            r#"  <line class="{class}" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="{color}" stroke-width="1.5"{dash}/>"#,
            tx(a.0),
            ty(a.1),
            tx(b.0),
            ty(b.1)
        )
        .unwrap();
    }
    for &(x, y) in &coords {
        writeln!(
            out,
            r#"  <circle class="vertex" cx="{:.3}" cy="{:.3}" r="{}" fill="black"/>"#,
            tx(x),
            ty(y),
            style.point_radius
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

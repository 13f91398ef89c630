//! SVG export.

use std::fmt::Write;

use num_traits::ToPrimitive;

use super::count::crossings;
use super::Drawing;
use crate::error::Result;

/// Polylines for edges, dots for vertices and, when `mark_crossings`, a ring at
/// every crossing. The view box is fitted to all points.
pub fn to_svg(dr: &Drawing, mark_crossings: bool) -> Result<String> {
    let marks = if mark_crossings {
        let (_, found) = crossings(dr)?;
        found
            .iter()
            .map(|c| {
                let den = c.point.den.to_f64().unwrap_or(1.0);
                (c.point.x.to_f64().unwrap_or(0.0) / den, c.point.y.to_f64().unwrap_or(0.0) / den)
            })
            .collect()
    } else {
        Vec::new()
    };
    let all: Vec<(f64, f64)> =
        dr.points.iter().chain(dr.routes.iter().flatten()).map(|p| (p.x as f64, p.y as f64)).collect();
    let (mut x0, mut y0, mut x1, mut y1) = (0.0f64, 0.0f64, 1.0f64, 1.0f64);
    if let Some(&(x, y)) = all.first() {
        (x0, y0, x1, y1) = (x, y, x, y);
    }
    for &(x, y) in &all {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    let size = (x1 - x0).max(y1 - y0).max(1.0);
    let pad = size * 0.05;
    let r = size * 0.01;
    // SVG y grows downwards; flip so the drawing keeps its orientation.
    let fy = |y: f64| y0 + y1 - y;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        x0 - pad,
        y0 - pad,
        x1 - x0 + 2.0 * pad,
        y1 - y0 + 2.0 * pad
    );
    let _ = writeln!(out, r#"<g fill="none" stroke="black" stroke-width="{}">"#, r / 2.0);
    for e in 0..dr.host.m() {
        let pts: Vec<String> = dr.polyline(e).iter().map(|p| format!("{},{}", p.x as f64, fy(p.y as f64))).collect();
        let _ = writeln!(out, r#"<polyline data-edge="{e}" points="{}"/>"#, pts.join(" "));
    }
    out.push_str("</g>\n");
    for (v, p) in dr.points.iter().enumerate() {
        let _ = writeln!(
            out,
            r#"<circle data-vertex="{v}" cx="{}" cy="{}" r="{r}" fill="black"/>"#,
            p.x as f64,
            fy(p.y as f64)
        );
    }
    for (x, y) in marks {
        let _ = writeln!(
            out,
            r#"<circle class="crossing" cx="{x}" cy="{}" r="{}" fill="none" stroke="red" stroke-width="{}"/>"#,
            fy(y),
            r * 1.5,
            r / 3.0
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

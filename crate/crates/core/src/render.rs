//! SVG, JSON, and one-line text output for drawings.

use std::fmt::Write as _;

use serde::Serialize;

use crate::layout::{LayoutReport, Verification};
use crate::lengths::Drawing;
use crate::optimize::Embedding;
use crate::slopes::SlopeMap;
use crate::turn::TurnAngle;

#[derive(Debug, Clone, PartialEq)]
pub struct RenderOptions {
    /// Drawing units per unit of layout length; must be positive.
    pub scale: f64,
    pub vertex_radius: f64,
    /// Draw the radial guide circles when the drawing has them.
    pub circles: bool,
    /// Space around the geometry, in drawing units.
    pub margin: f64,
    pub stroke: String,
    pub stroke_width: f64,
    pub fill: String,
    pub guide_stroke: String,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            scale: 40.0,
            vertex_radius: 3.0,
            circles: false,
            margin: 10.0,
            stroke: "#222".into(),
            stroke_width: 1.5,
            fill: "#c0392b".into(),
            guide_stroke: "#bbb".into(),
        }
    }
}

/// Fixed-precision number without trailing zeros, so output is stable.
fn num(x: f64) -> String {
    let s = format!("{x:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

/// Deterministic SVG: guide circles, then one `line` per edge in edge
/// order, then one `circle` per vertex in id order. The y axis points up.
pub fn to_svg(drawing: &Drawing, opts: &RenderOptions) -> String {
    assert!(opts.scale > 0.0, "scale must be positive");
    let pt = |(x, y): (f64, f64)| (x * opts.scale, -y * opts.scale);
    let pts: Vec<(f64, f64)> = drawing.positions.iter().map(|&p| pt(p)).collect();
    let guides: Vec<f64> = match (&drawing.radii, opts.circles) {
        (Some(r), true) => r.iter().map(|r| r * opts.scale).collect(),
        _ => Vec::new(),
    };
    let center = pt(drawing.positions.get(drawing.placement_root).copied().unwrap_or((0.0, 0.0)));

    let (mut lo_x, mut lo_y, mut hi_x, mut hi_y) = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
    let mut grow = |x: f64, y: f64, pad: f64| {
        lo_x = lo_x.min(x - pad);
        lo_y = lo_y.min(y - pad);
        hi_x = hi_x.max(x + pad);
        hi_y = hi_y.max(y + pad);
    };
    for &(x, y) in &pts {
        grow(x, y, 0.0);
    }
    for &r in &guides {
        grow(center.0, center.1, r);
    }
    if pts.is_empty() {
        grow(0.0, 0.0, 0.0);
    }
    let m = opts.margin;
    let (x0, y0, w, h) = (lo_x - m, lo_y - m, hi_x - lo_x + 2.0 * m, hi_y - lo_y + 2.0 * m);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{} {} {} {}" width="{}" height="{}">"#,
        num(x0),
        num(y0),
        num(w),
        num(h),
        num(w),
        num(h)
    );
    if !guides.is_empty() {
        let _ = writeln!(out, r#"<g fill="none" stroke="{}" stroke-width="1">"#, opts.guide_stroke);
        for r in &guides {
            let _ = writeln!(out, r#"<circle cx="{}" cy="{}" r="{}"/>"#, num(center.0), num(center.1), num(*r));
        }
        out.push_str("</g>\n");
    }
    let _ = writeln!(
        out,
        r#"<g stroke="{}" stroke-width="{}" stroke-linecap="round">"#,
        opts.stroke,
        num(opts.stroke_width)
    );
    for (u, v) in drawing.tree.edges() {
        let (a, b) = (pts[u], pts[v]);
        let _ = writeln!(out, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, num(a.0), num(a.1), num(b.0), num(b.1));
    }
    out.push_str("</g>\n");
    let _ = writeln!(out, r#"<g fill="{}">"#, opts.fill);
    for (v, p) in pts.iter().enumerate() {
        let title = drawing.tree.label(v).filter(|l| !l.is_empty());
        match title {
            Some(label) => {
                let _ = writeln!(
                    out,
                    r#"<circle cx="{}" cy="{}" r="{}"><title>{}</title></circle>"#,
                    num(p.0),
                    num(p.1),
                    num(opts.vertex_radius),
                    escape(label)
                );
            }
            None => {
                let _ =
                    writeln!(out, r#"<circle cx="{}" cy="{}" r="{}"/>"#, num(p.0), num(p.1), num(opts.vertex_radius));
            }
        }
    }
    out.push_str("</g>\n</svg>\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

#[derive(Serialize)]
struct DrawingJson<'a> {
    positions: &'a [(f64, f64)],
    slopes: &'a SlopeMap,
    resolution: TurnAngle,
    resolution_pi: String,
    class: &'static str,
    embedding: Embedding,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<&'a [String]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    radii: Option<&'a [f64]>,
    report: &'a LayoutReport,
}

/// JSON drawing with positions, exact slopes as turn fractions, the
/// resolution, the class, and the embedding mode.
pub fn drawing_json(drawing: &Drawing) -> String {
    let doc = DrawingJson {
        positions: &drawing.positions,
        slopes: &drawing.slopes,
        resolution: drawing.report.resolution,
        resolution_pi: drawing.report.resolution.pi_string(),
        class: drawing.report.class,
        embedding: drawing.report.embedding,
        labels: drawing.tree.labels(),
        radii: drawing.radii.as_deref(),
        report: &drawing.report,
    };
    serde_json::to_string_pretty(&doc).expect("drawings serialize")
}

/// Degrees with at most six decimals.
pub fn degrees(angle: TurnAngle) -> String {
    num(angle.to_degrees())
}

/// One line such as `class=general E(T)=4 resolution=π/2 (90°) verified=ok`.
pub fn report_line(report: &LayoutReport) -> String {
    let mut out = format!("class={}", report.class);
    if let Some(s) = report.short_paths {
        let _ = write!(out, " s={s} d={}", report.double_turns.unwrap_or(0));
    } else if let Some(k) = report.double_turns {
        let _ = write!(out, " k={k}");
    }
    if let Some(f) = report.forks {
        match report.embedding {
            Embedding::Fixed => {
                let _ = write!(out, " f={f}");
            }
            Embedding::Free => {
                let _ = write!(out, " E(T)={}", report.excess.unwrap_or(f));
            }
        }
    }
    let verified = match report.verified {
        Verification::Full => "ok",
        Verification::Linear => "ok-without-planarity",
        Verification::Skipped => "skipped",
    };
    let _ = write!(
        out,
        " resolution={} ({}°) verified={verified}",
        report.resolution.pi_string(),
        degrees(report.resolution)
    );
    out
}

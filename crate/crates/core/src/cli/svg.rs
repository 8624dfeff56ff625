//! SVG rendering of a mesh with a walk trace overlaid.

use std::fmt::Write;

use thiserror::Error;

use crate::geometry2d::Point2;
use crate::mesh::{FaceId, HalfEdgeId, Mesh};
use crate::walk::WalkTrace;

const WIDTH: f64 = 800.0;
const MARGIN: f64 = 20.0;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SvgError {
    #[error("trace step {step} refers to half-edge {edge}, which the mesh does not have")]
    UnknownEdge { step: usize, edge: u32 },
    #[error("trace start half-edge {0} is not in the mesh")]
    UnknownStart(u32),
}

struct View {
    min: Point2,
    scale: f64,
    height: f64,
}

impl View {
    fn new(m: &Mesh, p: Point2) -> View {
        let (lo, hi) = m.bounds();
        let min = Point2::new(lo.x.min(p.x), lo.y.min(p.y));
        let max = Point2::new(hi.x.max(p.x), hi.y.max(p.y));
        let span_x = (max.x - min.x).max(f64::MIN_POSITIVE);
        let span_y = max.y - min.y;
        let scale = (WIDTH - 2.0 * MARGIN) / span_x;
        // Very flat meshes get a minimum height so the drawing stays visible.
        let height = (span_y * scale).max(WIDTH / 8.0) + 2.0 * MARGIN;
        View { min, scale, height }
    }

    fn x(&self, p: Point2) -> f64 {
        MARGIN + (p.x - self.min.x) * self.scale
    }

    /// SVG y grows downward.
    fn y(&self, p: Point2) -> f64 {
        self.height - MARGIN - (p.y - self.min.y) * self.scale
    }

    fn xy(&self, p: Point2) -> String {
        format!("{:.6},{:.6}", self.x(p), self.y(p))
    }
}

/// Visited interior faces, first visit order.
fn visited_faces(m: &Mesh, trace: &WalkTrace) -> Vec<FaceId> {
    let mut faces: Vec<FaceId> = Vec::new();
    for e in trace.edges() {
        let f = m.face(e);
        if !f.is_outer() && !faces.contains(&f) {
            faces.push(f);
        }
    }
    faces
}

/// Draws mesh edges, shades visited faces darker the later they were
/// reached, connects the midpoints of the visited half-edges, and marks the
/// target. Output depends only on the inputs.
pub fn render(m: &Mesh, trace: &WalkTrace) -> Result<String, SvgError> {
    if !m.contains_half_edge(HalfEdgeId(trace.start)) {
        return Err(SvgError::UnknownStart(trace.start));
    }
    for (step, s) in trace.steps.iter().enumerate() {
        if !m.contains_half_edge(HalfEdgeId(s.edge)) {
            return Err(SvgError::UnknownEdge { step, edge: s.edge });
        }
    }
    let p = trace.target;
    let view = View::new(m, p);
    let mut out = String::new();
    let w = &mut out;
    writeln!(w, r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#).unwrap();
    writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH:.0}" height="{:.0}" viewBox="0 0 {WIDTH:.0} {:.0}">"#,
        view.height.ceil(),
        view.height.ceil()
    )
    .unwrap();
    writeln!(w, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();

    let faces = visited_faces(m, trace);
    writeln!(w, r#"<g id="visited" stroke="none">"#).unwrap();
    for (k, &f) in faces.iter().enumerate() {
        let opacity = 0.15 + 0.6 * (k + 1) as f64 / faces.len() as f64;
        let pts = m.face_points(f).map(|q| view.xy(q)).join(" ");
        writeln!(w, r##"<polygon points="{pts}" fill="#f2a33a" fill-opacity="{opacity:.3}"><title>face {f} (visit {k})</title></polygon>"##).unwrap();
    }
    writeln!(w, "</g>").unwrap();

    writeln!(w, r##"<g id="mesh" stroke="#404040" stroke-width="0.75" fill="none">"##).unwrap();
    for e in m.half_edge_ids().filter(|&e| e.0 < m.inv(e).0) {
        let (a, b) = m.edge_points(e);
        writeln!(
            w,
            r#"<line x1="{:.6}" y1="{:.6}" x2="{:.6}" y2="{:.6}"/>"#,
            view.x(a),
            view.y(a),
            view.x(b),
            view.y(b)
        )
        .unwrap();
    }
    writeln!(w, "</g>").unwrap();

    let path: Vec<String> = trace
        .edges()
        .map(|e| {
            let (a, b) = m.edge_points(e);
            view.xy(Point2::new((a.x + b.x) / 2.0, (a.y + b.y) / 2.0))
        })
        .collect();
    if !path.is_empty() {
        writeln!(
            w,
            r##"<polyline id="walk" points="{}" fill="none" stroke="#1f5fbf" stroke-width="2"/>"##,
            path.join(" ")
        )
        .unwrap();
    }
    writeln!(
        w,
        r##"<circle id="target" cx="{:.6}" cy="{:.6}" r="4" fill="#c0392b"><title>p = {p}</title></circle>"##,
        view.x(p),
        view.y(p)
    )
    .unwrap();
    writeln!(w, "</svg>").unwrap();
    Ok(out)
}

//! SVG drawings of the image of the Farey tessellation under a vertex map.

use std::collections::BTreeSet;
use std::fmt::Write;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::farey::Tessellation;
use crate::geometry::{boundary_to_disk, ExtReal};
use crate::shear::VertexMap;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Model {
    /// The Poincaré disk, `∞` at `1`.
    Disk,
    /// The upper half-plane, clipped to `|x| ≤ half_width`.
    HalfPlaneClip { half_width: f64 },
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "disk" => Ok(Model::Disk),
            "half-plane-clip" => Ok(Model::HalfPlaneClip { half_width: 2.0 }),
            _ => Err(Error::InvalidParameter(format!("unknown model `{s}` (disk, half-plane-clip)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RenderSpec {
    pub depth: u32,
    pub model: Model,
    pub stroke_width: f64,
    /// Width and height in pixels.
    pub size: u32,
    /// Edge keys drawn in the highlight color.
    pub highlight: BTreeSet<String>,
}

impl RenderSpec {
    pub fn new(depth: u32) -> Self {
        RenderSpec { depth, model: Model::Disk, stroke_width: 1.0, size: 800, highlight: BTreeSet::new() }
    }

    fn check(&self) -> Result<()> {
        if self.size == 0 {
            return Err(Error::InvalidParameter("image size must be positive".into()));
        }
        if !(self.stroke_width > 0.0) {
            return Err(Error::InvalidParameter("stroke width must be positive".into()));
        }
        if let Model::HalfPlaneClip { half_width } = self.model {
            if !(half_width > 0.0) {
                return Err(Error::InvalidParameter("half width must be positive".into()));
            }
        }
        Ok(())
    }
}

/// The image of one Farey edge: a geodesic between two boundary points.
#[derive(Clone, Debug, PartialEq)]
pub struct ImageEdge {
    pub key: String,
    pub generation: u32,
    pub ends: [ExtReal; 2],
}

impl ImageEdge {
    /// Endpoints on the unit circle.
    pub fn disk_ends(&self) -> [Complex64; 2] {
        [boundary_to_disk(self.ends[0]), boundary_to_disk(self.ends[1])]
    }
}

/// Images of all edges of generation at most `depth` under `h`.
pub fn image_edges(h: &dyn VertexMap, depth: u32) -> Result<Vec<ImageEdge>> {
    let tess = Tessellation::shared(depth);
    tess.edges()
        .iter()
        .map(|(e, g)| Ok(ImageEdge { key: e.key(), generation: *g, ends: [h.eval(e.a())?, h.eval(e.b())?] }))
        .collect()
}

fn num(x: f64) -> String {
    // Avoid "-0.0000" so equal drawings print equally.
    let s = format!("{x:.4}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        "0.0000".into()
    } else {
        s
    }
}

fn disk_path(edge: &ImageEdge, center: f64, radius: f64) -> String {
    let [p, q] = edge.disk_ends();
    let screen = |z: Complex64| (center + radius * z.re, center - radius * z.im);
    let (px, py) = screen(p);
    let (qx, qy) = screen(q);
    let denom = 1.0 + (p * q.conj()).re;
    if denom < 1e-9 {
        return format!("M {} {} L {} {}", num(px), num(py), num(qx), num(qy));
    }
    // The circle through p and q orthogonal to the unit circle is centered
    // where the tangents at p and q meet.
    let c = (p + q) / denom;
    let r = (c - p).norm() * radius;
    let (cx, cy) = screen(c);
    let cross = (qx - px) * (cy - py) - (qy - py) * (cx - px);
    let sweep = u8::from(cross > 0.0);
    format!("M {} {} A {} {} 0 0 {} {} {}", num(px), num(py), num(r), num(r), sweep, num(qx), num(qy))
}

fn half_plane_path(edge: &ImageEdge, size: f64, half_width: f64) -> Option<String> {
    let scale = size / (2.0 * half_width);
    let base = size * 0.75;
    let sx = |x: f64| (x + half_width) * scale;
    match edge.ends {
        [ExtReal::Finite(a), ExtReal::Finite(b)] => {
            let (a, b) = (a.min(b), a.max(b));
            if b < -half_width || a > half_width {
                return None;
            }
            let r = (b - a) / 2.0 * scale;
            Some(format!("M {} {} A {} {} 0 0 1 {} {}", num(sx(a)), num(base), num(r), num(r), num(sx(b)), num(base)))
        }
        [ExtReal::Finite(a), ExtReal::Infinity] | [ExtReal::Infinity, ExtReal::Finite(a)] => {
            if a.abs() > half_width {
                return None;
            }
            Some(format!("M {} {} L {} 0", num(sx(a)), num(base), num(sx(a))))
        }
        _ => None,
    }
}

/// An SVG 1.1 document drawing `edges`; the clip window of the half-plane
/// model drops edges entirely outside it.
pub fn to_svg(edges: &[ImageEdge], spec: &RenderSpec) -> Result<String> {
    spec.check()?;
    let size = spec.size as f64;
    let mut out = String::new();
    let s = spec.size;
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{s}" height="{s}" viewBox="0 0 {s} {s}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="{s}" height="{s}" fill="white"/>"#).unwrap();
    let (center, radius) = (size / 2.0, size / 2.0 * 0.96);
    match spec.model {
        Model::Disk => {
            writeln!(
                out,
                r#"<circle cx="{}" cy="{}" r="{}" fill="none" stroke="black" stroke-width="{}"/>"#,
                num(center),
                num(center),
                num(radius),
                num(spec.stroke_width)
            )
            .unwrap();
        }
        Model::HalfPlaneClip { .. } => {
            let y = num(size * 0.75);
            writeln!(out, r#"<line x1="0" y1="{y}" x2="{s}" y2="{y}" stroke="black" stroke-width="{}"/>"#, num(spec.stroke_width)).unwrap();
        }
    }
    writeln!(out, r#"<g fill="none" stroke="steelblue" stroke-width="{}">"#, num(spec.stroke_width)).unwrap();
    let mut highlighted = Vec::new();
    for e in edges {
        let d = match spec.model {
            Model::Disk => Some(disk_path(e, center, radius)),
            Model::HalfPlaneClip { half_width } => half_plane_path(e, size, half_width),
        };
        let Some(d) = d else { continue };
        if spec.highlight.contains(&e.key) {
            highlighted.push((e, d));
        } else {
            writeln!(out, r#"<path data-edge="{}" d="{d}"/>"#, e.key).unwrap();
        }
    }
    writeln!(out, "</g>").unwrap();
    if !highlighted.is_empty() {
        writeln!(out, r#"<g fill="none" stroke="crimson" stroke-width="{}">"#, num(2.0 * spec.stroke_width)).unwrap();
        for (e, d) in highlighted {
            writeln!(out, r#"<path data-edge="{}" d="{d}"/>"#, e.key).unwrap();
        }
        writeln!(out, "</g>").unwrap();
    }
    writeln!(out, "</svg>").unwrap();
    Ok(out)
}

/// Draws the image tessellation of `h` to the depth of `spec`.
pub fn render_svg(h: &dyn VertexMap, spec: &RenderSpec) -> Result<String> {
    to_svg(&image_edges(h, spec.depth)?, spec)
}

//! Figure reproduction: rotate a configuration in a coordinate
//! 2-plane, parallel-project to 2D, and emit a grid of SVG subfigures
//! colored by fiber.
//!
//! Float conversion happens only here; everything upstream is exact.
//! Output is byte-deterministic: fixed palette, fixed 6-decimal float
//! formatting, row-major frame layout.

use std::collections::BTreeMap;
use std::f64::consts::TAU;
use std::fmt::Write as _;

use hopflift::constructions::{Configuration, FiberLabel};

/// 18 hues, 20° apart, so entries k and k+9 are complementary.
/// Antipodal fiber pairs are assigned complementary entries.
pub const PALETTE: [&str; 18] = [
    "#c32222", "#c35822", "#c38e22", "#c3c322", "#8ec322", "#58c322", "#22c322", "#22c358",
    "#22c38e", "#22c3c3", "#228ec3", "#2258c3", "#2222c3", "#5822c3", "#8e22c3", "#c322c3",
    "#c3228e", "#c32258",
];

#[derive(Clone, Debug)]
pub struct RenderSpec {
    /// Coordinate plane rotated through the animation.
    pub plane: (usize, usize),
    /// Number of subfigures; frame i is rotated by i·2π/frame_count.
    pub frame_count: usize,
    /// The two coordinates kept by the parallel projection.
    pub projection_axes: (usize, usize),
    /// Pixel size of one subfigure.
    pub canvas: (u32, u32),
    pub marker_radius: f64,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            plane: (0, 2),
            frame_count: 1,
            projection_axes: (0, 1),
            canvas: (240, 240),
            marker_radius: 3.0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RenderError {
    BadAxis { index: usize, dim: usize },
    BadFrameCount,
}

impl std::fmt::Display for RenderError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RenderError::BadAxis { index, dim } => {
                write!(f, "axis {index} out of range for dimension {dim}")
            }
            RenderError::BadFrameCount => write!(f, "frame count must be at least 1"),
        }
    }
}

impl std::error::Error for RenderError {}

/// Rotation by `angle` in the coordinate plane `(i, j)`, identity on
/// all other coordinates.
pub fn rotate_frame(
    points: &[Vec<f64>],
    plane: (usize, usize),
    angle: f64,
) -> Result<Vec<Vec<f64>>, RenderError> {
    let dim = points.first().map_or(0, Vec::len);
    for index in [plane.0, plane.1] {
        if index >= dim {
            return Err(RenderError::BadAxis { index, dim });
        }
    }
    if plane.0 == plane.1 {
        return Err(RenderError::BadAxis {
            index: plane.1,
            dim,
        });
    }
    let (c, s) = (angle.cos(), angle.sin());
    Ok(points
        .iter()
        .map(|p| {
            let mut q = p.clone();
            q[plane.0] = c * p[plane.0] - s * p[plane.1];
            q[plane.1] = s * p[plane.0] + c * p[plane.1];
            q
        })
        .collect())
}

/// Parallel projection: keep the two chosen coordinates, drop the rest.
pub fn project_parallel(
    points: &[Vec<f64>],
    axes: (usize, usize),
) -> Result<Vec<(f64, f64)>, RenderError> {
    let dim = points.first().map_or(0, Vec::len);
    for index in [axes.0, axes.1] {
        if index >= dim {
            return Err(RenderError::BadAxis { index, dim });
        }
    }
    Ok(points.iter().map(|p| (p[axes.0], p[axes.1])).collect())
}

/// Color assignment in fiber-label sort order; antipodal labels get
/// complementary palette entries.
pub fn fiber_colors(config: &Configuration) -> BTreeMap<FiberLabel, &'static str> {
    let mut colors = BTreeMap::new();
    let mut next_pair = 0usize;
    for label in config.label_set() {
        if colors.contains_key(&label) {
            continue;
        }
        colors.insert(label, PALETTE[next_pair % 18]);
        if let Some(anti) = label.antipode() {
            colors.insert(anti, PALETTE[(next_pair + 9) % 18]);
        }
        next_pair += 1;
    }
    colors
}

/// One grid document: frame i is the configuration rotated by
/// i·2π/frame_count in `spec.plane`, projected onto
/// `spec.projection_axes`, one circle marker per point.
pub fn render_svg(config: &Configuration, spec: &RenderSpec) -> Result<String, RenderError> {
    let frames = render_frame_groups(config, spec)?;
    let (cw, ch) = (spec.canvas.0 as usize, spec.canvas.1 as usize);
    let cols = (spec.frame_count as f64).sqrt().ceil() as usize;
    let rows = spec.frame_count.div_ceil(cols);
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        cols * cw,
        rows * ch,
        cols * cw,
        rows * ch
    );
    for (i, body) in frames.iter().enumerate() {
        let x = (i % cols) * cw;
        let y = (i / cols) * ch;
        let _ = writeln!(svg, r#"<g id="frame-{i}" transform="translate({x},{y})">"#);
        svg.push_str(body);
        svg.push_str("</g>\n");
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

/// Standalone per-frame documents (`--per-frame` output).
pub fn render_frames(config: &Configuration, spec: &RenderSpec) -> Result<Vec<String>, RenderError> {
    let frames = render_frame_groups(config, spec)?;
    let (cw, ch) = spec.canvas;
    Ok(frames
        .into_iter()
        .map(|body| {
            format!(
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{cw}\" height=\"{ch}\" viewBox=\"0 0 {cw} {ch}\">\n{body}</svg>\n"
            )
        })
        .collect())
}

fn render_frame_groups(
    config: &Configuration,
    spec: &RenderSpec,
) -> Result<Vec<String>, RenderError> {
    if spec.frame_count == 0 {
        return Err(RenderError::BadFrameCount);
    }
    let float_points: Vec<Vec<f64>> = config
        .points()
        .iter()
        .map(|p| p.iter().map(|c| c.to_f64()).collect())
        .collect();
    let colors = fiber_colors(config);
    let (cw, ch) = (spec.canvas.0 as f64, spec.canvas.1 as f64);
    // unit disk (radius 1.1 margin) → subfigure pixels
    let scale = 0.5 * cw.min(ch) / 1.1;
    let mut out = Vec::with_capacity(spec.frame_count);
    for i in 0..spec.frame_count {
        let angle = i as f64 * TAU / spec.frame_count as f64;
        let rotated = rotate_frame(&float_points, spec.plane, angle)?;
        let projected = project_parallel(&rotated, spec.projection_axes)?;
        let mut body = String::new();
        let _ = writeln!(
            body,
            r##"<rect x="0.5" y="0.5" width="{:.6}" height="{:.6}" fill="white" stroke="#cccccc"/>"##,
            cw - 1.0,
            ch - 1.0
        );
        for ((x, y), label) in projected.iter().zip(config.labels()) {
            let px = 0.5 * cw + scale * x;
            let py = 0.5 * ch - scale * y;
            let _ = writeln!(
                body,
                r#"<circle cx="{px:.6}" cy="{py:.6}" r="{:.6}" fill="{}"/>"#,
                spec.marker_radius, colors[label]
            );
        }
        out.push(body);
    }
    Ok(out)
}

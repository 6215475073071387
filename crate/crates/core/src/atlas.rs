//! Fixed-coordinate drawings of `G_n` as SVG.
//!
//! The horizontal coordinate of `λ` is `λ₁ − ℓ(λ)`, so conjugate partitions
//! mirror each other across the dashed line `x = 0` and self-conjugate
//! partitions sit on it. Vertical positions only separate vertices: each
//! column is stacked in decreasing lexicographic order around `y = 0`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::analysis::Analysis;
use crate::error::{Error, Result};
use crate::graph::PartitionGraph;

/// Drawing units per layout step.
pub const UNIT: f64 = 40.0;
/// Blank border around each panel.
pub const MARGIN: f64 = 60.0;
pub const NODE_RADIUS: f64 = 9.0;
const FOCUS_UNIT: f64 = 64.0;
const TITLE_HEIGHT: f64 = 50.0;
const LEGEND_HEIGHT: f64 = 60.0;

/// Sequential palette, light to dark.
pub const PALETTE: [&str; 8] = ["#fff5eb", "#fee6ce", "#fdd0a2", "#fdae6b", "#fd8d3c", "#f16913", "#d94801", "#8c2d04"];

const EDGE_COLOR: &str = "#9a9a9a";
const OUTLINE: &str = "#333333";
const FRAMEWORK_TINT: &str = "#c6dbef";
const SC_DARK_BLUE: &str = "#08306b";
const LIGHT_GRAY: &str = "#e0e0e0";
const DARK_GRAY: &str = "#6e6e6e";
const SILVER: &str = "#c0c0c0";
const BLACK: &str = "#000000";
const WHITE: &str = "#ffffff";

/// The `n` ranges drawn on each page of a series.
pub const SERIES_GROUPS: [(u32, u32); 3] = [(1, 4), (5, 8), (9, 12)];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PanelMode {
    Structure,
    Degree,
    Simplex,
    CentralSpine,
}

impl PanelMode {
    pub const ALL: [PanelMode; 4] =
        [PanelMode::Structure, PanelMode::Degree, PanelMode::Simplex, PanelMode::CentralSpine];

    pub fn name(self) -> &'static str {
        match self {
            PanelMode::Structure => "structure",
            PanelMode::Degree => "degree",
            PanelMode::Simplex => "simplex",
            PanelMode::CentralSpine => "central_spine",
        }
    }

    fn title(self) -> &'static str {
        match self {
            PanelMode::Structure => "Structural atlas",
            PanelMode::Degree => "Degree atlas",
            PanelMode::Simplex => "Simplex-layer atlas",
            PanelMode::CentralSpine => "Central-region/spine overlay",
        }
    }

    fn value(self, a: &Analysis, v: usize) -> Option<usize> {
        match self {
            PanelMode::Degree => Some(a.invariants.degree(v)),
            PanelMode::Simplex => Some(a.invariants.dim_loc(v)),
            _ => None,
        }
    }
}

impl FromStr for PanelMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PanelMode::ALL.into_iter().find(|m| m.name() == s).ok_or_else(|| Error::UnknownMode(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Position {
    pub x: i32,
    pub y: i32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtlasLayout {
    pub n: u32,
    /// Indexed by vertex.
    pub positions: Vec<Position>,
}

impl AtlasLayout {
    /// Largest `|x|`; the drawing is symmetric about the axis.
    pub fn half_width(&self) -> i32 {
        self.positions.iter().map(|p| p.x.abs()).max().unwrap_or(0)
    }

    pub fn y_range(&self) -> (i32, i32) {
        let ys = self.positions.iter().map(|p| p.y);
        (ys.clone().min().unwrap_or(0), ys.max().unwrap_or(0))
    }
}

pub fn layout(g: &PartitionGraph) -> AtlasLayout {
    let mut columns: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
    let xs: Vec<i32> = g.vertices().iter().map(|p| p.first_part() as i32 - p.len() as i32).collect();
    // vertex indices are already in decreasing lexicographic order
    for (v, &x) in xs.iter().enumerate() {
        columns.entry(x).or_default().push(v);
    }
    let mut positions = vec![Position { x: 0, y: 0 }; g.vertex_count()];
    for (&x, members) in &columns {
        let shift = (members.len() / 2) as i32;
        for (i, &v) in members.iter().enumerate() {
            positions[v] = Position { x, y: i as i32 - shift };
        }
    }
    AtlasLayout { n: g.n(), positions }
}

/// Linear map from an integer value range onto [`PALETTE`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColorScale {
    pub min: usize,
    pub max: usize,
}

impl ColorScale {
    pub fn new(min: usize, max: usize) -> Self {
        assert!(min <= max);
        ColorScale { min, max }
    }

    /// Domain spanning every value a mode takes across the given analyses.
    pub fn for_series(analyses: &[Analysis], mode: PanelMode) -> Option<ColorScale> {
        let values = analyses.iter().flat_map(|a| (0..a.graph.vertex_count()).filter_map(move |v| mode.value(a, v)));
        let (min, max) = values.fold(None, |acc: Option<(usize, usize)>, x| match acc {
            None => Some((x, x)),
            Some((lo, hi)) => Some((lo.min(x), hi.max(x))),
        })?;
        Some(ColorScale::new(min, max))
    }

    /// Palette index for `value`, rounded to the nearest step.
    pub fn step(&self, value: usize) -> usize {
        let last = PALETTE.len() - 1;
        if self.max == self.min {
            return 0;
        }
        let v = value.clamp(self.min, self.max) - self.min;
        let span = self.max - self.min;
        ((v * last + span / 2) / span).min(last)
    }

    pub fn color(&self, value: usize) -> &'static str {
        PALETTE[self.step(value)]
    }
}

struct NodeStyle {
    fill: &'static str,
    stroke_width: f64,
}

fn node_style(a: &Analysis, v: usize, mode: PanelMode, scale: Option<ColorScale>) -> NodeStyle {
    let m = &a.morphology;
    let sc = a.graph.conjugate_of(v) == v;
    match mode {
        PanelMode::Structure => {
            let fill = if sc {
                SC_DARK_BLUE
            } else if m.in_framework(v) {
                FRAMEWORK_TINT
            } else {
                WHITE
            };
            NodeStyle { fill, stroke_width: 1.0 }
        }
        PanelMode::Degree | PanelMode::Simplex => {
            let value = mode.value(a, v).expect("valued mode");
            let fill = scale.map_or(PALETTE[0], |s| s.color(value));
            NodeStyle { fill, stroke_width: 1.0 }
        }
        PanelMode::CentralSpine => {
            let fill = if sc {
                BLACK
            } else if m.in_central_region(v, 1) {
                SILVER
            } else if m.in_central_region(v, 2) {
                DARK_GRAY
            } else if m.in_framework(v) {
                LIGHT_GRAY
            } else {
                WHITE
            };
            let stroke_width = if m.spine.contains(v) { 3.5 } else { 1.0 };
            NodeStyle { fill, stroke_width }
        }
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Drawing geometry of one panel at a given unit size.
struct Frame {
    unit: f64,
    half_width: i32,
    y_min: i32,
    y_max: i32,
}

impl Frame {
    fn new(layout: &AtlasLayout, unit: f64) -> Self {
        let (y_min, y_max) = layout.y_range();
        Frame { unit, half_width: layout.half_width(), y_min, y_max }
    }

    fn width(&self) -> f64 {
        2.0 * MARGIN + 2.0 * self.half_width as f64 * self.unit
    }

    fn height(&self) -> f64 {
        2.0 * MARGIN + (self.y_max - self.y_min) as f64 * self.unit
    }

    fn px(&self, x: i32) -> f64 {
        MARGIN + (x + self.half_width) as f64 * self.unit
    }

    fn py(&self, y: i32) -> f64 {
        MARGIN + (y - self.y_min) as f64 * self.unit
    }
}

/// SVG elements for one panel, drawn in a frame whose origin is (0, 0).
fn panel_body(a: &Analysis, layout: &AtlasLayout, mode: PanelMode, scale: Option<ColorScale>, unit: f64) -> String {
    let f = Frame::new(layout, unit);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="16" text-anchor="middle">G_{}</text>"#,
        f.width() / 2.0,
        MARGIN / 2.0,
        layout.n
    );
    let _ = writeln!(
        out,
        r##"<line x1="{x:.2}" y1="{:.2}" x2="{x:.2}" y2="{:.2}" stroke="#555555" stroke-width="1.00" stroke-dasharray="6 4"/>"##,
        MARGIN * 0.75,
        f.height() - MARGIN * 0.5,
        x = f.px(0),
    );
    for (u, v) in a.graph.edges() {
        let (p, q) = (layout.positions[u], layout.positions[v]);
        let _ = writeln!(
            out,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{EDGE_COLOR}" stroke-width="1.00"/>"#,
            f.px(p.x),
            f.py(p.y),
            f.px(q.x),
            f.py(q.y)
        );
    }
    for (v, p) in layout.positions.iter().enumerate() {
        let style = node_style(a, v, mode, scale);
        let _ = writeln!(
            out,
            r#"<circle cx="{:.2}" cy="{:.2}" r="{NODE_RADIUS:.2}" fill="{}" stroke="{OUTLINE}" stroke-width="{:.2}"><title>{}</title></circle>"#,
            f.px(p.x),
            f.py(p.y),
            style.fill,
            style.stroke_width,
            a.graph.vertex(v)
        );
    }
    out
}

fn document(width: f64, height: f64, body: &str) -> String {
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.2}" height="{height:.2}" viewBox="0 0 {width:.2} {height:.2}">"#
    );
    let _ = writeln!(out, r#"<rect x="0.00" y="0.00" width="{width:.2}" height="{height:.2}" fill="{WHITE}"/>"#);
    out.push_str(body);
    out.push_str("</svg>\n");
    out
}

/// A single panel as a standalone SVG document.
pub fn render_panel(a: &Analysis, layout: &AtlasLayout, mode: PanelMode, scale: Option<ColorScale>) -> String {
    let f = Frame::new(layout, UNIT);
    document(f.width(), f.height(), &panel_body(a, layout, mode, scale, UNIT))
}

/// One finished output file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtlasDocument {
    pub name: String,
    pub svg: String,
}

fn legend(mode: PanelMode, scale: Option<ColorScale>, top: f64) -> String {
    let entries: Vec<(&str, f64, String)> = match mode {
        PanelMode::Structure => vec![
            (FRAMEWORK_TINT, 1.0, "boundary framework".into()),
            (WHITE, 1.0, "interior".into()),
            (SC_DARK_BLUE, 1.0, "self-conjugate".into()),
        ],
        PanelMode::CentralSpine => vec![
            (LIGHT_GRAY, 1.0, "boundary".into()),
            (DARK_GRAY, 1.0, "C(2) \\ C(1)".into()),
            (SILVER, 1.0, "C(1)".into()),
            (BLACK, 1.0, "self-conjugate".into()),
            (WHITE, 3.5, "spine".into()),
        ],
        PanelMode::Degree | PanelMode::Simplex => match scale {
            Some(s) => {
                // lowest value mapped to each palette step
                let mut seen = Vec::new();
                for value in s.min..=s.max {
                    let step = s.step(value);
                    if !seen.iter().any(|&(st, _)| st == step) {
                        seen.push((step, value));
                    }
                }
                seen.into_iter().map(|(step, value)| (PALETTE[step], 1.0, format!("{value}"))).collect()
            }
            None => Vec::new(),
        },
    };
    let mut out = String::new();
    for (i, (fill, stroke, label)) in entries.iter().enumerate() {
        let x = MARGIN + i as f64 * 150.0;
        let y = top + LEGEND_HEIGHT / 2.0;
        let _ = writeln!(
            out,
            r#"<circle cx="{x:.2}" cy="{y:.2}" r="{NODE_RADIUS:.2}" fill="{fill}" stroke="{OUTLINE}" stroke-width="{stroke:.2}"/>"#
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="13">{}</text>"#,
            x + 2.0 * NODE_RADIUS,
            y + 4.0,
            escape(label)
        );
    }
    out
}

/// Pages of one series: one document per entry of [`SERIES_GROUPS`], each
/// a 2×2 grid of panels, sharing one colour scale across the series.
pub fn render_series(analyses: &[Analysis], mode: PanelMode) -> Result<Vec<AtlasDocument>> {
    let scale = ColorScale::for_series(analyses, mode);
    let mut docs = Vec::new();
    for (k, &(lo, hi)) in SERIES_GROUPS.iter().enumerate() {
        let group: Vec<&Analysis> = (lo..=hi)
            .map(|n| analyses.iter().find(|a| a.n() == n).ok_or(Error::InvalidRange(format!("atlas needs G_{n}"))))
            .collect::<Result<_>>()?;
        let layouts: Vec<AtlasLayout> = group.iter().map(|a| layout(&a.graph)).collect();
        let frames: Vec<Frame> = layouts.iter().map(|l| Frame::new(l, UNIT)).collect();
        let cell_w = frames.iter().map(Frame::width).fold(0.0, f64::max);
        let cell_h = frames.iter().map(Frame::height).fold(0.0, f64::max);
        let columns = 2;
        let rows = group.len().div_ceil(columns);
        let width = (cell_w * columns as f64).max(MARGIN * 2.0 + 150.0 * 5.0);
        let height = TITLE_HEIGHT + cell_h * rows as f64 + LEGEND_HEIGHT;

        let mut body = String::new();
        let _ = writeln!(
            body,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="20" text-anchor="middle">{}, part {}: G_{lo} to G_{hi}</text>"#,
            width / 2.0,
            TITLE_HEIGHT * 0.6,
            mode.title(),
            k + 1
        );
        for (i, ((a, l), f)) in group.iter().zip(&layouts).zip(&frames).enumerate() {
            // centre each panel in its grid cell
            let ox = (i % columns) as f64 * cell_w + (cell_w - f.width()) / 2.0;
            let oy = TITLE_HEIGHT + (i / columns) as f64 * cell_h + (cell_h - f.height()) / 2.0;
            let _ = writeln!(body, r#"<g transform="translate({ox:.2},{oy:.2})">"#);
            body.push_str(&panel_body(a, l, mode, scale, UNIT));
            body.push_str("</g>\n");
        }
        body.push_str(&legend(mode, scale, height - LEGEND_HEIGHT));
        docs.push(AtlasDocument {
            name: format!("atlas_{}_part{}.svg", mode.name(), k + 1),
            svg: document(width, height, &body),
        });
    }
    Ok(docs)
}

/// Large overlay view of one graph with its self-conjugate vertices
/// labelled to the right of the drawing and joined to them by leader lines.
pub fn render_focus(a: &Analysis) -> AtlasDocument {
    let l = layout(&a.graph);
    let f = Frame::new(&l, FOCUS_UNIT);
    let label_x = f.width() + 40.0;
    let width = label_x + 220.0;
    let height = TITLE_HEIGHT + f.height() + LEGEND_HEIGHT;
    let axis = &a.morphology.axis;

    let mut body = String::new();
    let _ = writeln!(
        body,
        r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="22" text-anchor="middle">Focused view of G_{}</text>"#,
        width / 2.0,
        TITLE_HEIGHT * 0.6,
        a.n()
    );
    let _ = writeln!(body, r#"<g transform="translate(0.00,{TITLE_HEIGHT:.2})">"#);
    body.push_str(&panel_body(a, &l, PanelMode::CentralSpine, None, FOCUS_UNIT));
    let spacing = f.height() / (axis.len() + 1) as f64;
    for (i, &v) in axis.iter().enumerate() {
        let p = l.positions[v];
        let ty = spacing * (i + 1) as f64;
        let _ = writeln!(
            body,
            r##"<line class="leader" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{ty:.2}" stroke="#222222" stroke-width="1.00"/>"##,
            f.px(p.x) + NODE_RADIUS,
            f.py(p.y),
            label_x - 6.0,
        );
        let _ = writeln!(
            body,
            r#"<text class="sc-label" x="{label_x:.2}" y="{:.2}" font-family="sans-serif" font-size="16">{}</text>"#,
            ty + 5.0,
            a.graph.vertex(v)
        );
    }
    body.push_str("</g>\n");
    body.push_str(&legend(PanelMode::CentralSpine, None, height - LEGEND_HEIGHT));
    AtlasDocument { name: format!("g{}_focus.svg", a.n()), svg: document(width, height, &body) }
}

/// Every series for the given modes, followed by the `G_12` focus page.
pub fn render_atlas(analyses: &[Analysis], modes: &[PanelMode]) -> Result<Vec<AtlasDocument>> {
    let mut docs = Vec::new();
    for &mode in modes {
        docs.extend(render_series(analyses, mode)?);
    }
    let g12 = analyses.iter().find(|a| a.n() == 12).ok_or(Error::InvalidRange("atlas needs G_12".into()))?;
    docs.push(render_focus(g12));
    Ok(docs)
}

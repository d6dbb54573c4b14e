//! Static SVG barcodes.
//!
//! One horizontal track per bar (a bar of multiplicity `m` gets `m`
//! tracks), level bars above sub-level bars, grouped by degree. Closed ends
//! are filled dots, open ends hollow dots, infinite ends arrowheads. Each
//! critical value gets a labeled vertical gridline. The output depends only
//! on the document, so identical input gives identical bytes.

use std::fmt::Write;

use crate::report::{EndFlag, ResultDocument};

const WIDTH: f64 = 720.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 30.0;
const TOP: f64 = 20.0;
const TRACK: f64 = 16.0;
const HEADER: f64 = 22.0;
const AXIS_SPACE: f64 = 36.0;
const DOT: f64 = 3.5;

/// A bar as drawn: value ends, `None` for an infinite death.
struct Track {
    left: EndFlag,
    birth: f64,
    death: Option<f64>,
    right: EndFlag,
}

/// Parses a decimal or `p/q` value string.
fn value(s: &str) -> f64 {
    match s.split_once('/') {
        Some((p, q)) => p.parse::<f64>().unwrap_or(0.0) / q.parse::<f64>().unwrap_or(1.0),
        None => s.parse().unwrap_or(0.0),
    }
}

struct Scale {
    lo: f64,
    hi: f64,
}

impl Scale {
    fn new(criticals: &[f64]) -> Self {
        let (mut lo, mut hi) = criticals.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &x| (a.min(x), b.max(x)));
        if criticals.is_empty() {
            (lo, hi) = (0.0, 1.0);
        } else if lo == hi {
            (lo, hi) = (lo - 1.0, hi + 1.0);
        }
        let pad = 0.1 * (hi - lo);
        Scale { lo: lo - pad, hi: hi + pad }
    }

    fn x(&self, v: f64) -> f64 {
        LEFT + (v - self.lo) / (self.hi - self.lo) * (WIDTH - LEFT - RIGHT)
    }

    fn right_edge(&self) -> f64 {
        WIDTH - RIGHT
    }
}

/// Groups of tracks: (section label, degree, tracks).
fn groups(doc: &ResultDocument) -> Vec<(&'static str, &'static str, usize, Vec<Track>)> {
    let mut out = Vec::new();
    let level = doc.level_bars.as_deref().unwrap_or_default();
    let sublevel = doc.sublevel_bars.as_deref().unwrap_or_default();
    let degrees = |ds: Vec<usize>| {
        let mut ds = ds;
        ds.dedup();
        ds
    };
    for r in degrees(level.iter().map(|b| b.degree).collect()) {
        let tracks = level
            .iter()
            .filter(|b| b.degree == r)
            .flat_map(|b| {
                (0..b.multiplicity).map(|_| Track { left: b.left, birth: value(&b.birth), death: Some(value(&b.death)), right: b.right })
            })
            .collect();
        out.push(("level", "level", r, tracks));
    }
    for r in degrees(sublevel.iter().map(|b| b.degree).collect()) {
        let tracks = sublevel
            .iter()
            .filter(|b| b.degree == r)
            .flat_map(|b| {
                (0..b.multiplicity).map(|_| Track {
                    left: EndFlag::Closed,
                    birth: value(&b.birth),
                    death: b.death.as_deref().map(value),
                    right: EndFlag::Open,
                })
            })
            .collect();
        out.push(("sub-level", "sublevel", r, tracks));
    }
    out
}

fn dot(svg: &mut String, x: f64, y: f64, end: EndFlag) {
    let fill = match end {
        EndFlag::Closed => "black",
        EndFlag::Open => "white",
    };
    let _ = writeln!(svg, r#"    <circle class="end {}" cx="{:.2}" cy="{:.2}" r="{}" fill="{}" stroke="black"/>"#, end_name(end), x, y, DOT, fill);
}

fn end_name(e: EndFlag) -> &'static str {
    match e {
        EndFlag::Open => "open",
        EndFlag::Closed => "closed",
    }
}

/// Renders the bar sections of `doc`.
pub fn render_svg(doc: &ResultDocument) -> String {
    let criticals: Vec<f64> = doc.criticals.iter().map(|s| value(s)).collect();
    let scale = Scale::new(&criticals);
    let groups = groups(doc);
    let track_count: usize = groups.iter().map(|g| g.3.len()).sum();
    let plot_bottom = TOP + groups.len() as f64 * HEADER + track_count as f64 * TRACK + TRACK;
    let height = plot_bottom + AXIS_SPACE;

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h:.0}" viewBox="0 0 {w} {h:.0}" font-family="sans-serif" font-size="11">"#,
        w = WIDTH,
        h = height
    );
    let _ = writeln!(svg, r#"  <rect width="100%" height="100%" fill="white"/>"#);

    // axes
    let _ = writeln!(
        svg,
        r#"  <line class="axis" x1="{l}" y1="{b:.2}" x2="{r}" y2="{b:.2}" stroke="black"/>"#,
        l = LEFT,
        r = scale.right_edge(),
        b = plot_bottom
    );
    let _ = writeln!(svg, r#"  <line class="axis" x1="{l}" y1="{t}" x2="{l}" y2="{b:.2}" stroke="black"/>"#, l = LEFT, t = TOP, b = plot_bottom);
    for (label, &v) in doc.criticals.iter().zip(&criticals) {
        let x = scale.x(v);
        let _ = writeln!(
            svg,
            r##"  <line class="gridline" x1="{x:.2}" y1="{t}" x2="{x:.2}" y2="{b:.2}" stroke="#bbbbbb" stroke-dasharray="3,3"/>"##,
            t = TOP,
            b = plot_bottom
        );
        let _ = writeln!(svg, r#"  <text class="gridlabel" x="{x:.2}" y="{:.2}" text-anchor="middle">{}</text>"#, plot_bottom + 16.0, label);
    }

    let mut y = TOP;
    for (section, class, degree, tracks) in &groups {
        y += HEADER;
        let _ = writeln!(svg, r#"  <text class="group" x="6" y="{:.2}">H{} {}</text>"#, y - 6.0, degree, section);
        for t in tracks {
            y += TRACK;
            let x0 = scale.x(t.birth);
            let x1 = t.death.map(|d| scale.x(d)).unwrap_or(scale.right_edge() - 6.0);
            let _ = writeln!(svg, r#"  <g class="track {}" data-degree="{}">"#, class, degree);
            let _ = writeln!(svg, r#"    <line x1="{:.2}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="black" stroke-width="2"/>"#, x0, x1);
            dot(&mut svg, x0, y, t.left);
            match t.death {
                Some(_) => dot(&mut svg, x1, y, t.right),
                None => {
                    let tip = scale.right_edge();
                    let _ = writeln!(
                        svg,
                        r#"    <polygon class="end infinite" points="{:.2},{:.2} {:.2},{:.2} {:.2},{:.2}" fill="black"/>"#,
                        tip,
                        y,
                        tip - 8.0,
                        y - 4.0,
                        tip - 8.0,
                        y + 4.0
                    );
                }
            }
            let _ = writeln!(svg, "  </g>");
        }
    }
    let _ = writeln!(svg, "</svg>");
    svg
}

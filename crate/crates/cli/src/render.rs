//! Deterministic SVG figures.
//!
//! Geometry is drawn in world coordinates inside a `scale(1,-1)` group so the
//! y axis points up; labels sit outside the group so text is not mirrored.
//! Every number goes through [`fmt6`], so identical inputs give identical bytes.

use std::fmt::Write as _;

use tenpoint_core::scalar;
use tenpoint_core::{
    derive_figures, perspective_table, Circle, DerivedFigures, Point, WoodDesarguesConfiguration,
};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Layers {
    pub points: bool,
    pub circles: bool,
    pub perspectrices: bool,
    pub hagge_centres: bool,
    pub pentagon: bool,
}

impl Layers {
    pub const ALL: Layers =
        Layers { points: true, circles: true, perspectrices: true, hagge_centres: true, pentagon: true };
    pub const NONE: Layers =
        Layers { points: false, circles: false, perspectrices: false, hagge_centres: false, pentagon: false };

    /// Parses a comma list such as `points,circles`, or `all`.
    pub fn parse(text: &str) -> Result<Layers, CliError> {
        let mut layers = Layers::NONE;
        for name in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            match name {
                "all" => layers = Layers::ALL,
                "points" => layers.points = true,
                "circles" => layers.circles = true,
                "perspectrices" => layers.perspectrices = true,
                "haggeCentres" | "hagge" => layers.hagge_centres = true,
                "pentagon" => layers.pentagon = true,
                other => return Err(CliError::Parse(format!("unknown layer {other:?}"))),
            }
        }
        Ok(layers)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenderStyle {
    pub layers: Layers,
    /// Canvas width in pixels; the height follows the aspect ratio.
    pub size: u32,
    /// Fraction of the larger extent added on every side.
    pub margin: f64,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle { layers: Layers::ALL, size: 800, margin: 0.05 }
    }
}

/// Six decimals. Rust's formatter rounds exact ties to even.
pub fn fmt6(v: f64) -> String {
    let s = format!("{v:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

#[derive(Debug, Clone, Copy)]
struct P(f64, f64);

fn pt(p: &Point) -> P {
    let (x, y) = p.to_f64();
    P(x, y)
}

struct Bounds {
    min: P,
    max: P,
    empty: bool,
}

impl Bounds {
    fn new() -> Self {
        Bounds { min: P(f64::INFINITY, f64::INFINITY), max: P(f64::NEG_INFINITY, f64::NEG_INFINITY), empty: true }
    }

    fn add(&mut self, p: P, pad: f64) {
        self.empty = false;
        self.min = P(self.min.0.min(p.0 - pad), self.min.1.min(p.1 - pad));
        self.max = P(self.max.0.max(p.0 + pad), self.max.1.max(p.1 + pad));
    }
}

struct Disc {
    c: P,
    r: f64,
    class: &'static str,
}

fn disc(circle: &Circle, class: &'static str) -> Disc {
    Disc { c: pt(circle.center()), r: scalar::to_f64(circle.radius_sq()).sqrt(), class }
}

/// The two points of a collinear triple that lie furthest apart.
fn extremes(ps: [P; 3]) -> (P, P) {
    let d = |a: P, b: P| (a.0 - b.0).powi(2) + (a.1 - b.1).powi(2);
    let pairs = [(ps[0], ps[1]), (ps[0], ps[2]), (ps[1], ps[2])];
    pairs.into_iter().fold(pairs[0], |best, p| if d(p.0, p.1) > d(best.0, best.1) { p } else { best })
}

pub fn render_svg(config: &WoodDesarguesConfiguration, style: &RenderStyle) -> String {
    render_with(config, &derive_figures(config), style)
}

pub fn render_with(config: &WoodDesarguesConfiguration, figures: &DerivedFigures, style: &RenderStyle) -> String {
    let layers = style.layers;
    let mut discs = Vec::new();
    let mut segments = Vec::new();
    let mut marks: Vec<(P, String, &'static str)> = Vec::new();

    if layers.circles {
        discs.extend(config.circles().map(|(_, c)| disc(c, "circle")));
    }
    if layers.pentagon {
        if let Ok(pentagon) = &figures.pentagon {
            discs.push(disc(&pentagon.circle, "pentagon"));
        }
    }
    if layers.hagge_centres {
        for hagge in figures.hagge.values().flatten() {
            discs.push(disc(&hagge.circle, "hagge"));
        }
    }
    if layers.perspectrices {
        for row in perspective_table() {
            let ps = row.perspectrix.map(|l| pt(config.point(l)));
            segments.push(extremes(ps));
        }
    }
    if layers.points {
        marks.push((pt(config.j()), "J".into(), "point"));
        marks.extend(config.points().map(|(l, p)| (pt(p), l.name().to_string(), "point")));
    }
    if layers.pentagon {
        marks.extend(config.centers().map(|(l, p)| (pt(p), l.name().to_string(), "center")));
    }
    if layers.hagge_centres {
        for (v, hagge) in &figures.hagge {
            if let Ok(hagge) = hagge {
                marks.push((pt(&hagge.h), format!("h{}", v.name()), "hagge"));
            }
        }
    }

    let mut bounds = Bounds::new();
    for d in &discs {
        bounds.add(d.c, d.r);
    }
    for (a, b) in &segments {
        bounds.add(*a, 0.0);
        bounds.add(*b, 0.0);
    }
    for (p, _, _) in &marks {
        bounds.add(*p, 0.0);
    }
    if bounds.empty {
        bounds.add(P(0.0, 0.0), 1.0);
    }
    let extent = (bounds.max.0 - bounds.min.0).max(bounds.max.1 - bounds.min.1).max(1e-9);
    let pad = extent * style.margin;
    let (x0, y0) = (bounds.min.0 - pad, bounds.min.1 - pad);
    let (w, h) = (bounds.max.0 - bounds.min.0 + 2.0 * pad, bounds.max.1 - bounds.min.1 + 2.0 * pad);
    let height = ((f64::from(style.size) * h / w).round() as u32).max(1);
    let mark = extent * 0.008;
    let font = extent * 0.025;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="{} {} {} {}">"#,
        style.size,
        height,
        fmt6(x0),
        fmt6(-(y0 + h)),
        fmt6(w),
        fmt6(h)
    );
    out.push_str(
        "<style>.circle{stroke:#1f77b4}.pentagon{stroke:#d62728}.hagge{stroke:#2ca02c}\
         .perspectrix{stroke:#7f7f7f}.point{fill:#000}.center{fill:#d62728}.hagge-centre{fill:#2ca02c}</style>\n",
    );
    out.push_str("<g transform=\"scale(1,-1)\" fill=\"none\">\n");
    for d in &discs {
        let _ = writeln!(
            out,
            r#"<circle class="{}" cx="{}" cy="{}" r="{}" vector-effect="non-scaling-stroke"/>"#,
            d.class,
            fmt6(d.c.0),
            fmt6(d.c.1),
            fmt6(d.r)
        );
    }
    for (a, b) in &segments {
        let _ = writeln!(
            out,
            r#"<line class="perspectrix" x1="{}" y1="{}" x2="{}" y2="{}" vector-effect="non-scaling-stroke"/>"#,
            fmt6(a.0),
            fmt6(a.1),
            fmt6(b.0),
            fmt6(b.1)
        );
    }
    for (p, _, class) in &marks {
        let class = if *class == "hagge" { "hagge-centre" } else { class };
        let _ = writeln!(
            out,
            r#"<rect class="{}" x="{}" y="{}" width="{}" height="{}"/>"#,
            class,
            fmt6(p.0 - mark),
            fmt6(p.1 - mark),
            fmt6(2.0 * mark),
            fmt6(2.0 * mark)
        );
    }
    out.push_str("</g>\n");
    for (p, label, _) in &marks {
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" font-size="{}">{}</text>"#,
            fmt6(p.0 + mark),
            fmt6(-(p.1 + mark)),
            fmt6(font),
            label
        );
    }
    out.push_str("</svg>\n");
    out
}

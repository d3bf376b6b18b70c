// Copyright 2026 the Gion Sangaku Authors
// SPDX-License-Identifier: Apache-2.0

//! SVG drawings of the figure and of the compass construction that locates
//! the large circle's center.
//!
//! Geometry is laid out in the model frame of [`crate::geometry`] (y up)
//! and mapped once to the canvas by a [`Viewport`]. Output depends only on
//! the configuration and style: element order is fixed and every coordinate
//! is printed with six decimals.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::geometry::{metrics, Point, SegmentConfig, SegmentMetrics};

#[derive(Debug, Clone, PartialEq)]
pub struct RenderStyle {
    pub stroke_width: f64,
    /// Dash and gap lengths for the center-to-chord lines.
    pub dash_pattern: (f64, f64),
    pub canvas_width: f64,
    pub canvas_height: f64,
    pub margin: f64,
    pub show_labels: bool,
    pub font_size: f64,
    pub stroke_color: String,
    pub dash_color: String,
    pub construction_color: String,
}

impl Default for RenderStyle {
    fn default() -> Self {
        Self {
            stroke_width: 3.0,
            dash_pattern: (18.0, 10.0),
            canvas_width: 2400.0,
            canvas_height: 2000.0,
            margin: 80.0,
            show_labels: true,
            font_size: 56.0,
            stroke_color: "#1a1a1a".to_owned(),
            dash_color: "#a01818".to_owned(),
            construction_color: "#9a9a9a".to_owned(),
        }
    }
}

impl RenderStyle {
    pub fn validate(&self) -> Result<()> {
        let positive = |name: &'static str, v: f64| {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(Error::invalid(name, format!("must be positive, got {v}")))
            }
        };
        positive("stroke_width", self.stroke_width)?;
        positive("dash_pattern", self.dash_pattern.0)?;
        positive("dash_pattern", self.dash_pattern.1)?;
        positive("canvas_width", self.canvas_width)?;
        positive("canvas_height", self.canvas_height)?;
        positive("margin", self.margin)?;
        positive("font_size", self.font_size)?;
        if self.margin >= self.canvas_width.min(self.canvas_height) / 2.0 {
            return Err(Error::invalid(
                "margin",
                "must be less than half the smaller canvas side",
            ));
        }
        Ok(())
    }
}

/// Uniform scale plus translation from model to canvas, with the y flip.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Viewport {
    pub scale: f64,
    pub x0: f64,
    pub y0: f64,
}

impl Viewport {
    /// Fits the model-space bounding box of `points` inside the canvas
    /// margins, centered.
    pub fn fit(points: &[Point], style: &RenderStyle) -> Self {
        let (mut xmin, mut xmax) = (f64::INFINITY, f64::NEG_INFINITY);
        let (mut ymin, mut ymax) = (f64::INFINITY, f64::NEG_INFINITY);
        for p in points {
            xmin = xmin.min(p.x());
            xmax = xmax.max(p.x());
            ymin = ymin.min(p.y());
            ymax = ymax.max(p.y());
        }
        let width = (xmax - xmin).max(f64::MIN_POSITIVE);
        let height = (ymax - ymin).max(f64::MIN_POSITIVE);
        let scale = ((style.canvas_width - 2.0 * style.margin) / width)
            .min((style.canvas_height - 2.0 * style.margin) / height);
        Self {
            scale,
            x0: style.canvas_width / 2.0 - scale * (xmin + xmax) / 2.0,
            y0: style.canvas_height / 2.0 + scale * (ymin + ymax) / 2.0,
        }
    }

    pub fn to_canvas(&self, p: Point) -> (f64, f64) {
        (self.x0 + self.scale * p.x(), self.y0 - self.scale * p.y())
    }

    pub fn to_model(&self, x: f64, y: f64) -> Point {
        Point::new((x - self.x0) / self.scale, (self.y0 - y) / self.scale)
    }
}

/// Points of the compass construction for the large circle's center.
///
/// Two compass circles of radius `|TB|` centered at the arc apex `T` and
/// the right chord end `B` cross at `outer` and `inner`; the line through
/// them is the perpendicular bisector of `TB` and meets the extended
/// bisector of the chord at the center.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CenterConstruction {
    pub apex: Point,
    pub chord_left: Point,
    pub chord_right: Point,
    pub compass_radius: f64,
    pub outer: Point,
    pub inner: Point,
    pub center: Point,
}

pub fn center_construction(cfg: &SegmentConfig) -> CenterConstruction {
    let apex = cfg.apex();
    let (left, right) = cfg.chord_endpoints();
    let (dx, dy) = (right.x() - apex.x(), right.y() - apex.y());
    let rho = dx.hypot(dy);
    let (mx, my) = ((apex.x() + right.x()) / 2.0, (apex.y() + right.y()) / 2.0);
    // Unit normal to TB pointing away from the large circle's center.
    let (nx, ny) = (-dy / rho, dx / rho);
    let h = rho * 3f64.sqrt() / 2.0;
    let outer = Point::new(mx + h * nx, my + h * ny);
    let inner = Point::new(mx - h * nx, my - h * ny);
    // Intersect the line outer-inner with x = 0.
    let t = -outer.x() / (inner.x() - outer.x());
    let center = Point::new(0.0, outer.y() + t * (inner.y() - outer.y()));
    CenterConstruction {
        apex,
        chord_left: left,
        chord_right: right,
        compass_radius: rho,
        outer,
        inner,
        center,
    }
}

/// Half-width of each compass mark, in radians.
const COMPASS_SWEEP: f64 = 10.0 * std::f64::consts::PI / 180.0;
/// Diameter direction of the inscribed circle, radians from the chord.
const DIAMETER_ANGLE: f64 = std::f64::consts::FRAC_PI_4;

fn fmt6(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".to_owned()
    } else {
        s
    }
}

fn polar(c: Point, radius: f64, angle: f64) -> Point {
    Point::new(c.x() + radius * angle.cos(), c.y() + radius * angle.sin())
}

struct Svg<'a> {
    out: String,
    vp: Viewport,
    style: &'a RenderStyle,
}

impl Svg<'_> {
    fn xy(&self, p: Point) -> (String, String) {
        let (x, y) = self.vp.to_canvas(p);
        (fmt6(x), fmt6(y))
    }

    fn line(&mut self, class: &str, p: Point, q: Point, extra: &str) {
        let (x1, y1) = self.xy(p);
        let (x2, y2) = self.xy(q);
        let _ = writeln!(
            self.out,
            r#"    <line class="{class}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"{extra}/>"#
        );
    }

    /// Arc of `radius` from `from` to `to`; `ccw` is the model-space turn.
    fn arc(&mut self, class: &str, from: Point, to: Point, radius: f64, ccw: bool, extra: &str) {
        let (x1, y1) = self.xy(from);
        let (x2, y2) = self.xy(to);
        let rr = fmt6(radius * self.vp.scale);
        // The y flip turns a model counter-clockwise sweep into flag 0.
        let sweep = if ccw { 0 } else { 1 };
        let _ = writeln!(
            self.out,
            r#"    <path class="{class}" d="M {x1} {y1} A {rr} {rr} 0 0 {sweep} {x2} {y2}"{extra}/>"#
        );
    }

    fn polygon(&mut self, class: &str, pts: &[Point]) {
        let mut d = String::new();
        for (i, p) in pts.iter().enumerate() {
            let (x, y) = self.xy(*p);
            let _ = write!(d, "{}{x} {y} ", if i == 0 { "M " } else { "L " });
        }
        d.push('Z');
        let _ = writeln!(self.out, r#"    <path class="{class}" d="{d}"/>"#);
    }

    fn cross(&mut self, class: &str, c: Point) {
        let (x, y) = self.vp.to_canvas(c);
        let k = 3.0 * self.style.stroke_width;
        let _ = writeln!(
            self.out,
            r#"    <path class="{class}" d="M {} {} L {} {} M {} {} L {} {}"/>"#,
            fmt6(x - k),
            fmt6(y),
            fmt6(x + k),
            fmt6(y),
            fmt6(x),
            fmt6(y - k),
            fmt6(x),
            fmt6(y + k)
        );
    }

    fn label(&mut self, text: &str, at: Point) {
        let (x, y) = self.xy(at);
        let _ = writeln!(
            self.out,
            r#"    <text x="{x}" y="{y}" text-anchor="middle" dominant-baseline="middle">{text}</text>"#
        );
    }
}

struct Layout {
    cfg: SegmentConfig,
    mt: SegmentMetrics,
    construction: Option<CenterConstruction>,
}

impl Layout {
    fn new(cfg: &SegmentConfig, with_construction: bool) -> Self {
        Self {
            cfg: *cfg,
            mt: metrics(cfg),
            construction: with_construction.then(|| center_construction(cfg)),
        }
    }

    fn radius(&self) -> f64 {
        self.cfg.radius()
    }

    fn label_points(&self) -> Vec<(&'static str, Point)> {
        let mt = &self.mt;
        let gap = 0.06 * self.radius();
        let mut v = vec![
            ("a", Point::new(mt.a / 4.0, -gap)),
            ("m", Point::new(gap / 2.0, (mt.m + 2.0 * mt.r) / 2.0)),
            ("s", Point::new(-mt.s / 2.0, mt.s / 2.0)),
            ("r", Point::new(mt.r, mt.r * 0.45)),
        ];
        if let Some(c) = &self.construction {
            v.push(("O", Point::new(-gap, c.center.y() - gap / 2.0)));
        }
        v
    }

    fn bisector_bottom(&self, c: &CenterConstruction) -> Point {
        Point::new(0.0, c.center.y() - 0.12 * self.radius())
    }

    /// Far end of the drawn perpendicular, past both `inner` and the center.
    fn perpendicular_end(&self, c: &CenterConstruction) -> Point {
        let (dx, dy) = (c.inner.x() - c.outer.x(), c.inner.y() - c.outer.y());
        let len = dx.hypot(dy);
        let past = 0.08 * self.radius();
        let beyond_center = Point::new(
            c.center.x() + past * dx / len,
            c.center.y() + past * dy / len,
        );
        if c.outer.distance(&beyond_center) > c.outer.distance(&c.inner) {
            beyond_center
        } else {
            c.inner
        }
    }

    fn compass_marks(&self, c: &CenterConstruction) -> Vec<(Point, Point)> {
        let mut marks = Vec::with_capacity(4);
        for hub in [c.apex, c.chord_right] {
            for target in [c.outer, c.inner] {
                let phi = (target.y() - hub.y()).atan2(target.x() - hub.x());
                marks.push((
                    polar(hub, c.compass_radius, phi - COMPASS_SWEEP),
                    polar(hub, c.compass_radius, phi + COMPASS_SWEEP),
                ));
            }
        }
        marks
    }

    fn annotation_radius(&self) -> f64 {
        0.1 * self.radius()
    }

    fn annotation_anchor(&self, c: &CenterConstruction) -> Point {
        Point::new(0.0, c.center.y() + 2.0 * self.annotation_radius())
    }

    fn extent(&self) -> Vec<Point> {
        let mt = &self.mt;
        let (left, right) = self.cfg.chord_endpoints();
        let mut pts = vec![left, right, self.cfg.apex(), Point::new(-mt.s, mt.s)];
        pts.extend(self.label_points().into_iter().map(|(_, p)| p));
        if let Some(c) = &self.construction {
            pts.extend([
                c.outer,
                c.inner,
                c.center,
                self.bisector_bottom(c),
                self.perpendicular_end(c),
            ]);
            pts.extend(self.compass_marks(c).into_iter().flat_map(|(a, b)| [a, b]));
            pts.push(self.annotation_anchor(c));
        }
        pts
    }
}

/// The viewport used for a figure; exposed so callers can map rendered
/// coordinates back to the model frame.
pub fn figure_viewport(cfg: &SegmentConfig, style: &RenderStyle, figure: u8) -> Viewport {
    Viewport::fit(&Layout::new(cfg, figure == 7).extent(), style)
}

fn render(cfg: &SegmentConfig, style: &RenderStyle, with_construction: bool) -> Result<String> {
    style.validate()?;
    let layout = Layout::new(cfg, with_construction);
    let vp = Viewport::fit(&layout.extent(), style);
    let mt = layout.mt;
    let (w, h) = (fmt6(style.canvas_width), fmt6(style.canvas_height));
    let mut svg = Svg {
        out: String::new(),
        vp,
        style,
    };

    let _ = writeln!(
        svg.out,
        r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#
    );
    let _ = writeln!(
        svg.out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    let _ = writeln!(
        svg.out,
        "  <title>Circular segment, central angle {:.1}°</title>",
        cfg.central_degrees()
    );
    let _ = writeln!(
        svg.out,
        r#"  <g fill="none" stroke="{}" stroke-width="{}" stroke-linecap="round" stroke-linejoin="round">"#,
        style.stroke_color,
        fmt6(style.stroke_width)
    );

    let (left, right) = cfg.chord_endpoints();
    let apex = cfg.apex();
    svg.arc("arc", left, right, cfg.radius(), false, "");
    svg.line("chord", left, right, "");
    svg.line("bisector", Point::new(0.0, 0.0), apex, "");
    svg.polygon(
        "square",
        &[
            mt.square_origin,
            Point::new(0.0, 0.0),
            Point::new(0.0, mt.s),
            Point::new(-mt.s, mt.s),
        ],
    );
    let (cx, cy) = svg.xy(mt.circle_center);
    let _ = writeln!(
        svg.out,
        r#"    <circle class="inscribed" cx="{cx}" cy="{cy}" r="{}"/>"#,
        fmt6(mt.r * vp.scale)
    );
    let diameter = (
        polar(
            mt.circle_center,
            mt.r,
            DIAMETER_ANGLE + std::f64::consts::PI,
        ),
        polar(mt.circle_center, mt.r, DIAMETER_ANGLE),
    );
    svg.line("diameter", diameter.0, diameter.1, "");
    svg.cross("center-mark", mt.circle_center);

    if let Some(c) = layout.construction {
        let gray = format!(r#" stroke="{}""#, style.construction_color);
        svg.line(
            "bisector-extension",
            Point::new(0.0, 0.0),
            layout.bisector_bottom(&c),
            &gray,
        );
        for (from, to) in layout.compass_marks(&c) {
            svg.arc("compass", from, to, c.compass_radius, true, &gray);
        }
        svg.line(
            "perpendicular",
            c.outer,
            layout.perpendicular_end(&c),
            &gray,
        );
        let dashed = format!(
            r#" stroke="{}" stroke-dasharray="{} {}""#,
            style.dash_color,
            fmt6(style.dash_pattern.0),
            fmt6(style.dash_pattern.1)
        );
        svg.line("center-radius", c.center, c.chord_left, &dashed);
        svg.line("center-radius", c.center, c.chord_right, &dashed);
        let rho = layout.annotation_radius();
        let theta = cfg.half_angle();
        let half_pi = std::f64::consts::FRAC_PI_2;
        svg.arc(
            "central-angle",
            polar(c.center, rho, half_pi - theta),
            polar(c.center, rho, half_pi + theta),
            rho,
            true,
            "",
        );
        svg.cross("center-O", c.center);
    }
    let _ = writeln!(svg.out, "  </g>");

    let _ = writeln!(
        svg.out,
        r#"  <g font-family="serif" font-style="italic" font-size="{}" fill="{}">"#,
        fmt6(style.font_size),
        style.stroke_color
    );
    if style.show_labels {
        for (text, at) in layout.label_points() {
            svg.label(text, at);
        }
    }
    if let Some(c) = layout.construction {
        svg.label(
            &format!("{:.1}°", cfg.central_degrees()),
            layout.annotation_anchor(&c),
        );
    }
    let _ = writeln!(svg.out, "  </g>");
    let _ = writeln!(svg.out, "</svg>");
    Ok(svg.out)
}

/// The figure: arc, chord, bisector, square and the inscribed circle drawn
/// with a diameter through its marked center.
pub fn render_figure6(cfg: &SegmentConfig, style: &RenderStyle) -> Result<String> {
    render(cfg, style, false)
}

/// The figure plus the construction locating the large circle's center,
/// the two dashed center-to-chord lines and the central angle in degrees.
pub fn render_figure7(cfg: &SegmentConfig, style: &RenderStyle) -> Result<String> {
    render(cfg, style, true)
}

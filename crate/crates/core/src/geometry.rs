// Copyright 2026 the Gion Sangaku Authors
// SPDX-License-Identifier: Apache-2.0

//! Forward construction of the circular-segment figure.
//!
//! The figure is a minor circular segment of a large circle with radius `R`
//! and central angle `2θ`. The frame has its origin at the chord midpoint,
//! `x` along the chord and `y` toward the arc, so the large circle's center
//! sits at `(0, -R cos θ)`. The right half holds a circle tangent to the
//! chord, the bisector and the arc; the left half holds a square resting on
//! the chord against the bisector with its outer top corner on the arc.

use std::f64::consts::FRAC_PI_2;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::json::Num;

/// The two free parameters of the figure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SegmentConfig {
    radius: f64,
    half_angle: f64,
}

impl SegmentConfig {
    /// Builds a configuration from the large-circle radius and the half
    /// central angle in radians.
    pub fn new(radius: f64, half_angle: f64) -> Result<Self> {
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::InvalidRadius(radius));
        }
        if !(half_angle.is_finite() && half_angle > 0.0 && half_angle < FRAC_PI_2) {
            return Err(Error::HalfAngleOutOfRange { theta: half_angle });
        }
        Ok(Self { radius, half_angle })
    }

    /// Builds a configuration from a central angle given in degrees.
    pub fn from_central_degrees(radius: f64, central_deg: f64) -> Result<Self> {
        Self::new(radius, (central_deg / 2.0).to_radians())
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn half_angle(&self) -> f64 {
        self.half_angle
    }

    pub fn central_angle(&self) -> f64 {
        2.0 * self.half_angle
    }

    pub fn central_degrees(&self) -> f64 {
        self.central_angle().to_degrees()
    }

    /// Same shape, different radius.
    pub fn with_radius(&self, radius: f64) -> Result<Self> {
        Self::new(radius, self.half_angle)
    }

    /// Center of the large circle in the figure frame.
    pub fn big_center(&self) -> Point {
        Point::new(0.0, -self.radius * self.half_angle.cos())
    }

    /// Left and right chord endpoints.
    pub fn chord_endpoints(&self) -> (Point, Point) {
        let half = self.radius * self.half_angle.sin();
        (Point::new(-half, 0.0), Point::new(half, 0.0))
    }

    /// Top of the arc, where the bisector meets it.
    pub fn apex(&self) -> Point {
        Point::new(0.0, sagitta(self.radius, self.half_angle))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Point {
    pub x: Num,
    pub y: Num,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Self {
            x: Num(x),
            y: Num(y),
        }
    }

    pub fn x(&self) -> f64 {
        self.x.0
    }

    pub fn y(&self) -> f64 {
        self.y.0
    }

    pub fn distance(&self, other: &Point) -> f64 {
        (self.x() - other.x()).hypot(self.y() - other.y())
    }
}

/// All measures derived from a [`SegmentConfig`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SegmentMetrics {
    /// Large-circle radius.
    pub radius: f64,
    /// Half central angle in radians.
    pub theta: f64,
    /// Chord length.
    pub a: f64,
    /// Sagitta, the bisecting segment from chord midpoint to arc.
    pub m: f64,
    /// Inscribed-circle radius.
    pub r: f64,
    /// Square side.
    pub s: f64,
    /// Arc length.
    pub arc: f64,
    /// Central angle in radians.
    pub central: f64,
    pub circle_center: Point,
    /// Lower-left corner of the square.
    pub square_origin: Point,
}

impl SegmentMetrics {
    pub fn big_center(&self) -> Point {
        Point::new(0.0, -self.radius * self.theta.cos())
    }

    /// `a + m + s + r`.
    pub fn p(&self) -> f64 {
        self.a + self.m + self.s + self.r
    }

    /// `m/a + r/m + s/r`.
    pub fn q(&self) -> f64 {
        self.m / self.a + self.r / self.m + self.s / self.r
    }
}

impl Serialize for SegmentMetrics {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("SegmentMetrics", 10)?;
        st.serialize_field("R", &Num(self.radius))?;
        st.serialize_field("theta", &Num(self.theta))?;
        st.serialize_field("a", &Num(self.a))?;
        st.serialize_field("m", &Num(self.m))?;
        st.serialize_field("r", &Num(self.r))?;
        st.serialize_field("s", &Num(self.s))?;
        st.serialize_field("arc", &Num(self.arc))?;
        st.serialize_field("central", &Num(self.central))?;
        st.serialize_field("circle_center", &self.circle_center)?;
        st.serialize_field("square_origin", &self.square_origin)?;
        st.end()
    }
}

fn sagitta(radius: f64, theta: f64) -> f64 {
    let h = (theta / 2.0).sin();
    2.0 * radius * h * h
}

/// Computes every measure of the figure from closed forms.
///
/// The forms are rearranged to avoid cancellation as `θ → 0`:
/// `m = 2R sin²(θ/2)`, `r = 4R cos(θ/2) sin²(θ/4)` and
/// `s = R sin²θ / (cos θ + √(2 − cos²θ))`.
pub fn metrics(cfg: &SegmentConfig) -> SegmentMetrics {
    let big_r = cfg.radius;
    let theta = cfg.half_angle;
    let (sin_t, cos_t) = theta.sin_cos();
    let quarter = (theta / 4.0).sin();

    let a = 2.0 * big_r * sin_t;
    let m = sagitta(big_r, theta);
    let r = 4.0 * big_r * (theta / 2.0).cos() * quarter * quarter;
    let s = big_r * sin_t * sin_t / (cos_t + (2.0 - cos_t * cos_t).sqrt());

    SegmentMetrics {
        radius: big_r,
        theta,
        a,
        m,
        r,
        s,
        arc: 2.0 * big_r * theta,
        central: 2.0 * theta,
        circle_center: Point::new(r, r),
        square_origin: Point::new(-s, 0.0),
    }
}

/// Absolute residuals of the four contact conditions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TangencyResiduals {
    pub circle_chord: f64,
    pub circle_bisector: f64,
    pub circle_arc: f64,
    pub square_corner: f64,
}

impl TangencyResiduals {
    pub fn max(&self) -> f64 {
        self.circle_chord
            .max(self.circle_bisector)
            .max(self.circle_arc)
            .max(self.square_corner)
    }
}

/// Measures how far `metrics` is from satisfying each contact condition.
///
/// Only the stored center, radii and angle are used, so perturbed metrics
/// produce nonzero residuals.
pub fn tangency_residuals(metrics: &SegmentMetrics) -> TangencyResiduals {
    let o = metrics.big_center();
    let c = metrics.circle_center;
    let corner = Point::new(-metrics.s, metrics.s);
    TangencyResiduals {
        circle_chord: (c.y() - metrics.r).abs(),
        circle_bisector: (c.x() - metrics.r).abs(),
        circle_arc: (c.distance(&o) - (metrics.radius - metrics.r)).abs(),
        square_corner: (corner.distance(&o) - metrics.radius).abs(),
    }
}

/// The point equidistant from three distinct, non-collinear points.
///
/// Applied to the chord endpoints and the arc apex this is the compass
/// construction that locates the large circle's center.
pub fn circumcenter(p1: Point, p2: Point, p3: Point) -> Result<Point> {
    if p1 == p2 || p2 == p3 || p1 == p3 {
        return Err(Error::CoincidentPoints);
    }
    let (bx, by) = (p2.x() - p1.x(), p2.y() - p1.y());
    let (cx, cy) = (p3.x() - p1.x(), p3.y() - p1.y());
    let d = 2.0 * (bx * cy - by * cx);
    let scale = bx.hypot(by) * cx.hypot(cy);
    if !d.is_finite() || d.abs() <= 1e-14 * scale {
        return Err(Error::CollinearPoints);
    }
    let b2 = bx * bx + by * by;
    let c2 = cx * cx + cy * cy;
    let ux = (cy * b2 - by * c2) / d;
    let uy = (bx * c2 - cx * b2) / d;
    Ok(Point::new(p1.x() + ux, p1.y() + uy))
}

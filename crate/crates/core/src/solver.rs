// Copyright 2026 the Gion Sangaku Authors
// SPDX-License-Identifier: Apache-2.0

//! Inverse problem: recover every figure consistent with given `p` and `q`.
//!
//! `q = m/a + r/m + s/r` is a ratio of lengths and so depends only on the
//! half angle θ, while `p = a + m + s + r` is homogeneous of degree one in
//! the radius. Solving therefore splits into finding all θ with
//! `q(θ) = q` and then reading the radius off `p`.
//!
//! `q(θ)` is not monotone on `(0, π/2)`: it rises from 5/2, peaks near
//! θ ≈ 22°, dips near θ ≈ 54° and climbs toward `1/2 + (3/2)√2`. A target
//! value can thus have zero, one, two or three preimages, and all of them
//! are returned.

use std::f64::consts::FRAC_PI_2;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{metrics, SegmentConfig, SegmentMetrics};
use crate::json::Num;

/// Limit of `q(θ)` as `θ → 0⁺`.
///
/// With `a ≈ 2θ`, `m ≈ θ²/2`, `r ≈ θ²/4` and `s ≈ θ²/2` to leading order,
/// the three ratios tend to `0`, `1/2` and `2`.
pub const Q_INFIMUM: f64 = 2.5;

/// Limit of `q(θ)` as `θ → π/2⁻`.
///
/// At the semicircle `a = 2R`, `m = R`, `r = R(√2 − 1)` and `s = R/√2`, so
/// the ratios tend to `1/2`, `√2 − 1` and `1 + 1/√2`, which sum to
/// `1/2 + (3/2)√2`. The literal is the correctly rounded double; evaluating
/// the expression in `f64` lands one ulp above it.
pub const Q_SUPREMUM: f64 = 2.6213203435596424;

/// Distance kept from both ends of `(0, π/2)` when scanning.
const SCAN_MARGIN: f64 = 1e-9;

/// Tuning knobs for the scan-and-bisect root finder.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    /// Number of uniform samples used to locate the extrema of `q(θ)`.
    pub grid_size: usize,
    /// Bracket width, in radians, at which bisection stops.
    pub refine_tol: f64,
    /// Roots whose target lies this close to a local extremum value are
    /// flagged as near-double.
    pub extremum_tol: f64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            grid_size: 4096,
            refine_tol: 1e-13,
            extremum_tol: 1e-9,
        }
    }
}

impl SolverOptions {
    pub fn validate(&self) -> Result<()> {
        if self.grid_size < 64 {
            return Err(Error::invalid(
                "grid_size",
                format!("must be at least 64, got {}", self.grid_size),
            ));
        }
        if !(self.refine_tol.is_finite() && self.refine_tol > 0.0) {
            return Err(Error::invalid("refine_tol", "must be positive"));
        }
        if !(self.extremum_tol.is_finite() && self.extremum_tol > 0.0) {
            return Err(Error::invalid("extremum_tol", "must be positive"));
        }
        Ok(())
    }
}

/// One sample of the scale-invariant curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QCurveSample {
    pub theta: f64,
    pub q: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremumKind {
    Maximum,
    Minimum,
}

/// An interior local extremum of `q(θ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extremum {
    pub theta: f64,
    pub q: f64,
    pub kind: ExtremumKind,
}

/// A solution of `q(θ) = q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaRoot {
    pub theta: f64,
    /// The target sits within `extremum_tol` of an adjacent extremum, so a
    /// second root may be numerically indistinguishable from this one.
    pub near_double: bool,
}

/// One figure satisfying both constraints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveResult {
    pub radius: f64,
    pub theta: f64,
    pub a: f64,
    pub m: f64,
    pub r: f64,
    pub s: f64,
    pub p_check: f64,
    pub q_check: f64,
    pub near_double: bool,
}

impl SolveResult {
    pub fn central_degrees(&self) -> f64 {
        (2.0 * self.theta).to_degrees()
    }

    pub fn config(&self) -> Result<SegmentConfig> {
        SegmentConfig::new(self.radius, self.theta)
    }
}

impl Serialize for SolveResult {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("SolveResult", 9)?;
        st.serialize_field("R", &Num(self.radius))?;
        st.serialize_field("theta_rad", &Num(self.theta))?;
        st.serialize_field("theta_deg", &Num(self.theta.to_degrees()))?;
        st.serialize_field("central_deg", &Num(self.central_degrees()))?;
        st.serialize_field("a", &Num(self.a))?;
        st.serialize_field("m", &Num(self.m))?;
        st.serialize_field("r", &Num(self.r))?;
        st.serialize_field("s", &Num(self.s))?;
        st.serialize_field("near_double", &self.near_double)?;
        st.end()
    }
}

/// The full answer to a `(p, q)` query, as written to JSON.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolutionSet {
    pub p: Num,
    pub q: Num,
    pub solutions: Vec<SolveResult>,
    pub feasible_q_range: [Num; 2],
}

impl SolutionSet {
    pub fn new(p: f64, q: f64, solutions: Vec<SolveResult>) -> Self {
        Self {
            p: Num(p),
            q: Num(q),
            solutions,
            feasible_q_range: [Num(Q_INFIMUM), Num(Q_SUPREMUM)],
        }
    }
}

fn unit_metrics(theta: f64) -> SegmentMetrics {
    // Callers keep theta strictly inside (0, π/2).
    metrics(&SegmentConfig::new(1.0, theta).expect("scan stays inside (0, π/2)"))
}

/// `m/a + r/m + s/r` for the figure with half angle `theta`.
pub fn q_of_theta(theta: f64) -> Result<f64> {
    Ok(metrics(&SegmentConfig::new(1.0, theta)?).q())
}

/// `a + m + s + r` for the given figure.
pub fn p_of_config(cfg: &SegmentConfig) -> f64 {
    metrics(cfg).p()
}

/// Uniform samples of `q(θ)` over the scan interval.
pub fn sample_q_curve(grid_size: usize) -> Vec<QCurveSample> {
    let lo = SCAN_MARGIN;
    let hi = FRAC_PI_2 - SCAN_MARGIN;
    let last = (grid_size.max(2) - 1) as f64;
    (0..grid_size.max(2))
        .map(|i| {
            let theta = lo + (hi - lo) * (i as f64 / last);
            QCurveSample {
                theta,
                q: unit_metrics(theta).q(),
            }
        })
        .collect()
}

/// Interior local extrema of `q(θ)`, in ascending θ.
pub fn q_extrema(opts: &SolverOptions) -> Result<Vec<Extremum>> {
    opts.validate()?;
    Ok(find_extrema(&sample_q_curve(opts.grid_size)))
}

fn find_extrema(samples: &[QCurveSample]) -> Vec<Extremum> {
    let mut out = Vec::new();
    for w in samples.windows(3) {
        let (d0, d1) = (w[1].q - w[0].q, w[2].q - w[1].q);
        let kind = if d0 > 0.0 && d1 <= 0.0 {
            ExtremumKind::Maximum
        } else if d0 < 0.0 && d1 >= 0.0 {
            ExtremumKind::Minimum
        } else {
            continue;
        };
        let theta = golden_section(w[0].theta, w[2].theta, kind);
        out.push(Extremum {
            theta,
            q: unit_metrics(theta).q(),
            kind,
        });
    }
    out
}

fn golden_section(mut lo: f64, mut hi: f64, kind: ExtremumKind) -> f64 {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    // Minimize the negated curve for a maximum.
    let sign = match kind {
        ExtremumKind::Maximum => -1.0,
        ExtremumKind::Minimum => 1.0,
    };
    let f = |t: f64| sign * unit_metrics(t).q();
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..200 {
        if hi - lo <= 1e-15 {
            break;
        }
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    0.5 * (lo + hi)
}

/// Bisection on a bracket with `f(lo)` and `f(hi)` of opposite sign.
fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let lo_positive = f(lo) > 0.0;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm > 0.0) == lo_positive {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Every θ in `(0, π/2)` with `q(θ) = q`, sorted ascending.
///
/// The curve is split at its interior extrema into monotone pieces; each
/// piece holds at most one root, which is bracketed and bisected. An empty
/// list means `q` lies outside the attained range (see [`Q_INFIMUM`] and
/// [`Q_SUPREMUM`]).
pub fn solve_theta(q: f64, opts: &SolverOptions) -> Result<Vec<ThetaRoot>> {
    if !q.is_finite() {
        return Err(Error::invalid("q", format!("must be finite, got {q}")));
    }
    opts.validate()?;
    let samples = sample_q_curve(opts.grid_size);
    let extrema = find_extrema(&samples);

    let first = samples[0];
    let last = samples[samples.len() - 1];
    let mut breaks = Vec::with_capacity(extrema.len() + 2);
    breaks.push((first.theta, first.q, None));
    breaks.extend(extrema.iter().map(|e| (e.theta, e.q, Some(e))));
    breaks.push((last.theta, last.q, None));

    let f = |t: f64| unit_metrics(t).q() - q;
    let near = |e: Option<&Extremum>| e.is_some_and(|e| (q - e.q).abs() < opts.extremum_tol);

    let mut roots = Vec::new();
    let n_pieces = breaks.len() - 1;
    for (k, pair) in breaks.windows(2).enumerate() {
        let (t0, q0, e0) = pair[0];
        let (t1, q1, e1) = pair[1];
        let (f0, f1) = (q0 - q, q1 - q);
        let theta = if f0 == 0.0 {
            Some(t0)
        } else if f0 * f1 < 0.0 {
            Some(bisect(f, t0, t1, opts.refine_tol))
        } else if f1 == 0.0 && k + 1 == n_pieces {
            Some(t1)
        } else {
            None
        };
        if let Some(theta) = theta {
            roots.push(ThetaRoot {
                theta,
                near_double: near(e0) || near(e1),
            });
        }
    }
    Ok(roots)
}

/// Every figure whose `p` and `q` equal the given values.
///
/// Shape comes from [`solve_theta`]; the radius of each shape is
/// `p / p(R = 1, θ)`. The list follows the order of the θ roots and is
/// empty, not an error, when `q` is unattainable.
pub fn solve_pq(p: f64, q: f64, opts: &SolverOptions) -> Result<Vec<SolveResult>> {
    if !(p.is_finite() && p > 0.0) {
        return Err(Error::invalid(
            "p",
            format!("must be positive and finite, got {p}"),
        ));
    }
    let roots = solve_theta(q, opts)?;
    roots
        .into_iter()
        .map(|root| {
            let unit = unit_metrics(root.theta);
            let radius = p / unit.p();
            let mt = metrics(&SegmentConfig::new(radius, root.theta)?);
            Ok(SolveResult {
                radius,
                theta: root.theta,
                a: mt.a,
                m: mt.m,
                r: mt.r,
                s: mt.s,
                p_check: mt.p(),
                q_check: mt.q(),
                near_double: root.near_double,
            })
        })
        .collect()
}

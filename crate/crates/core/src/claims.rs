// Copyright 2026 the Gion Sangaku Authors
// SPDX-License-Identifier: Apache-2.0

//! Checks of the two construction identities `a = 2r + 2m` and `R = 2s`.
//!
//! Neither identity holds exactly at a central angle of 140°; each holds at
//! its own angle a little below it. The report gives both angles and the
//! residuals at 140° so a protractor reading can be judged against them.

use std::f64::consts::FRAC_PI_2;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{metrics, SegmentConfig};
use crate::json::Num;

/// Central angle measured on the tablet, in degrees.
pub const PROTRACTOR_CENTRAL_DEG: f64 = 140.0;

/// Default angular tolerance for a hand protractor, in degrees.
pub const DEFAULT_TOLERANCE_DEG: f64 = 3.5;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClaimReport {
    /// Central angle, degrees, at which `a = 2r + 2m`.
    pub central_chord_identity: f64,
    /// Central angle, degrees, at which `R = 2s`.
    pub central_square_identity: f64,
    /// `a − 2r − 2m` at `R = 1`, central 140°.
    pub chord_residual_at_140: f64,
    /// `R − 2s` at `R = 1`, central 140°.
    pub square_residual_at_140: f64,
    pub protractor_consistent: bool,
    pub tolerance_deg: f64,
}

impl Serialize for ClaimReport {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("ClaimReport", 6)?;
        st.serialize_field("central_chord_identity", &Num(self.central_chord_identity))?;
        st.serialize_field(
            "central_square_identity",
            &Num(self.central_square_identity),
        )?;
        st.serialize_field("chord_residual_at_140", &Num(self.chord_residual_at_140))?;
        st.serialize_field("square_residual_at_140", &Num(self.square_residual_at_140))?;
        st.serialize_field("protractor_consistent", &self.protractor_consistent)?;
        st.serialize_field("tolerance_deg", &Num(self.tolerance_deg))?;
        st.end()
    }
}

/// `a − 2r − 2m` for the figure with half angle `theta`, radius `radius`.
pub fn chord_identity_residual(radius: f64, theta: f64) -> Result<f64> {
    let mt = metrics(&SegmentConfig::new(radius, theta)?);
    Ok(mt.a - 2.0 * mt.r - 2.0 * mt.m)
}

/// `R − 2s` for the figure with half angle `theta`, radius `radius`.
pub fn square_identity_residual(radius: f64, theta: f64) -> Result<f64> {
    let mt = metrics(&SegmentConfig::new(radius, theta)?);
    Ok(radius - 2.0 * mt.s)
}

/// Half angle at which `a = 2r + 2m`.
///
/// The residual is positive for small angles and negative near π/2 with a
/// single crossing, located here by bisection.
pub fn theta_chord_identity() -> f64 {
    let f = |t: f64| chord_identity_residual(1.0, t).expect("bracket inside (0, π/2)");
    let (mut lo, mut hi) = (1e-6, FRAC_PI_2 - 1e-6);
    while hi - lo > 1e-15 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Half angle at which `R = 2s`.
///
/// With the square corner `(−s, s)` on the circle centered at
/// `(0, −R cos θ)`: `2s² + 2sR cos θ − R² sin²θ = 0`. Setting `s = R/2`
/// leaves `cos²θ + cos θ − 1/2 = 0`, whose root in `(0, 1)` is
/// `cos θ = (√3 − 1)/2`.
pub fn theta_square_identity() -> f64 {
    ((3f64.sqrt() - 1.0) / 2.0).acos()
}

/// Assembles the report for a given protractor tolerance in degrees.
pub fn verify_construction_claims(tolerance_deg: f64) -> Result<ClaimReport> {
    if !(tolerance_deg.is_finite() && tolerance_deg > 0.0) {
        return Err(Error::invalid(
            "tolerance_deg",
            format!("must be positive, got {tolerance_deg}"),
        ));
    }
    let central_chord = (2.0 * theta_chord_identity()).to_degrees();
    let central_square = (2.0 * theta_square_identity()).to_degrees();
    let theta_140 = (PROTRACTOR_CENTRAL_DEG / 2.0).to_radians();
    let within = |deg: f64| (deg - PROTRACTOR_CENTRAL_DEG).abs() <= tolerance_deg;
    Ok(ClaimReport {
        central_chord_identity: central_chord,
        central_square_identity: central_square,
        chord_residual_at_140: chord_identity_residual(1.0, theta_140)?,
        square_residual_at_140: square_identity_residual(1.0, theta_140)?,
        protractor_consistent: within(central_chord) && within(central_square),
        tolerance_deg,
    })
}

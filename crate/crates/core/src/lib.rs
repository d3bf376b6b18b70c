// Copyright 2026 the Gion Sangaku Authors
// SPDX-License-Identifier: Apache-2.0

//! Solver and verifier for the Gion Shrine circular-segment figure.
//!
//! * [`geometry`] builds the figure from a radius and half central angle.
//! * [`solver`] recovers every figure with given `p = a + m + s + r` and
//!   `q = m/a + r/m + s/r`.
//! * [`claims`] locates the angles at which `a = 2r + 2m` and `R = 2s`.
//! * [`interpretations`] holds the published renditions of the tablet and
//!   the perimeter/circumference lines.
//! * [`render`] draws the figure and the center construction as SVG.
//! * [`cli`] is the command-line front end.

pub mod claims;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod interpretations;
pub mod json;
pub mod render;
pub mod solver;

pub use error::{Error, Result};
pub use geometry::{
    circumcenter, metrics, tangency_residuals, Point, SegmentConfig, SegmentMetrics,
};
pub use solver::{p_of_config, q_of_theta, solve_pq, solve_theta, SolveResult, SolverOptions};

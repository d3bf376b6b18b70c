// Copyright 2026 the Gion Sangaku Authors
// SPDX-License-Identifier: Apache-2.0

//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by construction, solving, verification and rendering.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The large-circle radius was not a positive finite number.
    #[error("radius must be positive and finite, got {0}")]
    InvalidRadius(f64),

    /// The half central angle fell outside the open interval (0, π/2).
    #[error(
        "half angle {theta} rad is outside (0, π/2): the central angle must lie in (0°, 180°), got {}°",
        2.0 * theta.to_degrees()
    )]
    HalfAngleOutOfRange { theta: f64 },

    /// Three points on one line have no finite circumcenter.
    #[error("points are collinear; no finite circumcenter exists")]
    CollinearPoints,

    /// Two of the three points passed to a circumcenter query coincide.
    #[error("points must be pairwise distinct")]
    CoincidentPoints,

    /// A length, ratio or tolerance argument was out of its domain.
    #[error("invalid {name}: {reason}")]
    InvalidArgument { name: &'static str, reason: String },

    /// An interpretation id that is not in the registry.
    #[error("unknown interpretation id {0:?}")]
    UnknownInterpretation(String),

    /// A text report could not be mapped back to measures.
    #[error("malformed report: {0}")]
    MalformedReport(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidArgument {
            name,
            reason: reason.into(),
        }
    }
}

// Copyright 2026 the Gion Sangaku Authors
// SPDX-License-Identifier: Apache-2.0

//! Command-line front end.
//!
//! [`run`] parses arguments and returns the exit status together with the
//! text destined for standard out and standard error, so the binary is a
//! thin wrapper and the behavior is testable in-process. Nothing is written
//! to standard out on failure.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::claims::{verify_construction_claims, DEFAULT_TOLERANCE_DEG};
use crate::error::{Error, Result};
use crate::geometry::{metrics, SegmentConfig};
use crate::interpretations::{haiku_with, render_solution, InterpretationId, PiSymbol};
use crate::render::{render_figure6, render_figure7, RenderStyle};
use crate::solver::{solve_pq, SolutionSet, SolverOptions, Q_INFIMUM, Q_SUPREMUM};

#[derive(Debug, Parser)]
#[command(
    name = "gion",
    version,
    about = "Gion Shrine circular-segment solver and verifier"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print every measure of the figure.
    Construct {
        #[command(flatten)]
        figure: FigureArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Recover every figure with the given p and q.
    Solve {
        #[arg(long, allow_negative_numbers = true)]
        p: f64,
        #[arg(long, allow_negative_numbers = true)]
        q: f64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Notation used for text output.
        #[arg(long, default_value = "paper_own", value_parser = parse_interpretation)]
        interpretation: InterpretationId,
    },
    /// Report where a = 2r + 2m and R = 2s hold and how far off 140° is.
    Verify {
        #[arg(long, default_value_t = DEFAULT_TOLERANCE_DEG, allow_negative_numbers = true)]
        tolerance_deg: f64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the perimeter and circumference lines with their values.
    Haiku {
        #[command(flatten)]
        figure: FigureArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write π as "pi".
        #[arg(long)]
        ascii_pi: bool,
    },
    /// Write an SVG drawing of the figure (6) or the center construction (7).
    Render {
        #[command(flatten)]
        figure: FigureArgs,
        /// 6 for the figure, 7 for the center construction.
        #[arg(long = "figure", id = "figure_number", default_value_t = 6, value_parser = clap::value_parser!(u8).range(6..=7))]
        figure_number: u8,
        #[arg(long = "out")]
        out_path: PathBuf,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false, id = "angle")]
struct AngleArgs {
    /// Central angle in degrees.
    #[arg(long, allow_negative_numbers = true)]
    central_deg: Option<f64>,
    /// Half central angle in radians.
    #[arg(long, allow_negative_numbers = true)]
    theta_rad: Option<f64>,
}

#[derive(Debug, Args)]
struct FigureArgs {
    #[command(flatten)]
    angle: AngleArgs,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    radius: f64,
}

impl FigureArgs {
    fn config(&self) -> Result<SegmentConfig> {
        match (self.angle.central_deg, self.angle.theta_rad) {
            (Some(deg), None) => SegmentConfig::from_central_degrees(self.radius, deg),
            (None, Some(theta)) => SegmentConfig::new(self.radius, theta),
            _ => unreachable!("clap enforces exactly one angle flag"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn parse_interpretation(s: &str) -> std::result::Result<InterpretationId, String> {
    s.parse::<InterpretationId>().map_err(|e| e.to_string())
}

/// Exit status and captured output streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the CLI on `argv`, whose first element is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    status: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    status: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(stdout) => Outcome {
            status: 0,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            status: 1,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String> {
    let mut s =
        serde_json::to_string_pretty(value).map_err(|e| Error::invalid("json", e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn dispatch(command: Command) -> Result<String> {
    let mut out = String::new();
    match command {
        Command::Construct { figure, format } => {
            let cfg = figure.config()?;
            let mt = metrics(&cfg);
            match format {
                Format::Json => out = to_json(&mt)?,
                Format::Text => {
                    let _ = writeln!(out, "R       = {}", mt.radius);
                    let _ = writeln!(
                        out,
                        "central = {:.6}° ({} rad)",
                        cfg.central_degrees(),
                        mt.central
                    );
                    let _ = writeln!(out, "theta   = {} rad", mt.theta);
                    let _ = writeln!(out, "a       = {}", mt.a);
                    let _ = writeln!(out, "m       = {}", mt.m);
                    let _ = writeln!(out, "r       = {}", mt.r);
                    let _ = writeln!(out, "s       = {}", mt.s);
                    let _ = writeln!(out, "arc     = {}", mt.arc);
                    let _ = writeln!(out, "p       = {}", mt.p());
                    let _ = writeln!(out, "q       = {}", mt.q());
                }
            }
        }
        Command::Solve {
            p,
            q,
            format,
            interpretation,
        } => {
            let solutions = solve_pq(p, q, &SolverOptions::default())?;
            match format {
                Format::Json => out = to_json(&SolutionSet::new(p, q, solutions))?,
                Format::Text => {
                    let _ = writeln!(out, "p = {p}, q = {q}: {} solution(s)", solutions.len());
                    if solutions.is_empty() {
                        let _ = writeln!(
                            out,
                            "q is not attained; the feasible q range is ({Q_INFIMUM}, {Q_SUPREMUM})"
                        );
                    }
                    for (i, res) in solutions.iter().enumerate() {
                        let _ = writeln!(out, "\n[{}]", i + 1);
                        out.push_str(&render_solution(res, interpretation.as_str())?);
                    }
                }
            }
        }
        Command::Verify {
            tolerance_deg,
            format,
        } => {
            let report = verify_construction_claims(tolerance_deg)?;
            match format {
                Format::Json => out = to_json(&report)?,
                Format::Text => {
                    let _ = writeln!(
                        out,
                        "a = 2r + 2m holds at central angle {:.6}°",
                        report.central_chord_identity
                    );
                    let _ = writeln!(
                        out,
                        "R = 2s      holds at central angle {:.6}°",
                        report.central_square_identity
                    );
                    let _ = writeln!(
                        out,
                        "at 140°, R = 1: a - (2r + 2m) = {}",
                        report.chord_residual_at_140
                    );
                    let _ = writeln!(
                        out,
                        "at 140°, R = 1: R - 2s        = {}",
                        report.square_residual_at_140
                    );
                    let _ = writeln!(
                        out,
                        "protractor reading of 140° consistent within {}°: {}",
                        report.tolerance_deg, report.protractor_consistent
                    );
                }
            }
        }
        Command::Haiku {
            figure,
            format,
            ascii_pi,
        } => {
            let cfg = figure.config()?;
            let pi = if ascii_pi {
                PiSymbol::Ascii
            } else {
                PiSymbol::Greek
            };
            let lines = haiku_with(&cfg, pi);
            match format {
                Format::Json => out = to_json(&lines)?,
                Format::Text => {
                    let _ = writeln!(
                        out,
                        "values at unit radius, central angle {:.1}°",
                        cfg.central_degrees()
                    );
                    let _ = writeln!(out, "{:<16} = {}", lines.line1_expr, lines.line1_val);
                    let _ = writeln!(out, "{:<16} = {}", lines.line2_expr, lines.line2_val);
                    let _ = writeln!(out, "{:<16} = {}", lines.line3_expr, lines.line3_val);
                    let _ = writeln!(
                        out,
                        "exact perimeter a + arc = {}",
                        lines.exact_perimeter_line2
                    );
                }
            }
        }
        Command::Render {
            figure,
            figure_number,
            out_path,
        } => {
            let cfg = figure.config()?;
            let style = RenderStyle::default();
            let which = figure_number;
            let svg = if which == 7 {
                render_figure7(&cfg, &style)?
            } else {
                render_figure6(&cfg, &style)?
            };
            std::fs::write(&out_path, svg)
                .map_err(|e| Error::invalid("out", format!("{}: {e}", out_path.display())))?;
            let _ = writeln!(out, "wrote figure {which} to {}", out_path.display());
        }
    }
    Ok(out)
}

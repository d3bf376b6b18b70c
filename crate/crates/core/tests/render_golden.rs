// Copyright 2026 the Gion Sangaku Authors
// SPDX-License-Identifier: Apache-2.0

//! Golden-file and geometric-fidelity checks for the SVG output.
//!
//! Set `UPDATE_GOLDEN=1` to rewrite the golden files.

use std::path::PathBuf;

use gion::geometry::{circumcenter, metrics, SegmentConfig};
use gion::render::{figure_viewport, render_figure6, render_figure7, RenderStyle, Viewport};

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn check_golden(name: &str, actual: &str) {
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
    }
    let expected = std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert!(
        expected == actual.as_bytes(),
        "{name} differs from golden file"
    );
}

fn cfg140() -> SegmentConfig {
    SegmentConfig::from_central_degrees(1.0, 140.0).unwrap()
}

/// Pulls the numeric value of `attr="…"` from an element line.
fn attr(line: &str, name: &str) -> f64 {
    let key = format!(" {name}=\"");
    let start = line
        .find(&key)
        .unwrap_or_else(|| panic!("{name} in {line}"))
        + key.len();
    let end = start + line[start..].find('"').unwrap();
    line[start..end].parse().unwrap()
}

fn element<'a>(svg: &'a str, class: &str) -> Vec<&'a str> {
    let key = format!("class=\"{class}\"");
    svg.lines().filter(|l| l.contains(&key)).collect()
}

/// Path data numbers, ignoring command letters.
fn path_numbers(line: &str) -> Vec<f64> {
    let start = line.find(" d=\"").unwrap() + 4;
    let end = start + line[start..].find('"').unwrap();
    line[start..end]
        .split_whitespace()
        .filter_map(|t| t.parse().ok())
        .collect()
}

#[test]
fn figure6_golden() {
    check_golden(
        "figure6.svg",
        &render_figure6(&cfg140(), &RenderStyle::default()).unwrap(),
    );
}

#[test]
fn figure7_golden() {
    check_golden(
        "figure7.svg",
        &render_figure7(&cfg140(), &RenderStyle::default()).unwrap(),
    );
}

#[test]
fn output_is_deterministic() {
    let style = RenderStyle::default();
    for deg in [60.0, 140.0, 170.0] {
        let cfg = SegmentConfig::from_central_degrees(2.5, deg).unwrap();
        assert_eq!(
            render_figure6(&cfg, &style).unwrap(),
            render_figure6(&cfg, &style).unwrap()
        );
        assert_eq!(
            render_figure7(&cfg, &style).unwrap(),
            render_figure7(&cfg, &style).unwrap()
        );
    }
}

fn model(vp: &Viewport, x: f64, y: f64) -> (f64, f64) {
    let p = vp.to_model(x, y);
    (p.x(), p.y())
}

#[test]
fn rendered_geometry_matches_model() {
    const TOL: f64 = 0.5e-6;
    let style = RenderStyle::default();
    for deg in [40.0, 100.0, 140.0, 175.0] {
        for figure in [6u8, 7] {
            let cfg = SegmentConfig::from_central_degrees(1.0, deg).unwrap();
            let mt = metrics(&cfg);
            let vp = figure_viewport(&cfg, &style, figure);
            let svg = if figure == 6 {
                render_figure6(&cfg, &style).unwrap()
            } else {
                render_figure7(&cfg, &style).unwrap()
            };

            let circle = element(&svg, "inscribed")[0];
            let (cx, cy) = model(&vp, attr(circle, "cx"), attr(circle, "cy"));
            assert!((cx - mt.r).abs() < TOL && (cy - mt.r).abs() < TOL);
            assert!((attr(circle, "r") / vp.scale - mt.r).abs() < TOL);

            let chord = element(&svg, "chord")[0];
            let (x1, y1) = model(&vp, attr(chord, "x1"), attr(chord, "y1"));
            let (x2, y2) = model(&vp, attr(chord, "x2"), attr(chord, "y2"));
            assert!((x1 + mt.a / 2.0).abs() < TOL && y1.abs() < TOL);
            assert!((x2 - mt.a / 2.0).abs() < TOL && y2.abs() < TOL);

            let bisector = element(&svg, "bisector")[0];
            let (_, top) = model(&vp, attr(bisector, "x2"), attr(bisector, "y2"));
            assert!((top - mt.m).abs() < TOL);

            let arc = path_numbers(element(&svg, "arc")[0]);
            assert!((arc[2] / vp.scale - mt.radius).abs() < TOL);

            let sq = path_numbers(element(&svg, "square")[0]);
            let corners: Vec<(f64, f64)> = sq.chunks(2).map(|c| model(&vp, c[0], c[1])).collect();
            let expect = [(-mt.s, 0.0), (0.0, 0.0), (0.0, mt.s), (-mt.s, mt.s)];
            for (got, want) in corners.iter().zip(expect) {
                assert!((got.0 - want.0).abs() < TOL && (got.1 - want.1).abs() < TOL);
            }

            // Every drawn coordinate lies inside the canvas.
            for line in svg.lines().filter(|l| l.contains("class=")) {
                for key in ["x1", "y1", "x2", "y2", "cx", "cy"] {
                    if line.contains(&format!(" {key}=\"")) {
                        let v = attr(line, key);
                        let bound = if key.starts_with('x') || key == "cx" {
                            style.canvas_width
                        } else {
                            style.canvas_height
                        };
                        assert!((0.0..=bound).contains(&v), "{key}={v} in {line}");
                    }
                }
            }
        }
    }
}

#[test]
fn rendered_center_is_circumcenter() {
    let cfg = cfg140();
    let style = RenderStyle::default();
    let vp = figure_viewport(&cfg, &style, 7);
    let svg = render_figure7(&cfg, &style).unwrap();
    let (left, right) = cfg.chord_endpoints();
    let o = circumcenter(left, right, cfg.apex()).unwrap();
    let radii = element(&svg, "center-radius");
    assert_eq!(radii.len(), 2);
    for line in radii {
        let (x, y) = model(&vp, attr(line, "x1"), attr(line, "y1"));
        assert!(
            (x - o.x()).abs() <= 1e-9 && (y - o.y()).abs() <= 1e-9,
            "({x}, {y}) vs {o:?}"
        );
    }
}

// Copyright 2026 the Gion Sangaku Authors
// SPDX-License-Identifier: Apache-2.0

//! The published renditions of the tablet and the perimeter/circumference
//! expressions read from its figure.
//!
//! The renditions disagree on symbols: some call the square's side `d`,
//! one uses `d` for the small circle's diameter. A report can be rendered in
//! any rendition's notation and read back without loss.

use std::f64::consts::PI;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{metrics, SegmentConfig};
use crate::json::Num;
use crate::solver::SolveResult;

/// Registry key of a rendition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InterpretationId {
    FukagawaRothman,
    DereynaClark,
    CutTheKnot,
    OconnorRobertson,
    PaperOwn,
}

impl InterpretationId {
    pub const ALL: [InterpretationId; 5] = [
        InterpretationId::FukagawaRothman,
        InterpretationId::DereynaClark,
        InterpretationId::CutTheKnot,
        InterpretationId::OconnorRobertson,
        InterpretationId::PaperOwn,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            InterpretationId::FukagawaRothman => "fukagawa_rothman",
            InterpretationId::DereynaClark => "dereyna_clark",
            InterpretationId::CutTheKnot => "cut_the_knot",
            InterpretationId::OconnorRobertson => "oconnor_robertson",
            InterpretationId::PaperOwn => "paper_own",
        }
    }
}

impl std::str::FromStr for InterpretationId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        InterpretationId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownInterpretation(s.to_owned()))
    }
}

impl std::fmt::Display for InterpretationId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One rendition of the tablet: its notation and its wording.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Interpretation {
    pub id: InterpretationId,
    /// Symbol for the square's side.
    pub square_symbol: &'static str,
    /// Symbol for the small circle; a diameter when `uses_diameter_marker`.
    pub circle_symbol: &'static str,
    pub uses_diameter_marker: bool,
    pub p_formula_text: &'static str,
    pub q_formula_text: &'static str,
    /// The rendition's full formula sentence, lead-in included.
    pub formula_statement: &'static str,
    pub description_text: &'static str,
    pub source: &'static str,
}

static REGISTRY: [Interpretation; 5] = [
    Interpretation {
        id: InterpretationId::FukagawaRothman,
        square_symbol: "d",
        circle_symbol: "r",
        uses_diameter_marker: false,
        p_formula_text: "p = a + m + d + r",
        q_formula_text: "q = m/a + r/m + d/r",
        formula_statement: "Then, if p = a + m + d + r and q = m/a + r/m + d/r, \
                            find a, m, d, and r in terms of p and q.",
        description_text: "We have a segment of a circle. The line segment m bisects the arc and \
                           chord AB. As shown, we draw a square with side d and an inscribed circle \
                           of the radius r. Let length AB = a.",
        source: "H. Fukagawa, T. Rothman, Sacred Mathematics: Japanese Temple Geometry (2008)",
    },
    Interpretation {
        id: InterpretationId::DereynaClark,
        square_symbol: "s",
        circle_symbol: "d",
        uses_diameter_marker: true,
        p_formula_text: "p = a + m + s + d",
        q_formula_text: "q = m/a + d/m + s/d",
        formula_statement: "Then, if p = a + m + s + d and q = m/a + d/m + s/d, \
                            find a, m, s, and d in terms of p and q.",
        description_text: "We have a segment of a circle. The line segment m bisects the arc and \
                           chord AB. As shown, we draw a square with side s and an inscribed circle \
                           of diameter d. Let the length AB = a.",
        source: "J. A. de Reyna, D. Clark, A Modern Solution To The Gion Shrine Problem (2013)",
    },
    Interpretation {
        id: InterpretationId::CutTheKnot,
        square_symbol: "d",
        circle_symbol: "r",
        uses_diameter_marker: false,
        p_formula_text: "p = a + m + d + r",
        q_formula_text: "q = m/a + r/m + d/r",
        formula_statement: "Form p = a + m + d + r and q = m/a + r/m + d/r. \
                            The task is to express a, m, d, and r in terms of p and q.",
        description_text: "In a circular segment with base AB of length a and altitude m, there are \
                           a circle of radius r inscribed in one half of the segment and a square of \
                           side d inscribed in the other half, as shown.",
        source: "Cut-the-Knot, Gion Shrine Problem",
    },
    Interpretation {
        id: InterpretationId::OconnorRobertson,
        square_symbol: "d",
        circle_symbol: "r",
        uses_diameter_marker: false,
        p_formula_text: "p = a + m + d + r",
        q_formula_text: "q = m/a + r/m + d/r",
        formula_statement: "Put p = a + m + d + r, and q = m/a + r/m + d/r. \
                            The problem requires that we express a, m, d, and r in terms of p and q.",
        description_text: "In this figure we have a segment of a circle on the chord AB of length a. \
                           From the mid-point of AB we draw a line perpendicular to AB to meet the \
                           circle. It has length m. To the left of this line we draw a square of \
                           side d, as shown, and to the right we draw a circle of radius r, as shown.",
        source: "J. J. O'Connor, E. F. Robertson, Chokuyen Naonobu Ajima",
    },
    Interpretation {
        id: InterpretationId::PaperOwn,
        square_symbol: "s",
        circle_symbol: "r",
        uses_diameter_marker: true,
        p_formula_text: "p = a + m + s + r",
        q_formula_text: "q = m/a + r/m + s/r",
        formula_statement: "Using p = a + m + s + r and q = m/a + r/m + s/r, \
                            express a, m, s, and r in terms of p and q.",
        description_text: "A minor circular segment on chord a with bisector m. The right half holds \
                           a circle of radius r drawn with a diameter through its marked center; the \
                           left half holds a square of side s resting on a, touching m and the arc.",
        source: "Gion Shrine figure with unlabeled chord ends",
    },
];

/// The five registered renditions, in fixed order.
pub fn list_interpretations() -> &'static [Interpretation] {
    &REGISTRY
}

pub fn interpretation(id: InterpretationId) -> &'static Interpretation {
    REGISTRY
        .iter()
        .find(|i| i.id == id)
        .expect("every id is registered")
}

/// Looks an interpretation up by its string id.
pub fn find_interpretation(id: &str) -> Result<&'static Interpretation> {
    Ok(interpretation(id.parse()?))
}

/// Four measures recovered from a rendered report.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Measures {
    pub a: f64,
    pub m: f64,
    pub r: f64,
    pub s: f64,
}

/// Renders a solution in the notation of the rendition `id`.
///
/// Values are printed in shortest round-trip form, so
/// [`read_measures`] recovers them exactly.
pub fn render_solution(result: &SolveResult, id: &str) -> Result<String> {
    let it = find_interpretation(id)?;
    let mut out = String::new();
    let w = &mut out;
    // Writing to a String cannot fail.
    let _ = writeln!(w, "interpretation: {}", it.id);
    let _ = writeln!(w, "statement: {}", it.formula_statement);
    let _ = writeln!(
        w,
        "figure: R = {}, central angle = {:.6}°{}",
        result.radius,
        result.central_degrees(),
        if result.near_double {
            " (near-double root)"
        } else {
            ""
        }
    );
    let _ = writeln!(w, "a = {}", result.a);
    let _ = writeln!(w, "m = {}", result.m);
    let _ = writeln!(w, "{} = {}", it.square_symbol, result.s);
    if it.circle_symbol == "r" {
        let _ = writeln!(w, "r = {}", result.r);
        if it.uses_diameter_marker {
            let _ = writeln!(w, "diameter 2r = {}", 2.0 * result.r);
        }
    } else {
        let _ = writeln!(
            w,
            "{} = {} (diameter, 2r)",
            it.circle_symbol,
            2.0 * result.r
        );
    }
    let _ = writeln!(w, "{}  ->  p = {}", it.p_formula_text, result.p_check);
    let _ = writeln!(w, "{}  ->  q = {}", it.q_formula_text, result.q_check);
    Ok(out)
}

/// Maps a report from [`render_solution`] back to `a`, `m`, `r`, `s`.
pub fn read_measures(report: &str, id: &str) -> Result<Measures> {
    let it = find_interpretation(id)?;
    let value_of = |symbol: &str| -> Result<f64> {
        let prefix = format!("{symbol} = ");
        let line = report
            .lines()
            .find(|l| l.starts_with(&prefix))
            .ok_or_else(|| Error::MalformedReport(format!("no line for {symbol}")))?;
        let text = line[prefix.len()..].split_whitespace().next().unwrap_or("");
        text.parse::<f64>()
            .map_err(|e| Error::MalformedReport(format!("{symbol}: {e}")))
    };
    let circle = value_of(it.circle_symbol)?;
    Ok(Measures {
        a: value_of("a")?,
        m: value_of("m")?,
        s: value_of(it.square_symbol)?,
        r: if it.circle_symbol == "r" {
            circle
        } else {
            circle / 2.0
        },
    })
}

/// How π is written in expression strings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PiSymbol {
    #[default]
    Greek,
    Ascii,
}

impl PiSymbol {
    fn apply(&self, expr: &str) -> String {
        match self {
            PiSymbol::Greek => expr.to_owned(),
            PiSymbol::Ascii => expr.replace('π', "pi").replace('θ', "theta"),
        }
    }
}

/// The three lines of the perimeter and circumference reading.
///
/// Values are for the unit-radius figure: the arc term `7π/9` carries no
/// radius factor.
#[derive(Debug, Clone, PartialEq)]
pub struct HaikuLines {
    pub line1_expr: String,
    pub line2_expr: String,
    pub line3_expr: String,
    /// Circumference of the small circle.
    pub line1_val: f64,
    /// `2r + 2m` plus the arc length, as written.
    pub line2_val: f64,
    /// Perimeter of the square.
    pub line3_val: f64,
    /// Exact segment perimeter `a + arc`.
    pub exact_perimeter_line2: f64,
}

impl Serialize for HaikuLines {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("HaikuLines", 7)?;
        st.serialize_field("line1_expr", &self.line1_expr)?;
        st.serialize_field("line2_expr", &self.line2_expr)?;
        st.serialize_field("line3_expr", &self.line3_expr)?;
        st.serialize_field("line1_val", &Num(self.line1_val))?;
        st.serialize_field("line2_val", &Num(self.line2_val))?;
        st.serialize_field("line3_val", &Num(self.line3_val))?;
        st.serialize_field("exact_perimeter_line2", &Num(self.exact_perimeter_line2))?;
        st.end()
    }
}

/// Central angles this close to 140° use the `7π/9` arc term.
const ARC_140_TOL_DEG: f64 = 1e-9;

pub fn haiku(cfg: &SegmentConfig) -> HaikuLines {
    haiku_with(cfg, PiSymbol::Greek)
}

pub fn haiku_with(cfg: &SegmentConfig, pi: PiSymbol) -> HaikuLines {
    let unit = cfg.with_radius(1.0).expect("unit radius is valid");
    let mt = metrics(&unit);
    let line2_expr = if (cfg.central_degrees() - 140.0).abs() <= ARC_140_TOL_DEG {
        "2r + 2m + 7π/9"
    } else {
        "2r + 2m + 2Rθ"
    };
    HaikuLines {
        line1_expr: pi.apply("2rπ"),
        line2_expr: pi.apply(line2_expr),
        line3_expr: "2s + 2s".to_owned(),
        line1_val: 2.0 * PI * mt.r,
        line2_val: 2.0 * mt.r + 2.0 * mt.m + mt.arc,
        line3_val: 2.0 * mt.s + 2.0 * mt.s,
        exact_perimeter_line2: mt.a + mt.arc,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{solve_pq, SolverOptions};
    use std::collections::HashSet;

    fn result_140() -> SolveResult {
        let cfg = SegmentConfig::from_central_degrees(1.0, 140.0).unwrap();
        let mt = metrics(&cfg);
        SolveResult {
            radius: 1.0,
            theta: cfg.half_angle(),
            a: mt.a,
            m: mt.m,
            r: mt.r,
            s: mt.s,
            p_check: mt.p(),
            q_check: mt.q(),
            near_double: false,
        }
    }

    #[test]
    fn registry_entries() {
        let all = list_interpretations();
        assert_eq!(all.len(), 5);
        let ids: HashSet<_> = all.iter().map(|i| i.id).collect();
        assert_eq!(ids.len(), 5);
        assert!(all
            .iter()
            .all(|i| !i.square_symbol.is_empty() && !i.circle_symbol.is_empty()));

        let fr = interpretation(InterpretationId::FukagawaRothman);
        assert_eq!((fr.square_symbol, fr.circle_symbol), ("d", "r"));
        assert!(fr.q_formula_text.contains("m/a + r/m + d/r"));
        assert!(fr.formula_statement.starts_with("Then, if"));

        let dc = interpretation(InterpretationId::DereynaClark);
        assert_eq!((dc.square_symbol, dc.circle_symbol), ("s", "d"));
        assert!(dc.uses_diameter_marker);

        assert!(interpretation(InterpretationId::CutTheKnot)
            .formula_statement
            .starts_with("Form"));
        assert!(interpretation(InterpretationId::OconnorRobertson)
            .formula_statement
            .starts_with("Put"));
        assert!(interpretation(InterpretationId::PaperOwn)
            .formula_statement
            .starts_with("Using"));
    }

    #[test]
    fn ids_parse_and_print() {
        for id in InterpretationId::ALL {
            assert_eq!(id.as_str().parse::<InterpretationId>().unwrap(), id);
        }
        assert_eq!(
            "ajima".parse::<InterpretationId>(),
            Err(Error::UnknownInterpretation("ajima".into()))
        );
    }

    #[test]
    fn square_labelled_d_under_fukagawa_rothman() {
        let report = render_solution(&result_140(), "fukagawa_rothman").unwrap();
        assert!(
            report.lines().any(|l| l.starts_with("d = 0.515106")),
            "{report}"
        );
    }

    #[test]
    fn circle_reported_as_diameter_under_dereyna_clark() {
        let res = result_140();
        let report = render_solution(&res, "dereyna_clark").unwrap();
        let line = report.lines().find(|l| l.starts_with("d = ")).unwrap();
        assert!(line.starts_with("d = 0.592567"), "{line}");
        assert!(line.contains("diameter"));
        assert!(report.lines().any(|l| l.starts_with("s = 0.515106")));
    }

    #[test]
    fn unknown_id_is_an_error() {
        assert_eq!(
            render_solution(&result_140(), "ajima"),
            Err(Error::UnknownInterpretation("ajima".into()))
        );
    }

    #[test]
    fn relabeling_is_lossless() {
        let sols = solve_pq(4.2, 2.53, &SolverOptions::default()).unwrap();
        for res in &sols {
            for it in list_interpretations() {
                let report = render_solution(res, it.id.as_str()).unwrap();
                let back = read_measures(&report, it.id.as_str()).unwrap();
                assert_eq!(
                    back,
                    Measures {
                        a: res.a,
                        m: res.m,
                        r: res.r,
                        s: res.s
                    }
                );
            }
        }
    }

    #[test]
    fn haiku_at_140() {
        let cfg = SegmentConfig::from_central_degrees(1.0, 140.0).unwrap();
        let h = haiku(&cfg);
        assert_eq!(h.line1_expr, "2rπ");
        assert_eq!(h.line2_expr, "2r + 2m + 7π/9");
        assert_eq!(h.line3_expr, "2s + 2s");
        assert!((h.line1_val - 1.861607).abs() < 1e-6);
        assert!((h.line2_val - 4.351989).abs() < 1e-6);
        assert!((h.line3_val - 2.060425).abs() < 1e-6);
        assert!((h.exact_perimeter_line2 - 4.322846).abs() < 1e-6);

        let mt = metrics(&cfg);
        assert!((mt.arc - 7.0 * PI / 9.0).abs() < 1e-15);
        assert_eq!(h.line3_val, 4.0 * mt.s);
    }

    #[test]
    fn haiku_is_radius_normalized() {
        let one = haiku(&SegmentConfig::from_central_degrees(1.0, 140.0).unwrap());
        let five = haiku(&SegmentConfig::from_central_degrees(5.0, 140.0).unwrap());
        assert_eq!(one, five);
    }

    #[test]
    fn haiku_off_140_and_ascii() {
        let cfg = SegmentConfig::from_central_degrees(1.0, 100.0).unwrap();
        let h = haiku_with(&cfg, PiSymbol::Ascii);
        assert_eq!(h.line1_expr, "2rpi");
        assert_eq!(h.line2_expr, "2r + 2m + 2Rtheta");
        let mt = metrics(&cfg);
        assert!((h.line2_val - (2.0 * mt.r + 2.0 * mt.m + 2.0 * cfg.half_angle())).abs() < 1e-15);
        assert_eq!(
            haiku_with(
                &SegmentConfig::from_central_degrees(1.0, 140.0).unwrap(),
                PiSymbol::Ascii
            )
            .line2_expr,
            "2r + 2m + 7pi/9"
        );
    }

    #[test]
    fn line2_gap_is_chord_residual() {
        for deg in [20.0, 90.0, 137.0, 140.0, 170.0] {
            let cfg = SegmentConfig::from_central_degrees(1.0, deg).unwrap();
            let h = haiku(&cfg);
            let mt = metrics(&cfg);
            let gap = h.exact_perimeter_line2 - h.line2_val;
            assert!((gap - (mt.a - 2.0 * mt.r - 2.0 * mt.m)).abs() < 1e-12);
        }
    }
}

// Copyright 2026 the Gion Sangaku Authors
// SPDX-License-Identifier: Apache-2.0

//! JSON number formatting.
//!
//! Every floating-point field written by this crate is printed with exactly
//! 17 significant digits so that the text round-trips to the same double and
//! is byte-stable across runs and platforms.

use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

/// An `f64` that serializes with 17 significant digits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Num(pub f64);

impl From<f64> for Num {
    fn from(x: f64) -> Self {
        Num(x)
    }
}

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let raw = RawValue::from_string(format_sig17(self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(serializer)
    }
}

/// Formats `x` with 17 significant digits.
///
/// Plain decimal notation is used for decimal exponents in `[-5, 16]`,
/// scientific notation otherwise. Non-finite values become `null`.
pub fn format_sig17(x: f64) -> String {
    if !x.is_finite() {
        return "null".to_owned();
    }
    let sci = format!("{x:.16e}");
    let exp: i32 = sci
        .rsplit_once('e')
        .and_then(|(_, e)| e.parse().ok())
        .unwrap_or(0);
    if x == 0.0 || (-5..=16).contains(&exp) {
        let decimals = (16 - exp).max(0) as usize;
        let mut s = format!("{x:.decimals$}");
        if decimals == 0 {
            s.push_str(".0");
        }
        s
    } else {
        sci
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits() {
        assert_eq!(format_sig17(2.5), "2.5000000000000000");
        assert_eq!(format_sig17(2.6213203435596424), "2.6213203435596424");
        assert_eq!(format_sig17(0.001234), "0.0012340000000000001");
        assert_eq!(format_sig17(-1.0), "-1.0000000000000000");
        assert_eq!(format_sig17(0.0), "0.0000000000000000");
        assert_eq!(format_sig17(1e20), "1.0000000000000000e20");
        assert_eq!(format_sig17(f64::NAN), "null");
    }

    #[test]
    fn round_trips() {
        for &x in &[
            std::f64::consts::PI,
            1.0 / 3.0,
            7e-9,
            123456.789,
            -0.2962839452523148,
        ] {
            let back: f64 = format_sig17(x).parse().unwrap();
            assert_eq!(back, x);
        }
    }

    #[test]
    fn serializes_as_json_number() {
        let v = serde_json::to_string(&vec![Num(1.5), Num(-2.0)]).unwrap();
        assert_eq!(v, "[1.5000000000000000,-2.0000000000000000]");
        let parsed: Vec<f64> = serde_json::from_str(&v).unwrap();
        assert_eq!(parsed, vec![1.5, -2.0]);
    }
}

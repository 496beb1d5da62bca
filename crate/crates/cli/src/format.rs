//! Deterministic number formatting shared by every emitted file.

use serde::{Serialize, Serializer};

pub const SIGNIFICANT_DIGITS: usize = 10;

/// Rounds to [`SIGNIFICANT_DIGITS`] significant digits.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x)
        .parse()
        .expect("formatted float parses")
}

/// CSV rendering of a rounded value: plain decimal in the usual range, exponent form for
/// very small or very large magnitudes.
pub fn csv_number(x: f64) -> String {
    let r = round_sig(x);
    let r = if r == 0.0 { 0.0 } else { r }; // drop negative zero
    let mag = r.abs();
    if r == 0.0 || (1e-4..1e15).contains(&mag) {
        format!("{r}")
    } else {
        format!("{r:e}")
    }
}

/// `f64` that serializes rounded to [`SIGNIFICANT_DIGITS`] significant digits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sig(pub f64);

impl Serialize for Sig {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let r = round_sig(self.0);
        if r.is_finite() {
            serializer.serialize_f64(if r == 0.0 { 0.0 } else { r })
        } else {
            serializer.serialize_none()
        }
    }
}

//! Text and JSON forms of a series.
//!
//! Canonical text: `c0 + c1*X + c2*X^2 + ... + O(X^N)` with ring-specific
//! coefficient rendering; coefficients that contain operators are
//! parenthesized so the output stays unambiguous.
//!
//! JSON: `{"ring": tag, "precision": N, "coeffs": [strings]}` with exact
//! string coefficients.

use super::Series;
use crate::coeffring::Ring;
use crate::error::{Error, Result};
use serde_json::{json, Value};

impl<R: Ring> Series<R> {
    /// Canonical text form including the `O(X^N)` precision marker.
    pub fn render(&self) -> String {
        let ring = self.ring();
        let mut out = String::new();
        for (i, c) in self.coeffs().iter().enumerate() {
            if ring.is_zero(c) {
                continue;
            }
            let mut body = ring.render(c);
            if body.contains(' ') || body[1..].contains(['+', '-']) {
                body = format!("({body})");
            }
            if !out.is_empty() {
                out.push_str(" + ");
            }
            match i {
                0 => out.push_str(&body),
                1 if body == "1" => out.push('X'),
                1 => out.push_str(&format!("{body}*X")),
                _ if body == "1" => out.push_str(&format!("X^{i}")),
                _ => out.push_str(&format!("{body}*X^{i}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out.push_str(&format!(" + O(X^{})", self.precision()));
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "ring": self.ring().tag(),
            "precision": self.precision(),
            "coeffs": self
                .coeffs()
                .iter()
                .map(|c| self.ring().render(c))
                .collect::<Vec<_>>(),
        })
    }

    /// Parses the JSON form produced by [`Series::to_json`]. The caller
    /// supplies the ring, which must match the recorded tag.
    pub fn from_json(ring: R, value: &Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Domain("series JSON must be an object".into()))?;
        let tag = obj
            .get("ring")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Domain("series JSON needs a \"ring\" tag".into()))?;
        if tag != ring.tag() {
            return Err(Error::RingMismatch(ring.tag(), tag.to_string()));
        }
        let coeffs = obj
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Domain("series JSON needs a \"coeffs\" array".into()))?;
        let parsed = coeffs
            .iter()
            .map(|c| {
                let s = c
                    .as_str()
                    .ok_or_else(|| Error::Domain("coefficients must be strings".into()))?;
                ring.parse_elem(s)
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some(p) = obj.get("precision").and_then(Value::as_u64) {
            if p as usize != parsed.len() {
                return Err(Error::Domain(format!(
                    "precision {p} does not match {} coefficients",
                    parsed.len()
                )));
            }
        }
        Series::from_coeffs(ring, parsed)
    }
}

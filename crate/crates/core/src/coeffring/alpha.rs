//! Laurent polynomials Z[a, a^-1] in an auxiliary symbol.
//!
//! This ring carries the free parameter of the Gauss and Jacobi identities:
//! a series over [`AlphaRing`] is a power series in X whose coefficients may
//! mention the symbol to positive and negative powers. Exponents are
//! unbounded in both directions. The units are exactly the signed monomials
//! `a^k` and `-a^k`.

use super::{parse_bigint, Ring};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// A finitely supported map from symbol exponents to integer coefficients.
/// No explicit zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlphaPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl AlphaPoly {
    pub fn zero() -> Self {
        AlphaPoly::default()
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(0, c)
    }

    /// `c * a^exp`.
    pub fn monomial(exp: i64, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        AlphaPoly { terms }
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn insert_add(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Renders with a caller-chosen symbol, monomials in decreasing degree.
    pub fn render_with(&self, symbol: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (exp, coeff) in self.terms.iter().rev() {
            let first = out.is_empty();
            let (sign, abs) = if coeff.is_negative() {
                ("-", -coeff)
            } else {
                ("+", coeff.clone())
            };
            if first {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(if sign == "-" { " - " } else { " + " });
            }
            let body = match (*exp, abs.is_one()) {
                (0, _) => abs.to_string(),
                (1, true) => symbol.to_string(),
                (1, false) => format!("{abs}*{symbol}"),
                (e, true) => format!("{symbol}^{e}"),
                (e, false) => format!("{abs}*{symbol}^{e}"),
            };
            out.push_str(&body);
        }
        out
    }
}

/// The ring Z[a, a^-1] of the auxiliary symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct AlphaRing;

impl AlphaRing {
    /// The symbol itself.
    pub fn alpha(&self) -> AlphaPoly {
        AlphaPoly::monomial(1, BigInt::one())
    }

    /// `a^k` for any integer `k`.
    pub fn alpha_pow(&self, k: i64) -> AlphaPoly {
        AlphaPoly::monomial(k, BigInt::one())
    }
}

impl Ring for AlphaRing {
    type Elem = AlphaPoly;

    fn tag(&self) -> String {
        "alpha".to_string()
    }

    fn zero(&self) -> AlphaPoly {
        AlphaPoly::zero()
    }

    fn one(&self) -> AlphaPoly {
        AlphaPoly::constant(BigInt::one())
    }

    fn is_zero(&self, a: &AlphaPoly) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &AlphaPoly, b: &AlphaPoly) -> AlphaPoly {
        let mut out = a.clone();
        for (exp, c) in b.terms() {
            out.insert_add(exp, c.clone());
        }
        out
    }

    fn sub(&self, a: &AlphaPoly, b: &AlphaPoly) -> AlphaPoly {
        let mut out = a.clone();
        for (exp, c) in b.terms() {
            out.insert_add(exp, -c);
        }
        out
    }

    fn mul(&self, a: &AlphaPoly, b: &AlphaPoly) -> AlphaPoly {
        let mut out = AlphaPoly::zero();
        for (ea, ca) in a.terms() {
            for (eb, cb) in b.terms() {
                out.insert_add(ea + eb, ca * cb);
            }
        }
        out
    }

    fn neg(&self, a: &AlphaPoly) -> AlphaPoly {
        let mut out = AlphaPoly::zero();
        for (e, c) in a.terms() {
            out.insert_add(e, -c);
        }
        out
    }

    fn from_bigint(&self, n: &BigInt) -> AlphaPoly {
        AlphaPoly::constant(n.clone())
    }

    fn from_rational(&self, q: &BigRational) -> Result<AlphaPoly> {
        if q.denom().is_one() {
            Ok(AlphaPoly::constant(q.numer().clone()))
        } else {
            Err(Error::Domain(format!(
                "rational {q} has no image in {}",
                self.tag()
            )))
        }
    }

    fn try_inverse(&self, a: &AlphaPoly) -> Result<AlphaPoly> {
        // Units are +-a^k only.
        if a.terms.len() == 1 {
            let (&exp, coeff) = a.terms.iter().next().unwrap();
            if coeff.abs().is_one() {
                return Ok(AlphaPoly::monomial(-exp, coeff.clone()));
            }
        }
        Err(Error::NotInvertible(self.render(a), self.tag()))
    }

    fn render(&self, a: &AlphaPoly) -> String {
        a.render_with("a")
    }

    fn parse_elem(&self, s: &str) -> Result<AlphaPoly> {
        let compact = s.replace(' ', "");
        if compact.is_empty() {
            return Err(Error::Domain("empty symbol-polynomial literal".into()));
        }
        let mut out = AlphaPoly::zero();
        // Split into signed monomials.
        let mut start = 0usize;
        let bytes = compact.as_bytes();
        let mut idx = 1;
        while idx <= bytes.len() {
            if idx == bytes.len() || bytes[idx] == b'+' || bytes[idx] == b'-' {
                // '-' directly after '^' or '*' is an exponent sign, not a split.
                if idx < bytes.len() && idx > 0 && (bytes[idx - 1] == b'^' || bytes[idx - 1] == b'*') {
                    idx += 1;
                    continue;
                }
                let piece = &compact[start..idx];
                let (exp, coeff) = parse_alpha_monomial(piece)?;
                out.insert_add(exp, coeff);
                start = idx;
            }
            idx += 1;
        }
        Ok(out)
    }
}

fn parse_alpha_monomial(piece: &str) -> Result<(i64, BigInt)> {
    let (sign, body) = match piece.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, piece.strip_prefix('+').unwrap_or(piece)),
    };
    let (coeff_str, sym_str) = match body.split_once('*') {
        Some((c, s)) => (Some(c), Some(s)),
        None if body.starts_with('a') => (None, Some(body)),
        None => (Some(body), None),
    };
    let coeff = match coeff_str {
        Some(c) => parse_bigint(c)?,
        None => BigInt::one(),
    };
    let exp = match sym_str {
        None => 0,
        Some("a") => 1,
        Some(s) => {
            let e = s
                .strip_prefix("a^")
                .ok_or_else(|| Error::Domain(format!("invalid monomial {piece:?}")))?;
            e.parse::<i64>()
                .map_err(|_| Error::Domain(format!("invalid exponent in {piece:?}")))?
        }
    };
    Ok((exp, coeff * sign))
}

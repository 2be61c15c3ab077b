//! Exact coefficient arithmetic behind every series.
//!
//! A [`Ring`] value is a small descriptor (possibly carrying a modulus) whose
//! methods implement exact arithmetic on its element type:
//!
//! - [`IntegerRing`]: arbitrary-precision integers
//! - [`RationalRing`]: arbitrary-precision rationals, always fully reduced
//! - [`ModRing`]: integers modulo m >= 2, residues kept in `[0, m)`
//! - [`GaussianRing`]: Q(i) as pairs of rationals
//! - [`AlphaRing`]: Laurent polynomials Z[a, a^-1] in an auxiliary symbol
//!
//! All elements are immutable values; the ring methods are pure functions.
//! Operations that can fail (inversion, embedding a non-integral rational)
//! return `Result` instead of panicking.

mod alpha;
mod gaussian;
mod integer;
mod modular;
mod rational;

pub use alpha::{AlphaPoly, AlphaRing};
pub use gaussian::{Gaussian, GaussianRing};
pub use integer::IntegerRing;
pub use modular::ModRing;
pub use rational::RationalRing;

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::fmt;

/// Common interface of the five coefficient rings.
///
/// The ring value itself is the arithmetic context: two series may be
/// combined only when their ring values compare equal, which in particular
/// rejects residue rings with different moduli.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync + 'static;

    /// Short tag such as `rational` or `mod:7`, used in JSON forms and errors.
    fn tag(&self) -> String;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    /// Image of `n` under the unique ring homomorphism from the integers.
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(n))
    }

    /// Embeds an exact rational. Fails when the denominator has no image in
    /// the ring; for residue rings a non-trivial denominator is reported as a
    /// characteristic error, which is what gates the transcendental series.
    fn from_rational(&self, q: &BigRational) -> Result<Self::Elem>;

    /// Multiplicative inverse. Fails with [`Error::NotInvertible`] naming the
    /// element when `a` is not a unit.
    fn try_inverse(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn is_unit(&self, a: &Self::Elem) -> bool {
        self.try_inverse(a).is_ok()
    }

    /// Canonical text form of an element, ring specific.
    fn render(&self, a: &Self::Elem) -> String;

    /// Parses the canonical text form back; inverse of [`Ring::render`].
    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;

    /// `a^n` for any integer exponent; negative exponents require a unit.
    fn pow_i64(&self, a: &Self::Elem, n: i64) -> Result<Self::Elem> {
        let base = if n < 0 { self.try_inverse(a)? } else { a.clone() };
        let mut e = n.unsigned_abs();
        let mut result = self.one();
        let mut power = base;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &power);
            }
            e >>= 1;
            if e > 0 {
                power = self.mul(&power, &power);
            }
        }
        Ok(result)
    }

    /// Exact quotient `a / b`; fails when `b` is not a unit.
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.try_inverse(b)?))
    }
}

/// Binary operation selector for the element-level arithmetic entry point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Sub,
    Mul,
}

/// Element-level arithmetic with an explicit operation tag.
pub fn ring_arith<R: Ring>(ring: &R, a: &R::Elem, b: &R::Elem, op: RingOp) -> R::Elem {
    match op {
        RingOp::Add => ring.add(a, b),
        RingOp::Sub => ring.sub(a, b),
        RingOp::Mul => ring.mul(a, b),
    }
}

pub(crate) fn parse_bigint(s: &str) -> Result<BigInt> {
    s.trim()
        .parse::<BigInt>()
        .map_err(|_| Error::Domain(format!("invalid integer literal: {s:?}")))
}

pub(crate) fn parse_bigrational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        None => Ok(BigRational::from(parse_bigint(s)?)),
        Some((num, den)) => {
            let num = parse_bigint(num)?;
            let den = parse_bigint(den)?;
            if den == BigInt::from(0) {
                return Err(Error::Domain(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(num, den))
        }
    }
}

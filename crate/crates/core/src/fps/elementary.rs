//! Exponential, logarithm, trigonometric series and scalar powers.
//!
//! Each function is the composition of the canonical Maclaurin series with
//! the argument. The Maclaurin coefficients are exact rationals, so these
//! operations need a coefficient ring of characteristic 0 (the rationals or
//! the Gaussian rationals); residue rings are rejected with a
//! characteristic error coming from the coefficient embedding.

use super::{Series, Valuation};
use crate::coeffring::Ring;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// The catalogue of built-in Maclaurin series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementaryKind {
    Exp,
    /// `log(1+a)`; the argument is the `a`, which must vanish at 0.
    Log1p,
    Sin,
    Cos,
    Tan,
    Sinh,
    Arcsin,
    Arctan,
}

impl ElementaryKind {
    pub fn name(self) -> &'static str {
        match self {
            ElementaryKind::Exp => "exp",
            ElementaryKind::Log1p => "log1p",
            ElementaryKind::Sin => "sin",
            ElementaryKind::Cos => "cos",
            ElementaryKind::Tan => "tan",
            ElementaryKind::Sinh => "sinh",
            ElementaryKind::Arcsin => "arcsin",
            ElementaryKind::Arctan => "arctan",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "exp" => ElementaryKind::Exp,
            "log1p" => ElementaryKind::Log1p,
            "sin" => ElementaryKind::Sin,
            "cos" => ElementaryKind::Cos,
            "tan" => ElementaryKind::Tan,
            "sinh" => ElementaryKind::Sinh,
            "arcsin" => ElementaryKind::Arcsin,
            "arctan" => ElementaryKind::Arctan,
            _ => return None,
        })
    }
}

fn rational_coeffs(kind: ElementaryKind, n: usize) -> Vec<BigRational> {
    let mut c = vec![BigRational::zero(); n];
    let mut factorial = BigRational::one();
    match kind {
        ElementaryKind::Exp => {
            for (i, slot) in c.iter_mut().enumerate() {
                if i > 0 {
                    factorial *= BigRational::from(BigInt::from(i));
                }
                *slot = factorial.recip();
            }
        }
        ElementaryKind::Log1p => {
            for (i, slot) in c.iter_mut().enumerate().skip(1) {
                let sign = if i % 2 == 1 { 1 } else { -1 };
                *slot = BigRational::new(BigInt::from(sign), BigInt::from(i));
            }
        }
        ElementaryKind::Sin | ElementaryKind::Sinh => {
            for (i, slot) in c.iter_mut().enumerate() {
                if i > 0 {
                    factorial *= BigRational::from(BigInt::from(i));
                }
                if i % 2 == 1 {
                    let sign = if kind == ElementaryKind::Sin && i % 4 == 3 {
                        -1
                    } else {
                        1
                    };
                    *slot = factorial.recip() * BigRational::from(BigInt::from(sign));
                }
            }
        }
        ElementaryKind::Cos => {
            for (i, slot) in c.iter_mut().enumerate() {
                if i > 0 {
                    factorial *= BigRational::from(BigInt::from(i));
                }
                if i % 2 == 0 {
                    let sign = if i % 4 == 2 { -1 } else { 1 };
                    *slot = factorial.recip() * BigRational::from(BigInt::from(sign));
                }
            }
        }
        ElementaryKind::Arctan => {
            for (i, slot) in c.iter_mut().enumerate() {
                if i % 2 == 1 {
                    let sign = if i % 4 == 3 { -1 } else { 1 };
                    *slot = BigRational::new(BigInt::from(sign), BigInt::from(i));
                }
            }
        }
        ElementaryKind::Arcsin => {
            // (2k)! / (2^k k!)^2 / (2k+1) at X^(2k+1)
            let mut num = BigInt::one(); // (2k)!
            let mut den = BigInt::one(); // (2^k k!)^2
            for k in 0..n.div_ceil(2) {
                if k > 0 {
                    num *= BigInt::from(2 * k - 1) * BigInt::from(2 * k);
                    den *= BigInt::from(4 * k * k);
                }
                let idx = 2 * k + 1;
                if idx < n {
                    c[idx] = BigRational::new(num.clone(), &den * BigInt::from(idx));
                }
            }
        }
        ElementaryKind::Tan => unreachable!("tan is computed as sin/cos"),
    }
    c
}

/// Builds the canonical series of `kind` at the given precision over `ring`.
pub fn maclaurin<R: Ring>(ring: &R, kind: ElementaryKind, precision: usize) -> Result<Series<R>> {
    let coeffs = rational_coeffs(kind, precision)
        .iter()
        .map(|q| ring.from_rational(q))
        .collect::<Result<Vec<_>>>()?;
    Series::from_coeffs(ring.clone(), coeffs)
}

/// `kind(arg)` for an argument with positive valuation.
pub fn elementary<R: Ring>(kind: ElementaryKind, arg: &Series<R>) -> Result<Series<R>> {
    match arg.valuation() {
        Valuation::Exact(0) => {
            return Err(Error::Domain(format!(
                "{} needs an argument with zero constant term",
                kind.name()
            )))
        }
        Valuation::AtLeast(0) => {
            return Err(Error::PrecisionExhausted(format!(
                "{} argument has no known coefficient",
                kind.name()
            )))
        }
        _ => {}
    }
    let n = arg.precision();
    if kind == ElementaryKind::Tan {
        let sin = maclaurin(arg.ring(), ElementaryKind::Sin, n)?.compose(arg)?;
        let cos = maclaurin(arg.ring(), ElementaryKind::Cos, n)?.compose(arg)?;
        return sin.mul(&cos.inverse()?);
    }
    maclaurin(arg.ring(), kind, n)?.compose(arg)
}

/// `a^c = exp(c * log(a))` for a series with constant term 1 and any scalar
/// exponent `c`, including rational ones.
pub fn pow_c<R: Ring>(a: &Series<R>, c: &R::Elem) -> Result<Series<R>> {
    let ring = a.ring().clone();
    if a.coeff(0) != &ring.one() {
        return Err(Error::Domain(
            "scalar powers need a series with constant term 1".into(),
        ));
    }
    let shifted = a.sub(&Series::one(ring.clone(), a.precision()))?;
    let log = elementary(ElementaryKind::Log1p, &shifted)?;
    elementary(ElementaryKind::Exp, &log.scale(c))
}

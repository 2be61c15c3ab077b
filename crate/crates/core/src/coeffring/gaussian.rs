//! The field Q(i) of Gaussian rationals.
//!
//! `i` is a ring constant, not a symbol: elements are pairs of exact
//! rationals and inversion goes through the norm `re^2 + im^2`.

use super::{parse_bigrational, Ring};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An element `re + im*i` of Q(i).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gaussian {
    pub re: BigRational,
    pub im: BigRational,
}

impl Gaussian {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Gaussian { re, im }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Gaussian::new(BigRational::zero(), BigRational::one())
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

/// The field Q(i).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GaussianRing;

impl Ring for GaussianRing {
    type Elem = Gaussian;

    fn tag(&self) -> String {
        "gaussian".to_string()
    }

    fn zero(&self) -> Gaussian {
        Gaussian::new(BigRational::zero(), BigRational::zero())
    }

    fn one(&self) -> Gaussian {
        Gaussian::new(BigRational::one(), BigRational::zero())
    }

    fn is_zero(&self, a: &Gaussian) -> bool {
        a.re.is_zero() && a.im.is_zero()
    }

    fn add(&self, a: &Gaussian, b: &Gaussian) -> Gaussian {
        Gaussian::new(&a.re + &b.re, &a.im + &b.im)
    }

    fn sub(&self, a: &Gaussian, b: &Gaussian) -> Gaussian {
        Gaussian::new(&a.re - &b.re, &a.im - &b.im)
    }

    fn mul(&self, a: &Gaussian, b: &Gaussian) -> Gaussian {
        Gaussian::new(
            &a.re * &b.re - &a.im * &b.im,
            &a.re * &b.im + &a.im * &b.re,
        )
    }

    fn neg(&self, a: &Gaussian) -> Gaussian {
        Gaussian::new(-&a.re, -&a.im)
    }

    fn from_bigint(&self, n: &BigInt) -> Gaussian {
        Gaussian::new(BigRational::from(n.clone()), BigRational::zero())
    }

    fn from_rational(&self, q: &BigRational) -> Result<Gaussian> {
        Ok(Gaussian::new(q.clone(), BigRational::zero()))
    }

    fn try_inverse(&self, a: &Gaussian) -> Result<Gaussian> {
        let norm = &a.re * &a.re + &a.im * &a.im;
        if norm.is_zero() {
            return Err(Error::NotInvertible(self.render(a), self.tag()));
        }
        Ok(Gaussian::new(&a.re / &norm, -&a.im / &norm))
    }

    fn render(&self, a: &Gaussian) -> String {
        let re = RationalRender(&a.re);
        if a.im.is_negative() {
            format!("{re}-{}i", RationalRender(&a.im.abs()))
        } else {
            format!("{re}+{}i", RationalRender(&a.im))
        }
    }

    fn parse_elem(&self, s: &str) -> Result<Gaussian> {
        let s = s.trim();
        // Split at the sign that separates the real from the imaginary part:
        // the last top-level '+' or '-' that is not the leading sign and not
        // part of a '/' denominator.
        if let Some(body) = s.strip_suffix('i') {
            let mut split = None;
            for (idx, ch) in body.char_indices().skip(1) {
                if ch == '+' || ch == '-' {
                    split = Some(idx);
                }
            }
            match split {
                Some(idx) => {
                    let re = parse_bigrational(&body[..idx])?;
                    let sign = if body[idx..].starts_with('-') {
                        -BigRational::one()
                    } else {
                        BigRational::one()
                    };
                    let im = parse_bigrational(&body[idx + 1..])? * sign;
                    Ok(Gaussian::new(re, im))
                }
                // A bare "bi" form.
                None => Ok(Gaussian::new(
                    BigRational::zero(),
                    parse_bigrational(body)?,
                )),
            }
        } else {
            Ok(Gaussian::new(parse_bigrational(s)?, BigRational::zero()))
        }
    }
}

struct RationalRender<'a>(&'a BigRational);

impl std::fmt::Display for RationalRender<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

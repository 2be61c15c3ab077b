//! Puiseux series: Laurent series in a fractional power `X^(1/n)`.
//!
//! Arithmetic lifts both operands to the least common denominator through
//! `X -> X^(lcm/n)`, operates on Laurent series in the fine variable
//! `t = X^(1/lcm)`, and re-canonicalizes so the denominator is minimal over
//! the visible support.

use crate::coeffring::Ring;
use crate::error::{Error, Result};
use crate::fps::Series;
use crate::laurent::Laurent;
use num_integer::Integer;

/// A Puiseux series: a Laurent series in `t = X^(1/denominator)`.
#[derive(Clone, PartialEq)]
pub struct Puiseux<R: Ring> {
    denominator: u64,
    body: Laurent<R>,
}

impl<R: Ring> std::fmt::Debug for Puiseux<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Puiseux({})", self.render())
    }
}

impl<R: Ring> Puiseux<R> {
    /// `body` read in the variable `X^(1/denominator)`.
    pub fn new(denominator: u64, body: Laurent<R>) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::Domain("denominator must be positive".into()));
        }
        Ok(Puiseux { denominator, body }.canonicalize())
    }

    pub fn from_laurent(body: Laurent<R>) -> Self {
        Puiseux {
            denominator: 1,
            body,
        }
    }

    /// The monomial `X^(num/den)`.
    pub fn x_pow(ring: R, num: i64, den: u64, precision: usize) -> Result<Self> {
        if den == 0 {
            return Err(Error::Domain("denominator must be positive".into()));
        }
        Puiseux::new(den, Laurent::x_pow(ring, num, precision))
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    pub fn body(&self) -> &Laurent<R> {
        &self.body
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    /// Coefficient of `X^(num/den)` when the window shows it.
    pub fn coeff(&self, num: i64, den: u64) -> Option<R::Elem> {
        // exponent num/den = k / denominator  =>  k = num * denominator / den
        let scaled = num * self.denominator as i64;
        if scaled % den as i64 != 0 {
            return Some(self.body.ring().zero());
        }
        self.body.coeff(scaled / den as i64)
    }

    /// Minimizes the denominator: divides out the gcd of the visible support
    /// exponents and the denominator.
    fn canonicalize(self) -> Self {
        if self.body.is_zero() {
            return Puiseux {
                denominator: 1,
                body: self.body,
            };
        }
        let mut g = self.denominator;
        let offset = self.body.offset();
        let ring = self.body.ring().clone();
        for i in 0..self.body.precision() {
            if g == 1 {
                break;
            }
            let exp = offset + i as i64;
            let c = self.body.coeff(exp).expect("inside window");
            if !ring.is_zero(&c) {
                g = g.gcd(&exp.unsigned_abs());
            }
        }
        if g <= 1 {
            return self;
        }
        let gi = g as i64;
        let new_offset = offset / gi;
        let n = self.body.precision();
        let kept = (n as i64 - 1).div_euclid(gi) as usize + 1;
        let mut coeffs = Vec::with_capacity(kept);
        for j in 0..kept {
            let exp = offset + (j as i64) * gi;
            coeffs.push(self.body.coeff(exp).expect("inside window"));
        }
        let body = Series::from_coeffs(ring, coeffs)
            .and_then(|s| Laurent::new(new_offset, s))
            .expect("canonical rescale");
        Puiseux {
            denominator: self.denominator / g,
            body,
        }
    }

    /// Rescales to a finer denominator (a multiple of the current one).
    fn refine(&self, target: u64) -> Result<Self> {
        debug_assert!(target % self.denominator == 0);
        let factor = (target / self.denominator) as i64;
        if factor == 1 {
            return Ok(self.clone());
        }
        let ring = self.body.ring().clone();
        if self.body.is_zero() {
            return Ok(Puiseux {
                denominator: target,
                body: Laurent::zero(ring, self.body.precision()),
            });
        }
        let n = self.body.precision();
        let offset = self.body.offset();
        let mut coeffs = vec![ring.zero(); (n - 1) * factor as usize + 1];
        for i in 0..n {
            let c = self.body.coeff(offset + i as i64).expect("inside window");
            coeffs[i * factor as usize] = c;
        }
        let body = Laurent::new(offset * factor, Series::from_coeffs(ring, coeffs)?)?;
        Ok(Puiseux {
            denominator: target,
            body,
        })
    }

    fn lift_pair(&self, other: &Self) -> Result<(Self, Self, u64)> {
        let target = self.denominator.lcm(&other.denominator);
        Ok((self.refine(target)?, other.refine(target)?, target))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let (a, b, target) = self.lift_pair(other)?;
        Puiseux::new(target, a.body.add(&b.body)?)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let (a, b, target) = self.lift_pair(other)?;
        Puiseux::new(target, a.body.sub(&b.body)?)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let (a, b, target) = self.lift_pair(other)?;
        Puiseux::new(target, a.body.mul(&b.body)?)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        let (a, b, target) = self.lift_pair(other)?;
        Puiseux::new(target, a.body.div(&b.body)?)
    }

    pub fn inverse(&self) -> Result<Self> {
        Puiseux::new(self.denominator, self.body.inverse()?)
    }

    pub fn neg(&self) -> Self {
        Puiseux {
            denominator: self.denominator,
            body: self.body.neg(),
        }
    }

    /// Text form with fractional exponents `X^(p/q)`.
    pub fn render(&self) -> String {
        if self.body.is_zero() {
            return "0".to_string();
        }
        let ring = self.body.ring();
        let mut parts = Vec::new();
        let offset = self.body.offset();
        for i in 0..self.body.precision() {
            let exp = offset + i as i64;
            let c = self.body.coeff(exp).expect("inside window");
            if ring.is_zero(&c) {
                continue;
            }
            let mut coeff = ring.render(&c);
            if coeff.contains(' ') || coeff[1..].contains(['+', '-']) {
                coeff = format!("({coeff})");
            }
            let den = self.denominator as i64;
            let term = if exp == 0 {
                coeff
            } else if exp % den == 0 {
                let e = exp / den;
                if e == 1 && coeff == "1" {
                    "X".to_string()
                } else if coeff == "1" {
                    format!("X^{e}")
                } else if e == 1 {
                    format!("{coeff}*X")
                } else {
                    format!("{coeff}*X^{e}")
                }
            } else if coeff == "1" {
                format!("X^({exp}/{den})")
            } else {
                format!("{coeff}*X^({exp}/{den})")
            };
            parts.push(term);
        }
        if parts.is_empty() {
            return "0".to_string();
        }
        let tail_exp = offset + self.body.precision() as i64;
        format!(
            "{} + O(X^({tail_exp}/{}))",
            parts.join(" + "),
            self.denominator
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::RationalRing;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    fn sqrt_x(precision: usize) -> Puiseux<RationalRing> {
        Puiseux::x_pow(RationalRing, 1, 2, precision).unwrap()
    }

    #[test]
    fn square_root_squares_to_x() {
        let s = sqrt_x(8);
        let x = s.mul(&s).unwrap();
        assert_eq!(x.denominator(), 1);
        assert_eq!(x.coeff(1, 1).unwrap(), q(1));
        assert!(x.coeff(2, 1).map_or(true, |c| c == q(0)));
    }

    #[test]
    fn inverse_of_square_root() {
        let s = sqrt_x(8);
        let inv = s.inverse().unwrap();
        assert_eq!(inv.denominator(), 2);
        assert_eq!(inv.coeff(-1, 2).unwrap(), q(1));
        let prod = s.mul(&inv).unwrap();
        assert_eq!(prod.denominator(), 1);
        assert_eq!(prod.coeff(0, 1).unwrap(), q(1));
    }

    #[test]
    fn mixed_denominator_square() {
        // (X^(1/3) + X^(1/2))^2 = X^(2/3) + 2X^(5/6) + X, denominator 6
        let a = Puiseux::x_pow(RationalRing, 1, 3, 10)
            .unwrap()
            .add(&Puiseux::x_pow(RationalRing, 1, 2, 10).unwrap())
            .unwrap();
        let sq = a.mul(&a).unwrap();
        assert_eq!(sq.denominator(), 6);
        assert_eq!(sq.coeff(2, 3).unwrap(), q(1));
        assert_eq!(sq.coeff(5, 6).unwrap(), q(2));
        assert_eq!(sq.coeff(1, 1).unwrap(), q(1));
    }

    #[test]
    fn field_axioms_on_random_triples() {
        let mk = |seed: u64| -> Puiseux<RationalRing> {
            let den = 1 + (seed % 3) as u64; // 1, 2 or 3
            let offset = (seed % 5) as i64 - 2;
            let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15);
            let coeffs: Vec<BigRational> = (0..7)
                .map(|i| {
                    state = state
                        .wrapping_mul(6364136223846793005)
                        .wrapping_add(1442695040888963407);
                    let v = ((state >> 33) as i64 % 5) - 2;
                    if i == 0 && v == 0 {
                        q(1)
                    } else {
                        q(v)
                    }
                })
                .collect();
            let body = Laurent::new(
                offset,
                crate::fps::Series::from_coeffs(RationalRing, coeffs).unwrap(),
            )
            .unwrap();
            Puiseux::new(den, body).unwrap()
        };
        for seed in 0..6u64 {
            let a = mk(3 * seed + 1);
            let b = mk(3 * seed + 2);
            let c = mk(3 * seed + 3);
            let left = a.mul(&b).unwrap().mul(&c).unwrap();
            let right = a.mul(&b.mul(&c).unwrap()).unwrap();
            // compare on the common visible window
            let den = left.denominator().lcm(&right.denominator());
            for k in -12i64..12 {
                if let (Some(x), Some(y)) = (left.coeff(k, den), right.coeff(k, den)) {
                    assert_eq!(x, y, "assoc seed {seed}, exp {k}/{den}");
                }
            }
            let dist_l = a.mul(&b.add(&c).unwrap()).unwrap();
            let dist_r = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
            let den = dist_l.denominator().lcm(&dist_r.denominator());
            for k in -12i64..12 {
                if let (Some(x), Some(y)) = (dist_l.coeff(k, den), dist_r.coeff(k, den)) {
                    assert_eq!(x, y, "distrib seed {seed}, exp {k}/{den}");
                }
            }
            // a / a = 1
            let unit = a.div(&a).unwrap();
            assert_eq!(unit.coeff(0, 1).unwrap(), q(1));
        }
    }

    #[test]
    fn canonical_denominator_is_minimal() {
        // X^(2/4) should normalize to denominator 2
        let p = Puiseux::x_pow(RationalRing, 2, 4, 6).unwrap();
        assert_eq!(p.denominator(), 2);
        assert_eq!(p.coeff(1, 2).unwrap(), q(1));
        // X^(4/2) normalizes all the way to X^2
        let p = Puiseux::x_pow(RationalRing, 4, 2, 6).unwrap();
        assert_eq!(p.denominator(), 1);
    }

    #[test]
    fn render_uses_fractional_exponents() {
        let s = sqrt_x(4);
        assert!(s.render().starts_with("X^(1/2)"));
    }
}

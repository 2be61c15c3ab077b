//! Integers modulo m for an arbitrary modulus m >= 2.
//!
//! Residues are stored reduced into `[0, m)`. The modulus is part of the ring
//! value, so series over different moduli compare unequal and every mixed
//! operation is rejected at the boundary. Inversion uses the extended
//! euclidean algorithm and succeeds exactly for residues coprime to m.

use super::{parse_bigint, Ring};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The residue ring Z/mZ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModRing {
    modulus: BigInt,
}

impl ModRing {
    /// Builds the ring of residues modulo `m`; requires `m >= 2`.
    pub fn new(m: BigInt) -> Result<Self> {
        if m < BigInt::from(2) {
            return Err(Error::Domain(format!("modulus must be >= 2, got {m}")));
        }
        Ok(ModRing { modulus: m })
    }

    pub fn from_u64(m: u64) -> Result<Self> {
        Self::new(BigInt::from(m))
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    fn reduce(&self, a: &BigInt) -> BigInt {
        let r = a % &self.modulus;
        if r.is_negative() {
            r + &self.modulus
        } else {
            r
        }
    }
}

impl Ring for ModRing {
    type Elem = BigInt;

    fn tag(&self) -> String {
        format!("mod:{}", self.modulus)
    }

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(&(a + b))
    }

    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(&(a - b))
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(&(a * b))
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        self.reduce(&(-a))
    }

    fn from_bigint(&self, n: &BigInt) -> BigInt {
        self.reduce(n)
    }

    fn from_rational(&self, q: &BigRational) -> Result<BigInt> {
        if q.denom().is_one() {
            Ok(self.reduce(q.numer()))
        } else {
            Err(Error::Characteristic(format!(
                "rational {q} cannot be embedded in {}; the operation needs characteristic 0",
                self.tag()
            )))
        }
    }

    fn try_inverse(&self, a: &BigInt) -> Result<BigInt> {
        let a = self.reduce(a);
        let ext = a.extended_gcd(&self.modulus);
        if ext.gcd.is_one() {
            Ok(self.reduce(&ext.x))
        } else {
            Err(Error::NotInvertible(a.to_string(), self.tag()))
        }
    }

    fn render(&self, a: &BigInt) -> String {
        format!("{} mod {}", self.reduce(a), self.modulus)
    }

    fn parse_elem(&self, s: &str) -> Result<BigInt> {
        let s = s.trim();
        let body = match s.split_once(" mod ") {
            None => s,
            Some((value, modulus)) => {
                let m = parse_bigint(modulus)?;
                if m != self.modulus {
                    return Err(Error::RingMismatch(self.tag(), format!("mod:{m}")));
                }
                value
            }
        };
        Ok(self.reduce(&parse_bigint(body)?))
    }
}

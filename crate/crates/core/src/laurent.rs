//! Formal Laurent series, residues and the Lagrange-Buermann inversion
//! formula.
//!
//! A [`Laurent`] value is an integer offset plus a power series body, kept in
//! canonical form: the body has a nonzero constant term, or the value is the
//! designated zero with offset 0. The known coefficient window is
//! `offset .. offset + precision`; everything below the offset is exactly 0.

use crate::coeffring::Ring;
use crate::error::{Error, Result};
use crate::fps::{Series, Valuation};
use num_bigint::BigInt;
use serde_json::{json, Value};

/// Guard against runaway offsets from bookkeeping bugs.
const MAX_OFFSET: i64 = 1_000_000;

/// A formal Laurent series: `X^offset * body`.
#[derive(Clone, PartialEq)]
pub struct Laurent<R: Ring> {
    offset: i64,
    body: Series<R>,
}

impl<R: Ring> std::fmt::Debug for Laurent<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Laurent({})", self.render())
    }
}

impl<R: Ring> Laurent<R> {
    /// Builds `X^offset * body` and canonicalizes.
    pub fn new(offset: i64, body: Series<R>) -> Result<Self> {
        if offset.abs() > MAX_OFFSET {
            return Err(Error::Domain(format!(
                "Laurent offset {offset} exceeds the +-{MAX_OFFSET} guard"
            )));
        }
        Ok(Self::canonical(offset, body))
    }

    fn canonical(offset: i64, body: Series<R>) -> Self {
        match body.valuation() {
            Valuation::Exact(0) => Laurent { offset, body },
            Valuation::Exact(v) => {
                let shifted = body.shift_down(v).expect("valuation certifies the shift");
                Laurent {
                    offset: offset + v as i64,
                    body: shifted,
                }
            }
            Valuation::AtLeast(n) => {
                if n > 0 {
                    log::warn!(
                        "all {n} known coefficients are zero; treating the Laurent series as 0"
                    );
                }
                Laurent {
                    offset: 0,
                    body: Series::zero(body.ring().clone(), n.max(1)),
                }
            }
        }
    }

    pub fn from_series(body: Series<R>) -> Self {
        Self::canonical(0, body)
    }

    /// The monomial `X^k`.
    pub fn x_pow(ring: R, k: i64, precision: usize) -> Self {
        Laurent {
            offset: k,
            body: Series::one(ring, precision),
        }
    }

    pub fn zero(ring: R, precision: usize) -> Self {
        Laurent {
            offset: 0,
            body: Series::zero(ring, precision),
        }
    }

    pub fn ring(&self) -> &R {
        self.body.ring()
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn body(&self) -> &Series<R> {
        &self.body
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    pub fn precision(&self) -> usize {
        self.body.precision()
    }

    /// First exponent of the known window; `inf` of the series when nonzero.
    pub fn inf(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.offset)
        }
    }

    /// Coefficient of `X^k`, if the window determines it.
    pub fn coeff(&self, k: i64) -> Option<R::Elem> {
        if k < self.offset {
            Some(self.ring().zero())
        } else {
            let idx = (k - self.offset) as usize;
            if idx < self.body.precision() {
                Some(self.body.coeff(idx).clone())
            } else {
                None
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let ring = self.ring().clone();
        let offset = self.offset.min(other.offset);
        // Knowledge ends where either window ends.
        let end = (self.offset + self.precision() as i64)
            .min(other.offset + other.precision() as i64);
        if end <= offset {
            return Err(Error::PrecisionExhausted(
                "Laurent windows do not overlap".into(),
            ));
        }
        let n = (end - offset) as usize;
        let mut coeffs = Vec::with_capacity(n);
        for k in offset..end {
            let a = self.coeff(k).expect("inside window");
            let b = other.coeff(k).expect("inside window");
            coeffs.push(ring.add(&a, &b));
        }
        Laurent::new(offset, Series::from_coeffs(ring, coeffs)?)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Laurent {
            offset: self.offset,
            body: self.body.neg(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            let p = self.precision().min(other.precision());
            return Ok(Laurent::zero(self.ring().clone(), p));
        }
        let body = self.body.mul(&other.body)?;
        Laurent::new(self.offset + other.offset, body)
    }

    /// Multiplicative inverse; the leading coefficient must be a unit.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("division by the zero Laurent series".into()));
        }
        let body = self.body.inverse()?;
        Laurent::new(-self.offset, body)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.inverse()?)
    }

    pub fn pow_i64(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return self.inverse()?.pow_i64(-k);
        }
        let mut result = Laurent::x_pow(self.ring().clone(), 0, self.precision());
        for _ in 0..k {
            result = result.mul(self)?;
        }
        Ok(result)
    }

    /// Formal derivative: `sum k a_k X^(k-1)`.
    pub fn derivative(&self) -> Result<Self> {
        let ring = self.ring().clone();
        if self.is_zero() {
            let p = self.precision();
            if p <= 1 {
                return Err(Error::PrecisionExhausted("derivative of O(X)".into()));
            }
            return Ok(Laurent::zero(ring, p - 1));
        }
        let mut coeffs = Vec::with_capacity(self.precision());
        for i in 0..self.precision() {
            let k = self.offset + i as i64;
            let factor = ring.from_bigint(&BigInt::from(k));
            coeffs.push(ring.mul(&factor, self.body.coeff(i)));
        }
        // The X^0 term dies; when offset = 0 the first derivative coefficient
        // starts one exponent lower than the body shows.
        Laurent::new(self.offset - 1, Series::from_coeffs(ring, coeffs)?)
    }

    /// The formal residue, the coefficient of `X^-1`.
    ///
    /// Returns 0 when the whole window lies above -1; fails when the window
    /// lies entirely below (the coefficient is then unknown).
    pub fn residue(&self) -> Result<R::Elem> {
        if self.offset > -1 {
            return Ok(self.ring().zero());
        }
        self.coeff(-1).ok_or_else(|| {
            Error::PrecisionExhausted("window does not determine the residue".into())
        })
    }

    /// Text form `X^m * (body)`.
    pub fn render(&self) -> String {
        format!("X^{} * ({})", self.offset, self.body.render())
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.body.to_json();
        v.as_object_mut()
            .expect("series JSON is an object")
            .insert("offset".into(), json!(self.offset));
        v
    }

    pub fn from_json(ring: R, value: &Value) -> Result<Self> {
        let offset = value
            .get("offset")
            .and_then(Value::as_i64)
            .ok_or_else(|| Error::Domain("Laurent JSON needs an \"offset\"".into()))?;
        Laurent::new(offset, Series::from_json(ring, value)?)
    }
}

/// Compositional inverse of `a` through residues only: the coefficient of
/// `X^k` in the reverse is `res(a^-k) / k`, equivalently the coefficient of
/// `X^(k-1)` in `(X/a)^k` divided by `k`.
///
/// Needs `val(a) = 1` with unit leading coefficient, a coefficient ring
/// containing the inverses of all positive integers, and `a` known mod
/// `X^(order+1)`.
pub fn lagrange_buermann<R: Ring>(a: &Series<R>, order: usize) -> Result<Series<R>> {
    let ring = a.ring().clone();
    match a.valuation() {
        Valuation::Exact(1) => {}
        v => {
            return Err(Error::NotReversible(format!(
                "valuation must be exactly 1, found {v:?}"
            )))
        }
    }
    if a.precision() < order + 1 {
        return Err(Error::PrecisionExhausted(format!(
            "need precision {} for order {order}, have {}",
            order + 1,
            a.precision()
        )));
    }
    if order == 0 {
        return Ok(Series::zero(ring, 1));
    }
    // u = a / X has a unit constant term; (X/a)^k = (u^-1)^k.
    let u = a.shift_down(1)?.truncate(order.max(1))?;
    let w = u.inverse()?;
    let mut coeffs = vec![ring.zero(); order + 1];
    let mut power = Series::one(ring.clone(), order.max(1));
    for k in 1..=order {
        power = power.mul(&w)?.truncate(order.max(1))?;
        let inv_k = ring.try_inverse(&ring.from_i64(k as i64)).map_err(|_| {
            Error::Characteristic(format!(
                "Lagrange-Buermann needs 1/{k} in {}",
                ring.tag()
            ))
        })?;
        coeffs[k] = ring.mul(power.coeff(k - 1), &inv_k);
    }
    Series::from_coeffs(ring, coeffs)
}

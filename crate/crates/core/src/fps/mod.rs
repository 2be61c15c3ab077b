//! Univariate truncated formal power series over any coefficient ring.
//!
//! A [`Series`] is a dense coefficient vector together with an explicit
//! precision: the series is known modulo `X^N` where `N` is the vector
//! length. Every operation propagates precision conservatively, so a result
//! never claims coefficients that the inputs do not determine.
//!
//! Provided operations:
//!
//! - arithmetic: `add`, `sub`, `mul` (Cauchy convolution), `inverse`, `div`
//! - composition `compose`, compositional inverse `reverse`
//! - `derivative` and the Hasse derivative `hasse`
//! - transcendental series via [`elementary`] and powers via [`pow_c`]
//! - `valuation` / `norm` for the ultrametric structure
//!
//! The multiplication is the naive O(N^2) convolution; [`Series::mul_karatsuba`]
//! is an optional bit-identical subdivision path for long series.

mod elementary;
mod render;

pub use elementary::{elementary, pow_c, ElementaryKind};

use crate::coeffring::Ring;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

/// Position of the first nonzero coefficient, as far as the precision shows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Valuation {
    /// Coefficient `v` is nonzero and all below it vanish.
    Exact(usize),
    /// All `n` known coefficients are zero.
    AtLeast(usize),
}

/// The ultrametric norm `2^-inf`, or an upper bound when only a zero window
/// is known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Norm {
    Exact(BigRational),
    AtMost(BigRational),
}

fn pow2_inv(v: usize) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2u32).pow(v as u32))
}

/// A truncated power series: coefficients of `X^0 .. X^(N-1)`, known mod `X^N`.
#[derive(Clone, PartialEq)]
pub struct Series<R: Ring> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

impl<R: Ring> std::fmt::Debug for Series<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Series[{}]({})", self.ring.tag(), self.render())
    }
}

impl<R: Ring> Series<R> {
    /// Builds a series from explicit coefficients; the precision is their count.
    pub fn from_coeffs(ring: R, coeffs: Vec<R::Elem>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain(
                "a series needs at least one coefficient".into(),
            ));
        }
        Ok(Series { ring, coeffs })
    }

    pub fn from_i64s(ring: R, coeffs: &[i64]) -> Result<Self> {
        let coeffs = coeffs.iter().map(|&c| ring.from_i64(c)).collect();
        Self::from_coeffs(ring, coeffs)
    }

    /// The zero series known mod `X^precision`.
    pub fn zero(ring: R, precision: usize) -> Self {
        assert!(precision >= 1, "precision must be at least 1");
        let coeffs = vec![ring.zero(); precision];
        Series { ring, coeffs }
    }

    pub fn one(ring: R, precision: usize) -> Self {
        let c = ring.one();
        Self::monomial(ring, &c, 0, precision)
    }

    /// The identity series X (requires precision >= 2 to show its coefficient).
    pub fn x(ring: R, precision: usize) -> Self {
        let c = ring.one();
        Self::monomial(ring, &c, 1, precision)
    }

    /// `c * X^exp`, truncated to the given precision.
    pub fn monomial(ring: R, c: &R::Elem, exp: usize, precision: usize) -> Self {
        let mut s = Self::zero(ring, precision);
        if exp < precision {
            s.coeffs[exp] = c.clone();
        }
        s
    }

    pub fn constant(ring: R, c: &R::Elem, precision: usize) -> Self {
        Self::monomial(ring, c, 0, precision)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    /// Number of known coefficients; the series is known mod `X^precision`.
    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `X^n`; `n` must be below the precision.
    pub fn coeff(&self, n: usize) -> &R::Elem {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.ring.is_zero(c))
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch(self.ring.tag(), other.ring.tag()))
        }
    }

    pub fn valuation(&self) -> Valuation {
        for (i, c) in self.coeffs.iter().enumerate() {
            if !self.ring.is_zero(c) {
                return Valuation::Exact(i);
            }
        }
        Valuation::AtLeast(self.precision())
    }

    pub fn norm(&self) -> Norm {
        match self.valuation() {
            Valuation::Exact(v) => Norm::Exact(pow2_inv(v)),
            Valuation::AtLeast(n) => Norm::AtMost(pow2_inv(n)),
        }
    }

    /// Reduces the precision to `n` (1 <= n <= precision).
    pub fn truncate(&self, n: usize) -> Result<Self> {
        if n < 1 || n > self.precision() {
            return Err(Error::Domain(format!(
                "cannot truncate precision {} to {n}",
                self.precision()
            )));
        }
        Ok(Series {
            ring: self.ring.clone(),
            coeffs: self.coeffs[..n].to_vec(),
        })
    }

    /// Extends the precision by padding zeros. This treats the series as an
    /// exact polynomial and is sound only for values that really are
    /// polynomials (Gaussian coefficients, finite products and the like).
    pub fn extend_exact(&self, n: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        while coeffs.len() < n {
            coeffs.push(self.ring.zero());
        }
        Series {
            ring: self.ring.clone(),
            coeffs,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let n = self.precision().min(other.precision());
        let coeffs = (0..n)
            .map(|i| self.ring.add(&self.coeffs[i], &other.coeffs[i]))
            .collect();
        Ok(Series {
            ring: self.ring.clone(),
            coeffs,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let n = self.precision().min(other.precision());
        let coeffs = (0..n)
            .map(|i| self.ring.sub(&self.coeffs[i], &other.coeffs[i]))
            .collect();
        Ok(Series {
            ring: self.ring.clone(),
            coeffs,
        })
    }

    pub fn neg(&self) -> Self {
        Series {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|c| self.ring.neg(c)).collect(),
        }
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        Series {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|a| self.ring.mul(a, c)).collect(),
        }
    }

    /// Result precision of a product, from the factor precisions and
    /// valuations: `min(Na + val(b), Nb + val(a), Na + Nb - 1)` when both
    /// valuations are exact, else `min(Na, Nb)`.
    fn mul_precision(&self, other: &Self) -> usize {
        let (na, nb) = (self.precision(), other.precision());
        match (self.valuation(), other.valuation()) {
            (Valuation::Exact(va), Valuation::Exact(vb)) => {
                (na + vb).min(nb + va).min(na + nb - 1).max(na.min(nb))
            }
            _ => na.min(nb),
        }
    }

    /// Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let p = self.mul_precision(other);
        Ok(self.convolve(other, p))
    }

    fn convolve(&self, other: &Self, p: usize) -> Self {
        let ring = &self.ring;
        let mut coeffs = vec![ring.zero(); p];
        for (i, a) in self.coeffs.iter().enumerate().take(p) {
            if ring.is_zero(a) {
                continue;
            }
            let jmax = (p - i).min(other.coeffs.len());
            for (j, b) in other.coeffs.iter().enumerate().take(jmax) {
                if ring.is_zero(b) {
                    continue;
                }
                let prod = ring.mul(a, b);
                coeffs[i + j] = ring.add(&coeffs[i + j], &prod);
            }
        }
        Series {
            ring: ring.clone(),
            coeffs,
        }
    }

    /// Karatsuba subdivision multiplication. Bit-identical to [`Series::mul`];
    /// worthwhile only for long series over cheap rings.
    pub fn mul_karatsuba(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let p = self.mul_precision(other);
        let full = karatsuba(&self.ring, &self.coeffs, &other.coeffs);
        let mut coeffs: Vec<R::Elem> = full.into_iter().take(p).collect();
        while coeffs.len() < p {
            coeffs.push(self.ring.zero());
        }
        Ok(Series {
            ring: self.ring.clone(),
            coeffs,
        })
    }

    /// `self^k` by repeated multiplication, for small exponents.
    pub fn pow_usize(&self, k: usize) -> Result<Self> {
        let mut result = Series::one(self.ring.clone(), self.precision());
        for _ in 0..k {
            result = result.mul(self)?;
            // Powers of series with positive valuation would otherwise gain
            // precision beyond the input's knowledge window; cap at input.
            if result.precision() > self.precision() {
                result = result.truncate(self.precision())?;
            }
        }
        Ok(result)
    }

    /// Multiplicative inverse via the constant-term recursion
    /// `b_k = -a_0^-1 * sum_{i=1..k} a_i b_{k-i}`.
    pub fn inverse(&self) -> Result<Self> {
        let ring = &self.ring;
        let a0_inv = ring.try_inverse(&self.coeffs[0])?;
        let n = self.precision();
        let mut b = Vec::with_capacity(n);
        b.push(a0_inv.clone());
        for k in 1..n {
            let mut acc = ring.zero();
            for i in 1..=k {
                if ring.is_zero(&self.coeffs[i]) {
                    continue;
                }
                acc = ring.add(&acc, &ring.mul(&self.coeffs[i], &b[k - i]));
            }
            b.push(ring.neg(&ring.mul(&a0_inv, &acc)));
        }
        Ok(Series {
            ring: ring.clone(),
            coeffs: b,
        })
    }

    /// Division `self / other`, realized as shift-then-inverse. Requires
    /// `val(other) <= val(self)` so that the quotient is a power series.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let vb = match other.valuation() {
            Valuation::Exact(v) => v,
            Valuation::AtLeast(_) => {
                return Err(Error::Domain(
                    "division by a series with no visible nonzero coefficient".into(),
                ))
            }
        };
        let va = match self.valuation() {
            Valuation::Exact(v) => v,
            // 0 / b = 0 at the appropriate precision.
            Valuation::AtLeast(n) => {
                return Ok(Series::zero(self.ring.clone(), (n - vb).max(1)))
            }
        };
        if vb > va {
            return Err(Error::Domain(format!(
                "division domain: denominator valuation {vb} exceeds numerator valuation {va}"
            )));
        }
        let a = self.shift_down(vb)?;
        let b = other.shift_down(vb)?;
        a.mul(&b.inverse()?)
    }

    /// Multiplies by `X^k` (drops the top `k` known coefficients).
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.precision() + k;
        let mut coeffs = vec![self.ring.zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i + k] = c.clone();
        }
        Series {
            ring: self.ring.clone(),
            coeffs,
        }
    }

    /// Divides by `X^k`; the first `k` coefficients must vanish.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k == 0 {
            return Ok(self.clone());
        }
        if k >= self.precision() {
            return Err(Error::PrecisionExhausted(format!(
                "cannot divide by X^{k} at precision {}",
                self.precision()
            )));
        }
        for i in 0..k {
            if !self.ring.is_zero(&self.coeffs[i]) {
                return Err(Error::Domain(format!(
                    "coefficient of X^{i} is nonzero; cannot divide by X^{k}"
                )));
            }
        }
        Ok(Series {
            ring: self.ring.clone(),
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Composition `self(inner)`. Requires `val(inner) >= 1`, or `self` to be
    /// a visible polynomial: its known coefficients must end in a zero, which
    /// certifies spare precision beyond the support.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.check_ring(inner)?;
        let ring = &self.ring;
        let nb = inner.precision();
        match inner.valuation() {
            Valuation::Exact(0) => {
                let support_end = self
                    .coeffs
                    .iter()
                    .rposition(|c| !ring.is_zero(c))
                    .map_or(0, |i| i + 1);
                if support_end >= self.precision() {
                    return Err(Error::CompositionDomain(
                        "inner series has a nonzero constant term and the outer series is not \
                         a visible polynomial"
                            .into(),
                    ));
                }
                self.compose_terms(inner, support_end, nb)
            }
            Valuation::Exact(v) => {
                let p = nb.min(self.precision().saturating_mul(v));
                self.compose_terms(inner, self.precision(), p)
            }
            Valuation::AtLeast(0) => Err(Error::CompositionDomain(
                "inner series has no known coefficient".into(),
            )),
            Valuation::AtLeast(_) => self.compose_terms(inner, self.precision(), nb),
        }
    }

    /// Horner-free accumulation of `sum a_n inner^n` for `n < terms`,
    /// truncated to precision `p`.
    fn compose_terms(&self, inner: &Self, terms: usize, p: usize) -> Result<Self> {
        let ring = &self.ring;
        let mut result = Series::zero(ring.clone(), p);
        let mut power = Series::one(ring.clone(), p);
        for n in 0..terms {
            if n > 0 {
                power = power.convolve(inner, p);
                if power.is_zero() {
                    break;
                }
            }
            let a_n = &self.coeffs[n];
            if !ring.is_zero(a_n) {
                result = result.add(&power.scale(a_n))?;
            }
        }
        Ok(result)
    }

    /// Compositional inverse: the series `b` with `self(b) = b(self) = X`.
    ///
    /// Uses the triangular recursion on the coefficients of the powers of
    /// `self`: with `a_{k,n} = [X^n] self^k`, set `b_1 = a_{1,1}^-1` and
    /// `b_n = -a_{n,n}^-1 * sum_{k<n} b_k a_{k,n}`.
    pub fn reverse(&self) -> Result<Self> {
        let ring = &self.ring;
        match self.valuation() {
            Valuation::Exact(1) => {}
            v => {
                return Err(Error::NotReversible(format!(
                    "valuation must be exactly 1, found {v:?}"
                )))
            }
        }
        let a1_inv = ring
            .try_inverse(&self.coeffs[1])
            .map_err(|_| Error::NotReversible("linear coefficient is not a unit".into()))?;
        let n = self.precision();

        // powers[k] = self^(k+1) truncated to precision n
        let mut powers: Vec<Series<R>> = Vec::with_capacity(n.saturating_sub(1));
        let mut current = self.truncate(n)?;
        powers.push(current.clone());
        for _ in 2..n {
            current = current.convolve(self, n);
            powers.push(current.clone());
        }

        let mut b = vec![ring.zero(); n];
        if n > 1 {
            b[1] = a1_inv;
        }
        for m in 2..n {
            let mut acc = ring.zero();
            for k in 1..m {
                let a_k_m = &powers[k - 1].coeffs[m];
                if ring.is_zero(a_k_m) || ring.is_zero(&b[k]) {
                    continue;
                }
                acc = ring.add(&acc, &ring.mul(&b[k], a_k_m));
            }
            let a_m_m_inv = ring.try_inverse(&powers[m - 1].coeffs[m])?;
            b[m] = ring.neg(&ring.mul(&a_m_m_inv, &acc));
        }
        Ok(Series {
            ring: ring.clone(),
            coeffs: b,
        })
    }

    /// Formal derivative; precision drops by one.
    pub fn derivative(&self) -> Result<Self> {
        self.hasse_scaled(1, true)
    }

    /// k-th Hasse derivative `H^k(a) = sum_{n>=k} binom(n,k) a_n X^(n-k)`.
    /// Well-defined over every ring; precision drops by `k`.
    pub fn hasse(&self, k: usize) -> Result<Self> {
        self.hasse_scaled(k, false)
    }

    fn hasse_scaled(&self, k: usize, ordinary: bool) -> Result<Self> {
        let n = self.precision();
        if k >= n {
            return Err(Error::PrecisionExhausted(format!(
                "derivative order {k} exhausts precision {n}"
            )));
        }
        let ring = &self.ring;
        let mut coeffs = Vec::with_capacity(n - k);
        let mut binom = BigInt::one();
        let mut factorial = BigInt::one();
        if ordinary {
            for i in 1..=k {
                factorial *= i;
            }
        }
        for m in k..n {
            // binom = C(m, k); ordinary derivatives use the falling factorial
            // m(m-1)...(m-k+1) = C(m,k) * k! instead.
            if m > k {
                binom = binom * m / (m - k);
            }
            let factor = if ordinary {
                ring.from_bigint(&(&binom * &factorial))
            } else {
                ring.from_bigint(&binom)
            };
            coeffs.push(ring.mul(&factor, &self.coeffs[m]));
        }
        Ok(Series {
            ring: ring.clone(),
            coeffs,
        })
    }

    /// Applies a ring homomorphism coefficientwise (e.g. reduction mod m).
    pub fn map_ring<S: Ring>(
        &self,
        target: S,
        f: impl Fn(&R::Elem) -> S::Elem,
    ) -> Series<S> {
        Series {
            ring: target,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Polynomial evaluation at a point, treating the known coefficients as
    /// the whole polynomial (Horner scheme).
    pub fn eval_at(&self, x: &R::Elem) -> R::Elem {
        let ring = &self.ring;
        let mut acc = ring.zero();
        for c in self.coeffs.iter().rev() {
            acc = ring.add(&ring.mul(&acc, x), c);
        }
        acc
    }
}

/// Full polynomial product of two coefficient slices (length `a + b - 1`).
fn karatsuba<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    const THRESHOLD: usize = 16;
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    if a.len().min(b.len()) <= THRESHOLD {
        let mut out = vec![ring.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if ring.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !ring.is_zero(y) {
                    out[i + j] = ring.add(&out[i + j], &ring.mul(x, y));
                }
            }
        }
        return out;
    }
    let half = a.len().max(b.len()) / 2;
    let (a0, a1) = a.split_at(half.min(a.len()));
    let (b0, b1) = b.split_at(half.min(b.len()));
    let z0 = karatsuba(ring, a0, b0);
    let z2 = karatsuba(ring, a1, b1);
    let a01 = padded_add(ring, a0, a1);
    let b01 = padded_add(ring, b0, b1);
    let mut z1 = karatsuba(ring, &a01, &b01);
    for (i, v) in z0.iter().enumerate() {
        z1[i] = ring.sub(&z1[i], v);
    }
    for (i, v) in z2.iter().enumerate() {
        z1[i] = ring.sub(&z1[i], v);
    }
    let len = a.len() + b.len() - 1;
    let mut out = vec![ring.zero(); len];
    for (i, v) in z0.into_iter().enumerate() {
        out[i] = ring.add(&out[i], &v);
    }
    for (i, v) in z1.into_iter().enumerate() {
        if i + half < len {
            out[i + half] = ring.add(&out[i + half], &v);
        }
    }
    for (i, v) in z2.into_iter().enumerate() {
        out[i + 2 * half] = ring.add(&out[i + 2 * half], &v);
    }
    out
}

fn padded_add<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    let len = a.len().max(b.len());
    (0..len)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(|| ring.zero());
            let y = b.get(i).cloned().unwrap_or_else(|| ring.zero());
            ring.add(&x, &y)
        })
        .collect()
}

#[cfg(test)]
mod tests;

//! Gaussian coefficients, theta sums and truncated infinite products.
//!
//! - [`x_factorial`]: the finite product `(1-X)(1-X^2)...(1-X^n)`
//! - [`gauss_binom`]: Gaussian binomial coefficients via their recurrence
//! - [`theta_sum_int`] / [`theta_sum_alpha`]: two-sided sums with quadratic
//!   exponents, the right-hand sides of the triple-product family
//! - [`product_build`]: truncated products over term families with linear
//!   exponents
//! - [`registry`]: the identity table verified by `verify_identity`
//!
//! Everything here is exact; order is always an explicit argument.

pub mod registry;

pub use registry::{identity_ids, verify_all, verify_identity, IdentityReport, Mismatch};

use crate::coeffring::{AlphaRing, IntegerRing, Ring};
use crate::error::{Error, Result};
use crate::fps::Series;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `X^n! = (1-X)(1-X^2)...(1-X^n)` truncated to the given order.
pub fn x_factorial<R: Ring>(ring: &R, n: usize, order: usize) -> Series<R> {
    let mut result = Series::one(ring.clone(), order.max(1));
    let minus_one = ring.from_i64(-1);
    for k in 1..=n {
        if k >= order {
            break;
        }
        result = mul_one_plus_monomial(&result, &minus_one, k);
    }
    result
}

/// Destructive multiply by `(1 + c X^e)` at fixed precision.
fn mul_one_plus_monomial<R: Ring>(s: &Series<R>, c: &R::Elem, e: usize) -> Series<R> {
    let ring = s.ring().clone();
    let n = s.precision();
    let mut coeffs: Vec<R::Elem> = s.coeffs().to_vec();
    if e == 0 {
        let factor = ring.add(&ring.one(), c);
        for v in coeffs.iter_mut() {
            *v = ring.mul(v, &factor);
        }
    } else {
        for i in (e..n).rev() {
            let shifted = ring.mul(c, s.coeff(i - e));
            coeffs[i] = ring.add(&coeffs[i], &shifted);
        }
    }
    Series::from_coeffs(ring, coeffs).expect("nonempty")
}

/// The Gaussian coefficient as an exact integer polynomial, computed by the
/// recurrence `gauss(n+1,k) = X^k gauss(n,k) + gauss(n,k-1)`.
///
/// Out-of-range `k` yields the zero polynomial. The result has full precision
/// `k(n-k) + 1` (degree plus one).
pub fn gauss_binom(n: usize, k: i64) -> Series<IntegerRing> {
    if k < 0 || k as usize > n {
        return Series::zero(IntegerRing, 1);
    }
    let k = k as usize;
    let degree_bound = k * (n - k) + 1;
    // row[j] = gauss(m, j) as coefficient vectors, built for m = 0..n
    let mut row: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for m in 0..n {
        let width = (m + 1).min(k) + 1;
        let mut next: Vec<Vec<BigInt>> = Vec::with_capacity(width);
        for j in 0..width {
            let mut v = vec![BigInt::zero(); degree_bound];
            // X^j * gauss(m, j)
            if let Some(prev) = row.get(j) {
                for (i, c) in prev.iter().enumerate() {
                    if i + j < degree_bound {
                        v[i + j] += c;
                    }
                }
            }
            // + gauss(m, j-1)
            if j >= 1 {
                if let Some(prev) = row.get(j - 1) {
                    for (i, c) in prev.iter().enumerate() {
                        if i < degree_bound {
                            v[i] += c;
                        }
                    }
                }
            }
            next.push(v);
        }
        row = next;
    }
    let coeffs = row.swap_remove(k);
    Series::from_coeffs(IntegerRing, coeffs).expect("nonempty")
}

/// Same Gaussian coefficient through the second recurrence branch
/// `gauss(n+1,k) = gauss(n,k) + X^(n+1-k) gauss(n,k-1)`; used to cross-check
/// the primary path.
pub fn gauss_binom_alt(n: usize, k: i64) -> Series<IntegerRing> {
    if k < 0 || k as usize > n {
        return Series::zero(IntegerRing, 1);
    }
    let k = k as usize;
    let degree_bound = k * (n - k) + 1;
    let mut row: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for m in 0..n {
        let width = (m + 1).min(k) + 1;
        let mut next: Vec<Vec<BigInt>> = Vec::with_capacity(width);
        for j in 0..width {
            let mut v = vec![BigInt::zero(); degree_bound];
            if let Some(prev) = row.get(j) {
                for (i, c) in prev.iter().enumerate() {
                    if i < degree_bound {
                        v[i] += c;
                    }
                }
            }
            if j >= 1 {
                if let Some(prev) = row.get(j - 1) {
                    let shift = m + 1 - j;
                    for (i, c) in prev.iter().enumerate() {
                        if i + shift < degree_bound {
                            v[i + shift] += c;
                        }
                    }
                }
            }
            next.push(v);
        }
        row = next;
    }
    let coeffs = row.swap_remove(k);
    Series::from_coeffs(IntegerRing, coeffs).expect("nonempty")
}

/// Two-sided theta sum description: terms `(+-1)^k a^(c k + d) X^((A k^2 + B k)/2)`
/// summed over all integers `k` whose exponent stays below the order.
#[derive(Debug, Clone)]
pub struct ThetaSpec {
    /// Multiply each term by `(-1)^k`.
    pub signed: bool,
    /// Quadratic coefficient `A` of the exponent `(A k^2 + B k)/2`; must be
    /// positive so only finitely many `k` contribute below any order.
    pub quad_a: BigRational,
    /// Linear coefficient `B`.
    pub quad_b: BigRational,
    /// Optional symbol power `a^(c k + d)` attached to each term.
    pub alpha_power: Option<(i64, i64)>,
}

impl ThetaSpec {
    pub fn new(signed: bool, a: i64, b: i64) -> Self {
        ThetaSpec {
            signed,
            quad_a: BigRational::from(BigInt::from(a)),
            quad_b: BigRational::from(BigInt::from(b)),
            alpha_power: None,
        }
    }

    pub fn with_alpha(mut self, c: i64, d: i64) -> Self {
        self.alpha_power = Some((c, d));
        self
    }
}

/// All integers `k` with `(A k^2 + B k)/2 < order`, with their exponents.
///
/// Iterates outward from the vertex of the quadratic, so no closed-form bound
/// on `k` is needed; monotonicity past the vertex makes the walk complete.
fn theta_support(spec: &ThetaSpec, order: usize) -> Result<Vec<(i64, usize)>> {
    if !spec.quad_a.is_positive() {
        return Err(Error::Domain(
            "theta quadratic coefficient must be positive".into(),
        ));
    }
    let exponent = |k: i64| -> Result<Option<usize>> {
        let kq = BigRational::from(BigInt::from(k));
        let e = (&spec.quad_a * &kq * &kq + &spec.quad_b * &kq)
            / BigRational::from(BigInt::from(2));
        if !e.denom().is_one() {
            return Err(Error::Domain(format!(
                "theta exponent ({}k^2 + {}k)/2 is not an integer at k = {k}",
                spec.quad_a, spec.quad_b
            )));
        }
        if e.numer().is_negative() {
            return Err(Error::Domain(format!(
                "theta exponent is negative at k = {k}"
            )));
        }
        let e: BigInt = e.numer().clone();
        if e < BigInt::from(order) {
            Ok(Some(usize::try_from(e).expect("below order")))
        } else {
            Ok(None)
        }
    };
    // Vertex at -B/(2A); walk down from floor(vertex) and up from there.
    let vertex = -&spec.quad_b / (BigRational::from(BigInt::from(2)) * &spec.quad_a);
    let k0: i64 = vertex.floor().numer().try_into().map_err(|_| {
        Error::Domain("theta vertex out of the supported integer range".into())
    })?;
    let mut support = Vec::new();
    let mut k = k0;
    while let Some(e) = exponent(k)? {
        support.push((k, e));
        k -= 1;
    }
    let mut k = k0 + 1;
    while let Some(e) = exponent(k)? {
        support.push((k, e));
        k += 1;
    }
    support.sort();
    Ok(support)
}

/// Theta sum over the integers, truncated below `order`.
pub fn theta_sum_int(spec: &ThetaSpec, order: usize) -> Result<Series<IntegerRing>> {
    if spec.alpha_power.is_some() {
        return Err(Error::Domain(
            "a symbol power needs the alpha coefficient ring".into(),
        ));
    }
    let ring = IntegerRing;
    let mut coeffs = vec![BigInt::zero(); order.max(1)];
    for (k, e) in theta_support(spec, order)? {
        let sign = if spec.signed && k.rem_euclid(2) == 1 {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        coeffs[e] += sign;
    }
    Series::from_coeffs(ring, coeffs)
}

/// Theta sum over `Z[a, a^-1]`, for the symbolic triple-product identities.
pub fn theta_sum_alpha(spec: &ThetaSpec, order: usize) -> Result<Series<AlphaRing>> {
    let ring = AlphaRing;
    let mut coeffs = vec![ring.zero(); order.max(1)];
    let (c, d) = spec.alpha_power.unwrap_or((0, 0));
    for (k, e) in theta_support(spec, order)? {
        let sign = if spec.signed && k.rem_euclid(2) == 1 {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        let term = crate::coeffring::AlphaPoly::monomial(c * k + d, sign);
        coeffs[e] = ring.add(&coeffs[e], &term);
    }
    Series::from_coeffs(ring, coeffs)
}

/// Restriction on the family index `k = 1, 2, 3, ...` of a product term.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KFilter {
    All,
    /// Keep `k` with `k = residue (mod modulus)`.
    ModClass { modulus: u64, residue: u64 },
    /// Keep `k` not divisible by the divisor.
    NotDivisibleBy(u64),
}

impl KFilter {
    fn keeps(self, k: u64) -> bool {
        match self {
            KFilter::All => true,
            KFilter::ModClass { modulus, residue } => k % modulus == residue % modulus,
            KFilter::NotDivisibleBy(d) => k % d != 0,
        }
    }
}

/// One factor family `prod_k (1 + coeff * X^(step*k + shift))` over the
/// filtered indices `k >= 1`.
#[derive(Debug, Clone)]
pub struct ProductTerm<R: Ring> {
    pub coeff: R::Elem,
    pub step: i64,
    pub shift: i64,
    pub filter: KFilter,
}

impl<R: Ring> ProductTerm<R> {
    pub fn new(coeff: R::Elem, step: i64, shift: i64) -> Self {
        ProductTerm {
            coeff,
            step,
            shift,
            filter: KFilter::All,
        }
    }

    pub fn filtered(mut self, filter: KFilter) -> Self {
        self.filter = filter;
        self
    }
}

/// Truncated product of the given term families: only factors whose exponent
/// lands below `order` are multiplied, which is exhaustive because the
/// exponents grow with `k`.
pub fn product_build<R: Ring>(
    ring: &R,
    terms: &[ProductTerm<R>],
    order: usize,
) -> Result<Series<R>> {
    let mut result = Series::one(ring.clone(), order.max(1));
    for term in terms {
        if term.step < 1 {
            return Err(Error::DivergentProduct(format!(
                "exponent family {}k + {} does not increase",
                term.step, term.shift
            )));
        }
        let mut k: i64 = 1;
        loop {
            let e = term.step * k + term.shift;
            if e >= order as i64 {
                break;
            }
            if term.filter.keeps(k as u64) {
                if e < 0 {
                    return Err(Error::Domain(format!(
                        "factor exponent {e} is negative at k = {k}"
                    )));
                }
                result = mul_one_plus_monomial(&result, &term.coeff, e as usize);
            }
            k += 1;
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests;

//! Constructive local algebra: Weierstrass division and preparation over
//! power series in two layers, Hensel lifting, and Puiseux arithmetic.
//!
//! A [`BiSeries`] is a series in `Y` whose coefficients are series in `X`,
//! truncated in both directions: `Y`-precision `M`, `X`-precision `N`
//! (uniform across the `Y`-coefficients).

pub mod hensel;
pub mod puiseux;

pub use hensel::hensel_lift;
pub use puiseux::Puiseux;

use crate::coeffring::Ring;
use crate::error::{Error, Result};
use crate::fps::Series;
use serde_json::{json, Value};

/// A truncated element of `K[[X]][[Y]]`.
#[derive(Clone, PartialEq)]
pub struct BiSeries<R: Ring> {
    x_prec: usize,
    y_coeffs: Vec<Series<R>>,
}

impl<R: Ring> std::fmt::Debug for BiSeries<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .y_coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| format!("({}) Y^{k}", c.render()))
            .collect();
        write!(f, "BiSeries[{}]", parts.join(" + "))
    }
}

impl<R: Ring> BiSeries<R> {
    /// Builds from `Y`-coefficients, normalizing them to a common
    /// `X`-precision (the minimum of the inputs).
    pub fn new(y_coeffs: Vec<Series<R>>) -> Result<Self> {
        if y_coeffs.is_empty() {
            return Err(Error::Domain("need at least one Y-coefficient".into()));
        }
        let x_prec = y_coeffs.iter().map(Series::precision).min().unwrap();
        let y_coeffs = y_coeffs
            .into_iter()
            .map(|c| c.truncate(x_prec))
            .collect::<Result<Vec<_>>>()?;
        Ok(BiSeries { x_prec, y_coeffs })
    }

    pub fn zero(ring: R, x_prec: usize, y_prec: usize) -> Self {
        BiSeries {
            x_prec,
            y_coeffs: vec![Series::zero(ring, x_prec); y_prec.max(1)],
        }
    }

    pub fn ring(&self) -> &R {
        self.y_coeffs[0].ring()
    }

    pub fn x_precision(&self) -> usize {
        self.x_prec
    }

    pub fn y_precision(&self) -> usize {
        self.y_coeffs.len()
    }

    /// Coefficient of `Y^k`.
    pub fn y_coeff(&self, k: usize) -> &Series<R> {
        &self.y_coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.y_coeffs.iter().all(Series::is_zero)
    }

    /// The series `alpha(0, Y)` of constant `X`-terms, as plain elements.
    pub fn at_x_zero(&self) -> Vec<R::Elem> {
        self.y_coeffs.iter().map(|c| c.coeff(0).clone()).collect()
    }

    /// Smallest `j` with `alpha(0,Y)` nonzero at `Y^j`, the regularity degree.
    pub fn y_regularity(&self) -> Option<usize> {
        let ring = self.ring();
        self.y_coeffs
            .iter()
            .position(|c| !ring.is_zero(c.coeff(0)))
    }

    fn common(&self, other: &Self) -> (usize, usize) {
        (
            self.x_prec.min(other.x_prec),
            self.y_precision().min(other.y_precision()),
        )
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let (xp, yp) = self.common(other);
        let mut out = Vec::with_capacity(yp);
        for k in 0..yp {
            out.push(
                self.y_coeffs[k]
                    .truncate(xp)?
                    .add(&other.y_coeffs[k].truncate(xp)?)?,
            );
        }
        BiSeries::new(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        BiSeries {
            x_prec: self.x_prec,
            y_coeffs: self.y_coeffs.iter().map(Series::neg).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let (xp, yp) = self.common(other);
        let ring = self.ring().clone();
        let mut out = vec![Series::zero(ring, xp); yp];
        for (i, a) in self.y_coeffs.iter().enumerate().take(yp) {
            if a.is_zero() {
                continue;
            }
            let a = a.truncate(xp)?;
            for (j, b) in other.y_coeffs.iter().enumerate() {
                if i + j >= yp {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                let prod = a.mul(&b.truncate(xp)?)?.truncate(xp)?;
                out[i + j] = out[i + j].add(&prod)?;
            }
        }
        BiSeries::new(out)
    }

    /// Multiplicative inverse via the recursion on `Y`-coefficients; the
    /// constant coefficient (a series in `X`) must itself be invertible.
    pub fn inverse(&self) -> Result<Self> {
        let a0_inv = self.y_coeffs[0].inverse()?.truncate(self.x_prec)?;
        let yp = self.y_precision();
        let mut out: Vec<Series<R>> = Vec::with_capacity(yp);
        out.push(a0_inv.clone());
        for k in 1..yp {
            let mut acc = Series::zero(self.ring().clone(), self.x_prec);
            for i in 1..=k {
                if self.y_coeffs[i].is_zero() || out[k - i].is_zero() {
                    continue;
                }
                acc = acc.add(&self.y_coeffs[i].mul(&out[k - i])?.truncate(self.x_prec)?)?;
            }
            out.push(a0_inv.mul(&acc)?.truncate(self.x_prec)?.neg());
        }
        BiSeries::new(out)
    }

    /// Truncates in both directions.
    pub fn truncate(&self, x_prec: usize, y_prec: usize) -> Result<Self> {
        if y_prec < 1 || y_prec > self.y_precision() {
            return Err(Error::Domain(format!(
                "cannot truncate Y-precision {} to {y_prec}",
                self.y_precision()
            )));
        }
        let coeffs = self.y_coeffs[..y_prec]
            .iter()
            .map(|c| c.truncate(x_prec))
            .collect::<Result<Vec<_>>>()?;
        BiSeries::new(coeffs)
    }

    /// JSON form: a list of univariate series objects, low `Y`-degree first.
    pub fn to_json(&self) -> Value {
        json!({
            "y_coeffs": self.y_coeffs.iter().map(Series::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(ring: R, value: &Value) -> Result<Self> {
        let list = value
            .get("y_coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Domain("BiSeries JSON needs \"y_coeffs\"".into()))?;
        let coeffs = list
            .iter()
            .map(|v| Series::from_json(ring.clone(), v))
            .collect::<Result<Vec<_>>>()?;
        BiSeries::new(coeffs)
    }
}

/// Outcome of a Weierstrass division `beta = alpha * rho + delta`.
#[derive(Debug, Clone)]
pub struct WeierstrassDivision<R: Ring> {
    pub quotient: BiSeries<R>,
    /// Remainder polynomial in `Y` of degree `< d`, as its coefficients.
    pub remainder: Vec<Series<R>>,
}

/// Weierstrass division: for `alpha` that is `Y`-regular of degree `d`
/// (i.e. `alpha(0,Y)` has valuation `d`), writes `beta = alpha rho + delta`
/// with `deg_Y(delta) < d`.
///
/// The quotient comes out with `Y`-precision `M - d` where `M` is the common
/// input `Y`-precision; the recomposition holds modulo `(X^N, Y^(M-d))`.
/// The fixed-point sum terminates because every application of the
/// contraction raises the `X`-valuation by at least 1.
pub fn weierstrass_divide<R: Ring>(
    alpha: &BiSeries<R>,
    beta: &BiSeries<R>,
) -> Result<WeierstrassDivision<R>> {
    let ring = alpha.ring().clone();
    let d = alpha
        .y_regularity()
        .ok_or_else(|| Error::NotRegular("alpha(0,Y) vanishes within the precision".into()))?;
    let (xp, yp) = alpha.common(beta);
    if d >= yp {
        return Err(Error::NotRegular(format!(
            "regularity degree {d} is not below the Y-precision {yp}"
        )));
    }
    let m = yp - d;

    // Gamma_1: Y-coefficients below d, an exact polynomial (padded with true
    // zeros so products keep the full window); Gamma_2: shift down by d.
    let gamma1 = |s: &BiSeries<R>| -> Result<BiSeries<R>> {
        let mut coeffs: Vec<Series<R>> = s.y_coeffs[..d.min(s.y_coeffs.len())].to_vec();
        while coeffs.len() < yp {
            coeffs.push(Series::zero(ring.clone(), s.x_prec));
        }
        BiSeries::new(coeffs)
    };
    let gamma2 = |s: &BiSeries<R>, len: usize| -> Result<BiSeries<R>> {
        let mut coeffs: Vec<Series<R>> = s.y_coeffs.iter().skip(d).cloned().collect();
        coeffs.truncate(len);
        while coeffs.len() < len {
            coeffs.push(Series::zero(ring.clone(), s.x_prec));
        }
        BiSeries::new(coeffs)
    };

    let alpha1 = gamma1(alpha)?;
    let alpha2 = gamma2(alpha, m)?;
    let alpha2_inv = alpha2.inverse()?;

    // rho = alpha2^-1 * sum (-1)^k Gamma^k (Gamma_2 beta), where
    // Gamma(g) = Gamma_2(alpha1 * alpha2^-1 * g).
    let mut acc = gamma2(beta, m)?.truncate(xp, m)?;
    let mut term = acc.clone();
    let mut iterations = 0usize;
    loop {
        // every round multiplies by alpha1, whose terms all contain X
        let image = alpha1.mul(&alpha2_inv.mul(&term)?)?;
        let shifted = gamma2(&image, m)?.truncate(xp, m)?;
        if shifted.is_zero() {
            break;
        }
        term = shifted.neg();
        acc = acc.add(&term)?;
        iterations += 1;
        if iterations > xp + 2 {
            return Err(Error::Domain(
                "Weierstrass iteration failed to contract".into(),
            ));
        }
    }
    let quotient = alpha2_inv.mul(&acc)?.truncate(xp, m)?;

    // delta = beta - alpha * rho; the construction kills every Y-degree >= d
    // (the tests probe this through the recomposition identity).
    let recomposed = alpha.mul(&quotient)?;
    let difference = beta.truncate(xp, yp)?.sub(&recomposed)?;
    let mut remainder = Vec::with_capacity(d);
    for k in 0..d {
        remainder.push(difference.y_coeff(k).clone());
    }
    Ok(WeierstrassDivision {
        quotient,
        remainder,
    })
}

/// Outcome of a Weierstrass preparation `alpha = unit * wpoly`.
#[derive(Debug, Clone)]
pub struct WeierstrassPreparation<R: Ring> {
    pub unit: BiSeries<R>,
    /// Monic polynomial coefficients `w_0, ..., w_(d-1), 1` in `Y`, with
    /// `wpoly(0, Y) = Y^d`.
    pub wpoly: Vec<Series<R>>,
}

/// Weierstrass preparation: factors a `Y`-regular series as a unit times a
/// monic `Y`-polynomial of degree `d` whose reduction at `X = 0` is `Y^d`.
///
/// Derived from [`weierstrass_divide`] applied to `Y^d`.
pub fn weierstrass_prepare<R: Ring>(alpha: &BiSeries<R>) -> Result<WeierstrassPreparation<R>> {
    let ring = alpha.ring().clone();
    let d = alpha
        .y_regularity()
        .ok_or_else(|| Error::NotRegular("alpha(0,Y) vanishes within the precision".into()))?;
    let xp = alpha.x_precision();
    let yp = alpha.y_precision();
    let mut y_d = vec![Series::zero(ring.clone(), xp); yp];
    y_d[d] = Series::one(ring.clone(), xp);
    let division = weierstrass_divide(alpha, &BiSeries::new(y_d)?)?;

    // alpha * rho = Y^d - delta, so wpoly = Y^d - delta and unit = rho^-1.
    let unit = division.quotient.inverse()?;
    let mut wpoly: Vec<Series<R>> = division.remainder.iter().map(Series::neg).collect();
    while wpoly.len() < d {
        wpoly.push(Series::zero(ring.clone(), xp));
    }
    wpoly.push(Series::one(ring, xp));
    Ok(WeierstrassPreparation { unit, wpoly })
}

//! Hensel lifting: refines a coprime factorization of a polynomial's
//! reduction at `X = 0` into a factorization over the power series ring,
//! one power of `X` per step.

use crate::coeffring::Ring;
use crate::error::{Error, Result};
use crate::fps::Series;

/// Polynomials in `Y` over the scalar ring: dense ascending coefficients.
type KPoly<E> = Vec<E>;

fn kpoly_trim<R: Ring>(ring: &R, p: &mut KPoly<R::Elem>) {
    while p.len() > 1 && ring.is_zero(p.last().unwrap()) {
        p.pop();
    }
}

fn kpoly_deg<R: Ring>(ring: &R, p: &KPoly<R::Elem>) -> Option<usize> {
    p.iter().rposition(|c| !ring.is_zero(c))
}

fn kpoly_mul<R: Ring>(ring: &R, a: &KPoly<R::Elem>, b: &KPoly<R::Elem>) -> KPoly<R::Elem> {
    let mut out = vec![ring.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if ring.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let prod = ring.mul(x, y);
            out[i + j] = ring.add(&out[i + j], &prod);
        }
    }
    out
}

fn kpoly_sub<R: Ring>(ring: &R, a: &KPoly<R::Elem>, b: &KPoly<R::Elem>) -> KPoly<R::Elem> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(|| ring.zero());
            let y = b.get(i).cloned().unwrap_or_else(|| ring.zero());
            ring.sub(&x, &y)
        })
        .collect()
}

fn kpoly_scale<R: Ring>(ring: &R, a: &KPoly<R::Elem>, c: &R::Elem) -> KPoly<R::Elem> {
    a.iter().map(|x| ring.mul(x, c)).collect()
}

/// Euclidean division by a polynomial with unit leading coefficient.
fn kpoly_divmod<R: Ring>(
    ring: &R,
    a: &KPoly<R::Elem>,
    b: &KPoly<R::Elem>,
) -> Result<(KPoly<R::Elem>, KPoly<R::Elem>)> {
    let db = kpoly_deg(ring, b).ok_or_else(|| Error::Domain("division by zero polynomial".into()))?;
    let lead_inv = ring.try_inverse(&b[db])?;
    let mut rem = a.clone();
    let da = match kpoly_deg(ring, &rem) {
        None => return Ok((vec![ring.zero()], rem)),
        Some(d) => d,
    };
    if da < db {
        return Ok((vec![ring.zero()], rem));
    }
    let mut quot = vec![ring.zero(); da - db + 1];
    for i in (0..=da - db).rev() {
        let c = ring.mul(&rem[db + i], &lead_inv);
        if ring.is_zero(&c) {
            continue;
        }
        quot[i] = c.clone();
        for (j, bj) in b.iter().enumerate() {
            let sub = ring.mul(&c, bj);
            rem[i + j] = ring.sub(&rem[i + j], &sub);
        }
    }
    kpoly_trim(ring, &mut rem);
    Ok((quot, rem))
}

/// Extended euclidean algorithm: `(g, s, t)` with `a s + b t = g`, `g` monic.
fn kpoly_xgcd<R: Ring>(
    ring: &R,
    a: &KPoly<R::Elem>,
    b: &KPoly<R::Elem>,
) -> Result<(KPoly<R::Elem>, KPoly<R::Elem>, KPoly<R::Elem>)> {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    let mut s0 = vec![ring.one()];
    let mut s1 = vec![ring.zero()];
    let mut t0 = vec![ring.zero()];
    let mut t1 = vec![ring.one()];
    while kpoly_deg(ring, &r1).is_some() {
        let (q, r) = kpoly_divmod(ring, &r0, &r1)?;
        let new_s = kpoly_sub(ring, &s0, &kpoly_mul(ring, &q, &s1));
        let new_t = kpoly_sub(ring, &t0, &kpoly_mul(ring, &q, &t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = new_s;
        t0 = t1;
        t1 = new_t;
    }
    let dg = kpoly_deg(ring, &r0)
        .ok_or_else(|| Error::Domain("gcd of zero polynomials".into()))?;
    let lead_inv = ring.try_inverse(&r0[dg])?;
    Ok((
        kpoly_scale(ring, &r0, &lead_inv),
        kpoly_scale(ring, &s0, &lead_inv),
        kpoly_scale(ring, &t0, &lead_inv),
    ))
}

/// A monic polynomial in `Y` with power-series coefficients, dense ascending.
pub type SeriesPoly<R> = Vec<Series<R>>;

/// Hensel lifting.
///
/// `alpha` is a monic polynomial in `Y` over `K[[X]]` whose reduction at
/// `X = 0` factors as `f1 * f2` with `f1`, `f2` monic and coprime. Returns
/// monic `(beta, gamma)` with `alpha = beta * gamma (mod X^x_precision)`,
/// `beta` reducing to `f1` and `gamma` to `f2`, refining one `X`-power per
/// step.
pub fn hensel_lift<R: Ring>(
    alpha: &SeriesPoly<R>,
    f1: &[R::Elem],
    f2: &[R::Elem],
    x_precision: usize,
) -> Result<(SeriesPoly<R>, SeriesPoly<R>)> {
    if alpha.is_empty() {
        return Err(Error::Domain("empty polynomial".into()));
    }
    let ring = alpha[0].ring().clone();
    let n = alpha.len() - 1;
    let d1 = f1.len() - 1;
    let d2 = f2.len() - 1;
    if d1 + d2 != n {
        return Err(Error::Domain(format!(
            "degree mismatch: deg f1 + deg f2 = {} but deg alpha = {n}",
            d1 + d2
        )));
    }
    let one = ring.one();
    if f1.last() != Some(&one) || f2.last() != Some(&one) {
        return Err(Error::Domain("f1 and f2 must be monic".into()));
    }
    if alpha[n].coeff(0) != &one {
        return Err(Error::Domain("alpha must be monic".into()));
    }

    // The reduction of alpha must be exactly f1 * f2.
    let reduction: Vec<R::Elem> = alpha.iter().map(|c| c.coeff(0).clone()).collect();
    let product = kpoly_mul(&ring, &f1.to_vec(), &f2.to_vec());
    for i in 0..=n {
        let lhs = &reduction[i];
        let rhs = product.get(i).cloned().unwrap_or_else(|| ring.zero());
        if *lhs != rhs {
            return Err(Error::Domain(format!(
                "reduction of alpha differs from f1*f2 at Y^{i}"
            )));
        }
    }

    // Bezout data: f1 sigma + f2 tau = 1; fails when f1, f2 share a factor.
    let (g, _sigma, tau) = kpoly_xgcd(&ring, &f1.to_vec(), &f2.to_vec())?;
    if kpoly_deg(&ring, &g) != Some(0) {
        return Err(Error::Domain(
            "f1 and f2 are not coprime; no Bezout identity exists".into(),
        ));
    }

    let np = x_precision.max(1);
    // Working copies at full X-precision.
    let pad = |coeffs: &[R::Elem]| -> Vec<Series<R>> {
        coeffs
            .iter()
            .map(|c| Series::constant(ring.clone(), c, np))
            .collect()
    };
    let mut beta = pad(f1);
    let mut gamma = pad(f2);

    for k in 1..np {
        // e = [X^k](alpha - beta gamma), a scalar polynomial of degree < n.
        let mut e: Vec<R::Elem> = vec![ring.zero(); n + 1];
        for (i, slot) in e.iter_mut().enumerate() {
            let mut acc = if i < alpha.len() && k < alpha[i].precision() {
                alpha[i].coeff(k).clone()
            } else {
                ring.zero()
            };
            for a in 0..=i.min(d1) {
                let b = i - a;
                if b > d2 {
                    continue;
                }
                for t in 0..=k {
                    let x = beta[a].coeff(t);
                    let y = gamma[b].coeff(k - t);
                    acc = ring.sub(&acc, &ring.mul(x, y));
                }
            }
            *slot = acc;
        }
        kpoly_trim(&ring, &mut e);
        if e.iter().all(|c| ring.is_zero(c)) {
            continue;
        }
        if kpoly_deg(&ring, &e).is_some_and(|d| d >= n) {
            return Err(Error::Domain("lift residual has too large a degree".into()));
        }
        // Solve f1 u + f2 v = e with deg v < d1, deg u < d2:
        // v = tau e mod f1, u = (e - f2 v) / f1.
        let (_, v) = kpoly_divmod(&ring, &kpoly_mul(&ring, &tau, &e), &f1.to_vec())?;
        let f2v = kpoly_mul(&ring, &f2.to_vec(), &v);
        let (u, rem) = kpoly_divmod(&ring, &kpoly_sub(&ring, &e, &f2v), &f1.to_vec())?;
        if kpoly_deg(&ring, &rem).is_some() {
            return Err(Error::Domain("Bezout correction failed to divide".into()));
        }
        // beta += X^k v (degree < d1), gamma += X^k u (degree < d2).
        for (i, c) in v.iter().enumerate() {
            if !ring.is_zero(c) {
                let bump = Series::monomial(ring.clone(), c, k, np);
                beta[i] = beta[i].add(&bump)?;
            }
        }
        for (i, c) in u.iter().enumerate() {
            if !ring.is_zero(c) {
                let bump = Series::monomial(ring.clone(), c, k, np);
                gamma[i] = gamma[i].add(&bump)?;
            }
        }
    }
    Ok((beta, gamma))
}

/// Multiplies two dense `Y`-polynomials over series, truncating in `X`.
pub fn series_poly_mul<R: Ring>(a: &SeriesPoly<R>, b: &SeriesPoly<R>) -> Result<SeriesPoly<R>> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::Domain("empty polynomial".into()));
    }
    let ring = a[0].ring().clone();
    let xp = a
        .iter()
        .chain(b.iter())
        .map(Series::precision)
        .min()
        .unwrap();
    let mut out = vec![Series::zero(ring, xp); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let prod = x.truncate(xp)?.mul(&y.truncate(xp)?)?.truncate(xp)?;
            out[i + j] = out[i + j].add(&prod)?;
        }
    }
    Ok(out)
}


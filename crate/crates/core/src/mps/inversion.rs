//! Multivariate inversion: compositional reversion of series tuples, the
//! Lagrange-Good coefficient formula and MacMahon's master theorem.

use super::matrix::{jacobi_matrix, permutations_with_sign};
use super::{Exponents, MSeries, SeriesMatrix};
use crate::coeffring::{RationalRing, Ring};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

/// Compositional inverse of a series tuple: `g` with `f o g = g o f = id`
/// below the cap.
///
/// Requires every component to vanish at 0 and the scalar Jacobi matrix at 0
/// to be invertible. The construction mirrors the inverse function theorem
/// proof: precondition with `S = J(f)(0)^-1` so the linear part becomes the
/// identity, then eliminate spurious monomials in graded-lex order.
pub fn m_reverse<R: Ring>(f: &[MSeries<R>]) -> Result<Vec<MSeries<R>>> {
    if f.is_empty() {
        return Err(Error::Domain("empty tuple".into()));
    }
    let ring = f[0].ring().clone();
    let n = f[0].nvars();
    if f.len() != n {
        return Err(Error::Domain(format!(
            "need as many components as variables; got {} for {n} variables",
            f.len()
        )));
    }
    let cap = f.iter().map(MSeries::cap).min().unwrap();
    for fi in f {
        if !ring.is_zero(&fi.constant_term()) {
            return Err(Error::NotReversible(
                "all components must vanish at the origin".into(),
            ));
        }
    }

    // Scalar Jacobi matrix at 0 and its inverse S.
    let j0: Vec<Vec<R::Elem>> = f
        .iter()
        .map(|fi| {
            (0..n)
                .map(|j| {
                    let mut e = vec![0u32; n];
                    e[j] = 1;
                    fi.coeff(&e)
                })
                .collect()
        })
        .collect();
    let s = scalar_inverse(&ring, &j0).map_err(|_| {
        Error::NotReversible("Jacobi matrix is singular at the origin".into())
    })?;

    // Preconditioned tuple with identity linear part.
    let mut f_tilde: Vec<MSeries<R>> = Vec::with_capacity(n);
    for row in &s {
        let mut acc = MSeries::zero(ring.clone(), n, cap);
        for (j, coeff) in row.iter().enumerate() {
            acc = acc.add(&f[j].truncate_cap(cap).scale(coeff))?;
        }
        f_tilde.push(acc);
    }

    // Cache of monomial images prod f_tilde_j^(e_j).
    let mut var_powers: Vec<Vec<MSeries<R>>> = vec![Vec::new(); n];
    let mono_image = |e: &Exponents, var_powers: &mut Vec<Vec<MSeries<R>>>| -> Result<MSeries<R>> {
        let mut acc = MSeries::one(ring.clone(), n, cap);
        for (var, &k) in e.0.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let cache = &mut var_powers[var];
            while cache.len() < k as usize {
                let next = match cache.last() {
                    None => f_tilde[var].clone(),
                    Some(prev) => prev.mul(&f_tilde[var])?,
                };
                cache.push(next);
            }
            acc = acc.mul(&cache[k as usize - 1])?;
        }
        Ok(acc)
    };

    // Monomial elimination, one component at a time.
    let mut h: Vec<MSeries<R>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut beta = MSeries::variable(ring.clone(), n, cap, i);
        let xi = beta.clone();
        let mut residual = f_tilde[i].sub(&xi)?; // beta(f~) - X_i
        let mut guard = 0usize;
        while let Some((e, c)) = residual.leading_term().map(|(e, c)| (e.clone(), c.clone())) {
            guard += 1;
            if guard > 1_000_000 {
                return Err(Error::Domain("reversion did not converge".into()));
            }
            let mono = MSeries::monomial(ring.clone(), n, cap, &e.0, &c);
            beta = beta.sub(&mono)?;
            let image = mono_image(&e, &mut var_powers)?.scale(&c);
            residual = residual.sub(&image)?;
        }
        h.push(beta);
    }

    // Undo the preconditioning: g_i = h_i(S X), where (S X)_j = sum_k s_jk X_k.
    let mut linear: Vec<MSeries<R>> = Vec::with_capacity(n);
    for row in &s {
        let mut acc = MSeries::zero(ring.clone(), n, cap);
        for (k, coeff) in row.iter().enumerate() {
            if !ring.is_zero(coeff) {
                acc = acc.add(&MSeries::variable(ring.clone(), n, cap, k).scale(coeff))?;
            }
        }
        linear.push(acc);
    }
    h.iter().map(|hi| hi.compose(&linear)).collect()
}

/// Inverse of a scalar matrix over the ring, via adjugate and determinant.
fn scalar_inverse<R: Ring>(ring: &R, m: &[Vec<R::Elem>]) -> Result<Vec<Vec<R::Elem>>> {
    let n = m.len();
    let det = scalar_det(ring, m);
    let det_inv = ring.try_inverse(&det)?;
    let mut out = vec![vec![ring.zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            // Cofactor of (j, i).
            let sub: Vec<Vec<R::Elem>> = m
                .iter()
                .enumerate()
                .filter(|(r, _)| *r != j)
                .map(|(_, row)| {
                    row.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != i)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let mut cof = if sub.is_empty() {
                ring.one()
            } else {
                scalar_det(ring, &sub)
            };
            if (i + j) % 2 == 1 {
                cof = ring.neg(&cof);
            }
            out[i][j] = ring.mul(&cof, &det_inv);
        }
    }
    Ok(out)
}

pub(crate) fn scalar_det<R: Ring>(ring: &R, m: &[Vec<R::Elem>]) -> R::Elem {
    let n = m.len();
    let mut acc = ring.zero();
    for (perm, sign) in permutations_with_sign(n) {
        let mut term = ring.from_i64(sign);
        for (i, &j) in perm.iter().enumerate() {
            term = ring.mul(&term, &m[i][j]);
        }
        acc = ring.add(&acc, &term);
    }
    acc
}

/// The Lagrange-Good expansion coefficient `c_(k1..kn)` of `a` along powers
/// of `beta`, where each `beta_i = X_i * (series with constant term 1)`:
/// the coefficient of `X^powers` in
/// `a * prod (X_i / beta_i)^(k_i + 1) * det(J(beta))`.
pub fn lagrange_good_coeff<R: Ring>(
    a: &MSeries<R>,
    beta: &[MSeries<R>],
    powers: &[u32],
) -> Result<R::Elem> {
    let ring = a.ring().clone();
    let n = a.nvars();
    if beta.len() != n || powers.len() != n {
        return Err(Error::Domain(
            "need one beta component and one exponent per variable".into(),
        ));
    }
    let mut product = a.clone();
    for (i, b) in beta.iter().enumerate() {
        let u = divide_by_variable(b, i)?;
        if u.constant_term() != ring.one() {
            return Err(Error::Domain(format!(
                "beta_{} is not X_{} times a series with constant term 1",
                i + 1,
                i + 1
            )));
        }
        let tau = u.inverse()?;
        let tau_pow = tau.pow_usize(powers[i] as usize + 1)?;
        product = product.mul(&tau_pow)?;
    }
    let jac = jacobi_matrix(beta)?.det()?;
    product = product.mul(&jac)?;
    Ok(product.coeff(powers))
}

/// Divides every term by `X_var`; each term needs a positive exponent there.
fn divide_by_variable<R: Ring>(a: &MSeries<R>, var: usize) -> Result<MSeries<R>> {
    let mut out = MSeries::zero(a.ring().clone(), a.nvars(), a.cap());
    for (e, c) in a.terms() {
        if e.0[var] == 0 {
            return Err(Error::Domain(format!(
                "series is not divisible by X_{}",
                var + 1
            )));
        }
        let mut ne = e.clone();
        ne.0[var] -= 1;
        out.insert_add(ne, c.clone());
    }
    Ok(out)
}

/// Outcome of one MacMahon master theorem evaluation.
#[derive(Debug, Clone)]
pub struct MacmahonReport {
    /// Coefficient of `X^powers` in `1/det(1 - DA)`.
    pub lhs: BigRational,
    /// The same coefficient in `prod_i (a_i1 X_1 + ... + a_in X_n)^(k_i)`.
    pub rhs: BigRational,
    pub equal: bool,
    /// Exactness of `det(1 + DA) = sum_I det(A_I) X_I` for this matrix.
    pub mac1_ok: bool,
    /// Permanent identity check at the requested powers; skipped (None) when
    /// the power sum is too large for an exact permanent.
    pub a2_ok: Option<bool>,
}

/// Guard on the total degree of a master theorem evaluation.
const MACMAHON_MAX_POWER_SUM: usize = 24;

/// Evaluates both sides of MacMahon's master theorem for an integer matrix
/// and one exponent tuple, along with the companion determinant and
/// permanent expansions.
pub fn macmahon(a: &[Vec<i64>], powers: &[usize]) -> Result<MacmahonReport> {
    let n = a.len();
    if n == 0 || n > 5 {
        return Err(Error::Domain("matrix size must be between 1 and 5".into()));
    }
    if powers.len() != n {
        return Err(Error::Domain("need one exponent per row".into()));
    }
    for row in a {
        if row.len() != n {
            return Err(Error::Domain("matrix must be square".into()));
        }
    }
    let total: usize = powers.iter().sum();
    if total > MACMAHON_MAX_POWER_SUM {
        return Err(Error::Domain(format!(
            "total exponent {total} exceeds the {MACMAHON_MAX_POWER_SUM} guard"
        )));
    }
    let ring = RationalRing;
    let cap = total + 2;

    // 1 - DA, with (DA)_(i,j) = a_ij X_i.
    let mut one_minus_da = SeriesMatrix::identity(ring, n, cap, n);
    let mut one_plus_da = SeriesMatrix::identity(ring, n, cap, n);
    for i in 0..n {
        for j in 0..n {
            let mut e = vec![0u32; n];
            e[i] = 1;
            let c = ring.from_i64(a[i][j]);
            let mono = MSeries::monomial(ring, n, cap, &e, &c);
            one_minus_da.set(i, j, one_minus_da.at(i, j).sub(&mono)?);
            one_plus_da.set(i, j, one_plus_da.at(i, j).add(&mono)?);
        }
    }

    let powers_u32: Vec<u32> = powers.iter().map(|&k| k as u32).collect();
    let lhs = one_minus_da.det()?.inverse()?.coeff(&powers_u32);

    // prod_i (a_i1 X_1 + ... + a_in X_n)^(k_i)
    let mut rhs_series = MSeries::one(ring, n, cap);
    for (i, &k) in powers.iter().enumerate() {
        let mut form = MSeries::zero(ring, n, cap);
        for j in 0..n {
            let mut e = vec![0u32; n];
            e[j] = 1;
            form.insert_add(Exponents(e), ring.from_i64(a[i][j]));
        }
        rhs_series = rhs_series.mul(&form.pow_usize(k)?)?;
    }
    let rhs = rhs_series.coeff(&powers_u32);

    // mac1: det(1 + DA) = sum over subsets I of det(A_I) X_I.
    let det_lhs = one_plus_da.det()?;
    let mut det_rhs = MSeries::zero(ring, n, cap);
    for mask in 0..(1u32 << n) {
        let subset: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let sub: Vec<Vec<BigRational>> = subset
            .iter()
            .map(|&i| {
                subset
                    .iter()
                    .map(|&j| BigRational::from(BigInt::from(a[i][j])))
                    .collect()
            })
            .collect();
        let d = if sub.is_empty() {
            BigRational::one()
        } else {
            scalar_det(&ring, &sub)
        };
        let mut e = vec![0u32; n];
        for &i in &subset {
            e[i] = 1;
        }
        det_rhs.insert_add(Exponents(e), d);
    }
    let mac1_ok = det_lhs.first_difference(&det_rhs).is_none();

    // a2: [X^powers] 1/det(1 - DA) = per(A_I) / prod k_i! for the tuple
    // I = (1^(k_1), ..., n^(k_n)).
    let a2_ok = if total <= 12 {
        let mut indices = Vec::with_capacity(total);
        for (i, &k) in powers.iter().enumerate() {
            indices.extend(std::iter::repeat(i).take(k));
        }
        let block: Vec<Vec<i64>> = indices
            .iter()
            .map(|&i| indices.iter().map(|&j| a[i][j]).collect())
            .collect();
        let per = permanent_i128(&block);
        let mut denom = BigInt::one();
        for &k in powers {
            for f in 2..=k {
                denom *= f;
            }
        }
        let expected = BigRational::new(BigInt::from(per), denom);
        Some(expected == lhs)
    } else {
        None
    };

    Ok(MacmahonReport {
        equal: lhs == rhs,
        lhs,
        rhs,
        mac1_ok,
        a2_ok,
    })
}

/// Permanent of a small integer matrix by Ryser's inclusion-exclusion.
pub(crate) fn permanent_i128(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut total: i128 = 0;
    for mask in 1u32..(1 << n) {
        let mut prod: i128 = 1;
        for row in m {
            let mut s: i128 = 0;
            for (j, &v) in row.iter().enumerate() {
                if mask & (1 << j) != 0 {
                    s += v as i128;
                }
            }
            prod *= s;
            if prod == 0 {
                break;
            }
        }
        let k = mask.count_ones() as usize;
        if (n - k) % 2 == 0 {
            total += prod;
        } else {
            total -= prod;
        }
    }
    total
}

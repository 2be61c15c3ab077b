//! Symmetric polynomials: the three classical bases, the constructive
//! decomposition into elementary symmetric polynomials, and the
//! Girard-Newton / Waring / Frobenius transition identities.

use super::{Exponents, MSeries};
use crate::coeffring::Ring;
use crate::error::{Error, Result};
use crate::qseries::{IdentityReport, Mismatch};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

/// The three classical generating sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymBasis {
    /// Elementary symmetric polynomials.
    Sigma,
    /// Complete homogeneous symmetric polynomials.
    Tau,
    /// Power sums.
    Rho,
}

/// `sigma_k`, `tau_k` or `rho_k` in `nvars` variables as an exact polynomial.
pub fn sym_basis<R: Ring>(ring: &R, kind: SymBasis, k: usize, nvars: usize, cap: usize) -> MSeries<R> {
    let mut out = MSeries::zero(ring.clone(), nvars, cap);
    match kind {
        SymBasis::Sigma => {
            if k > nvars {
                return out; // empty sum
            }
            let mut subset: Vec<usize> = Vec::with_capacity(k);
            sigma_rec(ring, &mut out, &mut subset, 0, k, nvars);
        }
        SymBasis::Tau => {
            let mut multiset: Vec<usize> = Vec::with_capacity(k);
            tau_rec(ring, &mut out, &mut multiset, 0, k, nvars);
        }
        SymBasis::Rho => {
            if k == 0 {
                return MSeries::constant(ring.clone(), nvars, cap, &ring.from_i64(nvars as i64));
            }
            for var in 0..nvars {
                let mut e = vec![0u32; nvars];
                e[var] = k as u32;
                out.insert_add(Exponents(e), ring.one());
            }
        }
    }
    out
}

fn sigma_rec<R: Ring>(
    ring: &R,
    out: &mut MSeries<R>,
    subset: &mut Vec<usize>,
    start: usize,
    k: usize,
    nvars: usize,
) {
    if subset.len() == k {
        let mut e = vec![0u32; nvars];
        for &i in subset.iter() {
            e[i] = 1;
        }
        out.insert_add(Exponents(e), ring.one());
        return;
    }
    for i in start..nvars {
        subset.push(i);
        sigma_rec(ring, out, subset, i + 1, k, nvars);
        subset.pop();
    }
}

fn tau_rec<R: Ring>(
    ring: &R,
    out: &mut MSeries<R>,
    multiset: &mut Vec<usize>,
    start: usize,
    k: usize,
    nvars: usize,
) {
    if multiset.len() == k {
        let mut e = vec![0u32; nvars];
        for &i in multiset.iter() {
            e[i] += 1;
        }
        out.insert_add(Exponents(e), ring.one());
        return;
    }
    for i in start..nvars {
        multiset.push(i);
        tau_rec(ring, out, multiset, i, k, nvars);
        multiset.pop();
    }
}

/// Checks invariance under the adjacent transpositions, which generate the
/// full symmetric group; returns the first violating swap.
fn check_symmetric<R: Ring>(a: &MSeries<R>) -> Result<()> {
    let n = a.nvars();
    for i in 0..n.saturating_sub(1) {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i, i + 1);
        if &a.permute_vars(&perm) != a {
            return Err(Error::SymmetryViolation(i, i + 1));
        }
    }
    Ok(())
}

/// Expresses a symmetric polynomial in the elementary symmetric polynomials:
/// returns `gamma` with `gamma(sigma_1, ..., sigma_n) = a`.
///
/// Follows the constructive proof of the fundamental theorem: repeatedly
/// strip the graded-lex-maximal term `c X^(d1..dn)` by subtracting
/// `c sigma_1^(d1-d2) ... sigma_n^(dn)`.
pub fn sym_decompose<R: Ring>(a: &MSeries<R>) -> Result<MSeries<R>> {
    check_symmetric(a)?;
    let ring = a.ring().clone();
    let n = a.nvars();
    let cap = a.cap();
    let sigmas: Vec<MSeries<R>> = (1..=n)
        .map(|k| sym_basis(&ring, SymBasis::Sigma, k, n, cap))
        .collect();
    let mut gamma = MSeries::zero(ring.clone(), n, cap);
    let mut rest = a.clone();
    let mut guard = 0usize;
    while let Some((e, c)) = rest.max_term().map(|(e, c)| (e.clone(), c.clone())) {
        guard += 1;
        if guard > 100_000 {
            return Err(Error::Domain("symmetric decomposition did not converge".into()));
        }
        let d = &e.0;
        debug_assert!(d.windows(2).all(|w| w[0] >= w[1]));
        let mut gamma_exp = vec![0u32; n];
        let mut beta = MSeries::constant(ring.clone(), n, cap, &c);
        for i in 0..n {
            let power = if i + 1 < n { d[i] - d[i + 1] } else { d[i] };
            gamma_exp[i] = power;
            if power > 0 {
                beta = beta.mul(&sigmas[i].pow_usize(power as usize)?)?;
            }
        }
        gamma.insert_add(Exponents(gamma_exp), c.clone());
        rest = rest.sub(&beta)?;
    }
    Ok(gamma)
}

/// Transition identities between the symmetric bases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymRelation {
    /// `sum_{i=0..k} (-1)^i sigma_i tau_{k-i} = 0`
    Gn1,
    /// `sum_{i=1..k} rho_i tau_{k-i} = k tau_k`
    Gn2,
    /// `sum_{i=1..k} (-1)^i sigma_{k-i} rho_i = -k sigma_k`
    Gn3,
    /// Waring: `rho_k` in terms of the `sigma_i`
    WaringRhoSigma,
    /// Waring: `rho_k` in terms of the `tau_i`
    WaringRhoTau,
    /// Frobenius specialization: `sigma_k` in terms of the `tau_i`
    FrobSigmaTau,
    /// Frobenius specialization: `sigma_k` in terms of the `rho_i`
    FrobSigmaRho,
    /// Frobenius specialization: `tau_k` in terms of the `sigma_i`
    FrobTauSigma,
    /// Frobenius specialization: `tau_k` in terms of the `rho_i`
    FrobTauRho,
}

impl SymRelation {
    pub fn name(self) -> &'static str {
        match self {
            SymRelation::Gn1 => "gn1",
            SymRelation::Gn2 => "gn2",
            SymRelation::Gn3 => "gn3",
            SymRelation::WaringRhoSigma => "waring_rho_sigma",
            SymRelation::WaringRhoTau => "waring_rho_tau",
            SymRelation::FrobSigmaTau => "frob_sigma_tau",
            SymRelation::FrobSigmaRho => "frob_sigma_rho",
            SymRelation::FrobTauSigma => "frob_tau_sigma",
            SymRelation::FrobTauRho => "frob_tau_rho",
        }
    }

    pub const ALL: [SymRelation; 9] = [
        SymRelation::Gn1,
        SymRelation::Gn2,
        SymRelation::Gn3,
        SymRelation::WaringRhoSigma,
        SymRelation::WaringRhoTau,
        SymRelation::FrobSigmaTau,
        SymRelation::FrobSigmaRho,
        SymRelation::FrobTauSigma,
        SymRelation::FrobTauRho,
    ];
}

/// Multiplicity vectors `(a_1, ..., a_k)` with `sum i*a_i = k`.
fn partition_multiplicities(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = vec![0usize; k];
    fn rec(k: usize, largest: usize, remaining: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for part in (1..=largest.min(remaining)).rev() {
            current[part - 1] += 1;
            rec(k, part, remaining - part, current, out);
            current[part - 1] -= 1;
        }
    }
    rec(k, k, k, &mut current, &mut out);
    out
}

fn factorial(n: usize) -> BigInt {
    let mut f = BigInt::one();
    for i in 2..=n {
        f *= i;
    }
    f
}

/// Verifies one transition identity exactly in `nvars` variables at level `k`.
///
/// Both sides are polynomials of degree `k`, built from [`sym_basis`] and
/// partition enumeration over the integers. The two identities whose
/// coefficients involve `1/(prod i^(a_i) a_i!)` are checked in the form
/// scaled by `k!`, where every coefficient becomes a cycle-type count.
pub fn newton_waring(relation: SymRelation, nvars: usize, k: usize) -> Result<IdentityReport> {
    let ring = crate::coeffring::IntegerRing;
    let cap = k + 1;
    let basis = |kind: SymBasis, i: usize| sym_basis(&ring, kind, i, nvars, cap);
    let zero = MSeries::zero(ring, nvars, cap);
    let (lhs, rhs) = match relation {
        SymRelation::Gn1 => {
            let mut acc = zero.clone();
            for i in 0..=k {
                let sign = ring.from_i64(if i % 2 == 0 { 1 } else { -1 });
                let term = basis(SymBasis::Sigma, i)
                    .mul(&basis(SymBasis::Tau, k - i))?
                    .scale(&sign);
                acc = acc.add(&term)?;
            }
            (acc, zero.clone())
        }
        SymRelation::Gn2 => {
            let mut acc = zero.clone();
            for i in 1..=k {
                acc = acc.add(&basis(SymBasis::Rho, i).mul(&basis(SymBasis::Tau, k - i))?)?;
            }
            let rhs = basis(SymBasis::Tau, k).scale(&ring.from_i64(k as i64));
            (acc, rhs)
        }
        SymRelation::Gn3 => {
            let mut acc = zero.clone();
            for i in 1..=k {
                let sign = ring.from_i64(if i % 2 == 0 { 1 } else { -1 });
                let term = basis(SymBasis::Sigma, k - i)
                    .mul(&basis(SymBasis::Rho, i))?
                    .scale(&sign);
                acc = acc.add(&term)?;
            }
            let rhs = basis(SymBasis::Sigma, k).scale(&ring.from_i64(-(k as i64)));
            (acc, rhs)
        }
        SymRelation::WaringRhoSigma
        | SymRelation::WaringRhoTau
        | SymRelation::FrobSigmaTau
        | SymRelation::FrobSigmaRho
        | SymRelation::FrobTauSigma
        | SymRelation::FrobTauRho => {
            let (target, source) = match relation {
                SymRelation::WaringRhoSigma => (SymBasis::Rho, SymBasis::Sigma),
                SymRelation::WaringRhoTau => (SymBasis::Rho, SymBasis::Tau),
                SymRelation::FrobSigmaTau => (SymBasis::Sigma, SymBasis::Tau),
                SymRelation::FrobSigmaRho => (SymBasis::Sigma, SymBasis::Rho),
                SymRelation::FrobTauSigma => (SymBasis::Tau, SymBasis::Sigma),
                SymRelation::FrobTauRho => (SymBasis::Tau, SymBasis::Rho),
                _ => unreachable!(),
            };
            // scale factor that clears every denominator
            let scale = match relation {
                SymRelation::FrobSigmaRho | SymRelation::FrobTauRho => factorial(k),
                _ => BigInt::one(),
            };
            let mut powers: Vec<Vec<MSeries<crate::coeffring::IntegerRing>>> =
                vec![Vec::new(); k];
            let mut source_power = |idx: usize, a: usize| -> Result<MSeries<_>> {
                let cache = &mut powers[idx];
                while cache.len() < a {
                    let next = match cache.last() {
                        None => basis(source, idx + 1),
                        Some(prev) => prev.mul(&basis(source, idx + 1))?,
                    };
                    cache.push(next);
                }
                Ok(cache[a - 1].clone())
            };
            let mut acc = zero.clone();
            for mults in partition_multiplicities(k) {
                let total: usize = mults.iter().sum();
                let coeff = waring_coefficient(relation, k, &mults, total) * BigRational::from(scale.clone());
                if !coeff.denom().is_one() {
                    return Err(crate::Error::Domain(format!(
                        "non-integral transition coefficient {coeff} at {mults:?}"
                    )));
                }
                let mut term = MSeries::constant(ring, nvars, cap, coeff.numer());
                for (idx, &a) in mults.iter().enumerate() {
                    if a > 0 {
                        term = term.mul(&source_power(idx, a)?)?;
                    }
                }
                acc = acc.add(&term)?;
            }
            (basis(target, k).scale(&scale), acc)
        }
    };
    let id = format!("{}(n={nvars},k={k})", relation.name());
    Ok(match lhs.first_difference(&rhs) {
        None => IdentityReport::pass(id, cap),
        Some((e, a, b)) => IdentityReport::fail(
            id,
            cap,
            Mismatch {
                index: e.total_degree() as usize,
                lhs: format!("{:?}: {}", e.0, lhs.ring().render(&a)),
                rhs: format!("{:?}: {}", e.0, rhs.ring().render(&b)),
            },
        ),
    })
}

fn waring_coefficient(
    relation: SymRelation,
    k: usize,
    mults: &[usize],
    total: usize,
) -> BigRational {
    let sign_total = if total % 2 == 0 { 1 } else { -1 };
    let sign_k = if k % 2 == 0 { 1 } else { -1 };
    match relation {
        SymRelation::WaringRhoSigma => {
            // (-1)^k k (-1)^total (total-1)! / prod a_i!
            let num = BigInt::from(sign_k * sign_total) * BigInt::from(k) * factorial(total - 1);
            let mut den = BigInt::one();
            for &a in mults {
                den *= factorial(a);
            }
            BigRational::new(num, den)
        }
        SymRelation::WaringRhoTau => {
            let num = BigInt::from(-(k as i64)) * BigInt::from(sign_total) * factorial(total - 1);
            let mut den = BigInt::one();
            for &a in mults {
                den *= factorial(a);
            }
            BigRational::new(num, den)
        }
        SymRelation::FrobSigmaTau | SymRelation::FrobTauSigma => {
            let num = BigInt::from(sign_k * sign_total) * factorial(total);
            let mut den = BigInt::one();
            for &a in mults {
                den *= factorial(a);
            }
            BigRational::new(num, den)
        }
        SymRelation::FrobSigmaRho => {
            let num = BigInt::from(sign_k * sign_total);
            let mut den = BigInt::one();
            for (idx, &a) in mults.iter().enumerate() {
                den *= BigInt::from(idx as u64 + 1).pow(a as u32) * factorial(a);
            }
            BigRational::new(num, den)
        }
        SymRelation::FrobTauRho => {
            let mut den = BigInt::one();
            for (idx, &a) in mults.iter().enumerate() {
                den *= BigInt::from(idx as u64 + 1).pow(a as u32) * factorial(a);
            }
            BigRational::new(BigInt::one(), den)
        }
        _ => unreachable!(),
    }
}

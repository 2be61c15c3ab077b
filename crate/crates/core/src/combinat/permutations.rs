//! Permutation statistics: inversion polynomials, cycle-type counts and the
//! Erdos-Turan divisibility count, each with a symmetric-group enumeration
//! oracle for desk-scale sizes.

use crate::coeffring::IntegerRing;
use crate::error::{Error, Result};
use crate::fps::Series;
use crate::qseries::x_factorial;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

/// Inversion counts as a polynomial: `sum_k rho(n,k) X^k = X^n!/(1-X)^n`.
pub fn inversion_polynomial(n: usize) -> Result<Series<IntegerRing>> {
    if n > 9 {
        return Err(Error::Domain(format!(
            "inversion polynomials are provided for n <= 9, got {n}"
        )));
    }
    let degree = n * n.saturating_sub(1) / 2;
    let order = degree + 1;
    let numer = x_factorial(&IntegerRing, n, order);
    let mut denom = Series::one(IntegerRing, order);
    let one_minus_x = Series::from_i64s(IntegerRing, &[1, -1])?.extend_exact(order);
    for _ in 0..n {
        denom = denom.mul(&one_minus_x)?.truncate(order)?;
    }
    numer.mul(&denom.inverse()?)?.truncate(order)
}

/// The same polynomial by walking all of `S_n` and counting inversions.
pub fn inversion_polynomial_enumerated(n: usize) -> Result<Vec<u64>> {
    if n > 9 {
        return Err(Error::Domain(format!(
            "enumeration is capped at n <= 9, got {n}"
        )));
    }
    let degree = n * n.saturating_sub(1) / 2;
    let mut counts = vec![0u64; degree + 1];
    let mut perm: Vec<usize> = (0..n).collect();
    enumerate_permutations(&mut perm, 0, &mut |p| {
        let mut inv = 0usize;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    inv += 1;
                }
            }
        }
        counts[inv] += 1;
    });
    Ok(counts)
}

fn enumerate_permutations(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        enumerate_permutations(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

/// Cycle type of a permutation given as multiplicities: `type_[i]` cycles of
/// length `i+1`.
fn cycle_type_of(p: &[usize]) -> Vec<usize> {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut type_ = vec![0usize; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        type_[len - 1] += 1;
    }
    type_
}

/// Number of permutations with the given cycle type `(1^(a_1), ..., n^(a_n))`:
/// `n! / (prod i^(a_i) a_i!)`.
pub fn cycle_type_count(type_: &[usize]) -> Result<BigInt> {
    let n: usize = type_.iter().enumerate().map(|(i, &a)| (i + 1) * a).sum();
    if n == 0 {
        return Err(Error::Domain("empty cycle type".into()));
    }
    let mut numer = BigInt::one();
    for i in 2..=n {
        numer *= i;
    }
    let mut denom = BigInt::one();
    for (i, &a) in type_.iter().enumerate() {
        denom *= BigInt::from(i as u64 + 1).pow(a as u32);
        for f in 2..=a {
            denom *= f;
        }
    }
    let q = BigRational::new(numer, denom);
    if !q.denom().is_one() {
        return Err(Error::Domain("cycle type count is not integral".into()));
    }
    Ok(q.numer().clone())
}

/// Enumeration oracle for [`cycle_type_count`], capped at `n <= 9`.
pub fn permutations_with_cycle_type(type_: &[usize]) -> Result<u64> {
    let n: usize = type_.iter().enumerate().map(|(i, &a)| (i + 1) * a).sum();
    if n == 0 || n > 9 {
        return Err(Error::Domain(format!(
            "enumeration is provided for 1 <= n <= 9, got {n}"
        )));
    }
    let mut target = type_.to_vec();
    target.resize(n, 0);
    let mut count = 0u64;
    let mut perm: Vec<usize> = (0..n).collect();
    enumerate_permutations(&mut perm, 0, &mut |p| {
        if cycle_type_of(p) == target {
            count += 1;
        }
    });
    Ok(count)
}

/// Number of permutations in `S_n` with no cycle length divisible by `d`:
/// `n! * prod_(k <= n/d) (kd-1)/(kd)`.
pub fn erdos_turan(n: usize, d: usize) -> Result<BigInt> {
    if d < 2 {
        return Err(Error::Domain("the divisor d must be at least 2".into()));
    }
    let mut value = BigRational::one();
    for i in 2..=n {
        value *= BigRational::from(BigInt::from(i));
    }
    for k in 1..=n / d {
        let kd = (k * d) as i64;
        value *= BigRational::new(BigInt::from(kd - 1), BigInt::from(kd));
    }
    if !value.denom().is_one() {
        return Err(Error::Domain(
            "Erdos-Turan value is unexpectedly not integral".into(),
        ));
    }
    Ok(value.numer().clone())
}

/// Enumeration oracle for [`erdos_turan`], capped at `n <= 9`.
pub fn erdos_turan_enumerated(n: usize, d: usize) -> Result<u64> {
    if n > 9 {
        return Err(Error::Domain(format!(
            "enumeration is capped at n <= 9, got {n}"
        )));
    }
    if d < 2 {
        return Err(Error::Domain("the divisor d must be at least 2".into()));
    }
    let mut count = 0u64;
    let mut perm: Vec<usize> = (0..n).collect();
    enumerate_permutations(&mut perm, 0, &mut |p| {
        let type_ = cycle_type_of(p);
        let clean = type_
            .iter()
            .enumerate()
            .all(|(i, &a)| a == 0 || (i + 1) % d != 0);
        if clean {
            count += 1;
        }
    });
    Ok(count)
}

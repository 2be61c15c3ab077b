//! Stirling numbers, Bell numbers, Bernoulli numbers and Faulhaber
//! polynomials.

use super::SequenceTable;
use crate::coeffring::RationalRing;
use crate::error::{Error, Result};
use crate::fps::{elementary, ElementaryKind, Series};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StirlingKind {
    /// Permutations of n with exactly k cycles.
    First,
    /// Set partitions of n with exactly k parts.
    Second,
}

const STIRLING_MAX: usize = 30;

/// Stirling numbers by their recurrences: `s(n+1,k) = s(n,k-1) + n s(n,k)`
/// for the first kind, `S(n+1,k) = k S(n,k) + S(n,k-1)` for the second.
pub fn stirling(kind: StirlingKind, n: usize, k: usize) -> Result<BigInt> {
    if n > STIRLING_MAX || k > n {
        return Err(Error::Domain(format!(
            "need 0 <= k <= n <= {STIRLING_MAX}, got n={n}, k={k}"
        )));
    }
    let mut row: Vec<BigInt> = vec![BigInt::one()];
    for m in 0..n {
        let mut next = vec![BigInt::zero(); m + 2];
        for (j, v) in row.iter().enumerate() {
            match kind {
                StirlingKind::First => {
                    // add n+1 as a fixed point, or insert into m positions
                    next[j + 1] += v;
                    next[j] += v * m;
                }
                StirlingKind::Second => {
                    next[j + 1] += v;
                    next[j] += v * j;
                }
            }
        }
        row = next;
    }
    Ok(row[k].clone())
}

/// Bell numbers by the binomial recurrence `b(n+1) = sum binom(n,k) b(k)`.
pub fn bell(n: usize) -> Result<BigInt> {
    if n > STIRLING_MAX {
        return Err(Error::Domain(format!(
            "Bell numbers are provided up to {STIRLING_MAX}, got {n}"
        )));
    }
    let mut table: Vec<BigInt> = vec![BigInt::one()];
    for m in 0..n {
        let mut binom = BigInt::one();
        let mut acc = BigInt::zero();
        for (k, b) in table.iter().enumerate() {
            if k > 0 {
                binom = &binom * BigInt::from((m - k + 1) as u64) / BigInt::from(k as u64);
            }
            acc += &binom * b;
        }
        table.push(acc);
    }
    Ok(table[n].clone())
}

/// Bernoulli numbers `b_0..=b_max` from `X/(exp(X)-1)`.
pub fn bernoulli(max: usize) -> Result<SequenceTable<BigRational>> {
    if max > 60 {
        return Err(Error::Domain(format!(
            "Bernoulli numbers are provided up to 60, got {max}"
        )));
    }
    let order = max + 2;
    let x = Series::x(RationalRing, order);
    let expm1 = elementary(ElementaryKind::Exp, &x)?.sub(&Series::one(RationalRing, order))?;
    // (exp(X)-1)/X, then invert and read n! b_n off the coefficients.
    let base = expm1.shift_down(1)?;
    let series = base.inverse()?;
    let mut values = Vec::with_capacity(max + 1);
    let mut factorial = BigRational::one();
    for n in 0..=max {
        if n > 0 {
            factorial *= BigRational::from(BigInt::from(n as u64));
        }
        values.push(series.coeff(n) * &factorial);
    }
    Ok(SequenceTable::new("bernoulli", values))
}

/// The Faulhaber polynomial of degree `d+1` with `alpha(n) = 1^d + ... + n^d`,
/// returned as coefficients in ascending powers:
/// `alpha = sum_k binom(d,k) b_(d-k) (X+1)^(k+1) / (k+1)`.
pub fn faulhaber(d: usize) -> Result<Vec<BigRational>> {
    if d == 0 || d > 20 {
        return Err(Error::Domain(format!(
            "Faulhaber polynomials are provided for 1 <= d <= 20, got {d}"
        )));
    }
    let b = bernoulli(d)?.values;
    let mut coeffs = vec![BigRational::zero(); d + 2];
    let mut binom = BigInt::one();
    for k in 0..=d {
        if k > 0 {
            binom = &binom * BigInt::from((d - k + 1) as u64) / BigInt::from(k as u64);
        }
        let factor = BigRational::from(binom.clone()) * &b[d - k]
            / BigRational::from(BigInt::from((k + 1) as u64));
        if factor.is_zero() {
            continue;
        }
        // (X+1)^(k+1), binomial expansion
        let mut pascal = BigInt::one();
        for j in 0..=k + 1 {
            if j > 0 {
                pascal = &pascal * BigInt::from((k + 2 - j) as u64) / BigInt::from(j as u64);
            }
            coeffs[j] += &factor * BigRational::from(pascal.clone());
        }
    }
    Ok(coeffs)
}

/// Evaluates a dense rational polynomial at an integer point.
pub fn poly_eval(coeffs: &[BigRational], x: i64) -> BigRational {
    let xq = BigRational::from(BigInt::from(x));
    let mut acc = BigRational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * &xq + c;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::IntegerRing;
    use crate::fps::Series;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn worked_examples() {
        assert_eq!(stirling(StirlingKind::Second, 3, 2).unwrap(), BigInt::from(3));
        assert_eq!(bell(3).unwrap(), BigInt::from(5));
        assert_eq!(stirling(StirlingKind::First, 4, 2).unwrap(), BigInt::from(11));
    }

    #[test]
    fn stirling_second_via_bell_sum() {
        // b(n) = sum_k S(n,k)
        for n in 0..=10usize {
            let mut acc = BigInt::from(0);
            for k in 0..=n {
                acc += stirling(StirlingKind::Second, n, k).unwrap();
            }
            assert_eq!(acc, bell(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn stirling_first_generating_function() {
        // prod_(k=0..n-1) (1 + kX) = sum_k s(n, n-k) X^k
        for n in 1..=20usize {
            let order = n + 1;
            let mut prod = Series::one(IntegerRing, order);
            for k in 0..n {
                let factor = Series::from_i64s(IntegerRing, &[1, k as i64])
                    .unwrap()
                    .extend_exact(order);
                prod = prod.mul(&factor).unwrap().truncate(order).unwrap();
            }
            for k in 0..n {
                assert_eq!(
                    *prod.coeff(k),
                    stirling(StirlingKind::First, n, n - k).unwrap(),
                    "n={n}, k={k}"
                );
            }
        }
    }

    #[test]
    fn stirling_second_generating_function() {
        // prod_(k=1..n) 1/(1-kX) = sum_k S(n+k, n) X^k
        for n in 1..=8usize {
            let order = 9;
            let mut prod = Series::one(IntegerRing, order);
            for k in 1..=n {
                let factor =
                    Series::from_i64s(IntegerRing, &[1, -(k as i64)]).unwrap().extend_exact(order);
                prod = prod.mul(&factor).unwrap().truncate(order).unwrap();
            }
            let series = prod.inverse().unwrap();
            for k in 0..order {
                if n + k > STIRLING_MAX {
                    break;
                }
                assert_eq!(
                    *series.coeff(k),
                    stirling(StirlingKind::Second, n + k, n).unwrap(),
                    "n={n}, k={k}"
                );
            }
        }
    }

    #[test]
    fn bell_exponential_generating_function() {
        // exp(exp(X)-1) = sum b(k)/k! X^k
        let order = 21;
        let x = Series::x(RationalRing, order);
        let inner = elementary(ElementaryKind::Exp, &x)
            .unwrap()
            .sub(&Series::one(RationalRing, order))
            .unwrap();
        let series = elementary(ElementaryKind::Exp, &inner).unwrap();
        let mut factorial = BigRational::one();
        for k in 0..20usize {
            if k > 0 {
                factorial *= BigRational::from(BigInt::from(k as u64));
            }
            assert_eq!(
                series.coeff(k) * &factorial,
                BigRational::from(bell(k).unwrap()),
                "k={k}"
            );
        }
    }

    #[test]
    fn stirling_first_log_power_identity() {
        // (-1)^n log(1-X)^n / n! = sum_k s(k,n) X^k / k!
        let order = 21;
        let minus_x = Series::x(RationalRing, order).neg();
        let log = elementary(ElementaryKind::Log1p, &minus_x).unwrap();
        for n in 0..=5usize {
            let mut power = Series::one(RationalRing, order);
            for _ in 0..n {
                power = power.mul(&log).unwrap().truncate(order).unwrap();
            }
            let mut factorial = BigRational::one();
            for i in 2..=n {
                factorial *= BigRational::from(BigInt::from(i as u64));
            }
            let sign = if n % 2 == 0 { q(1, 1) } else { q(-1, 1) };
            let lhs = power.scale(&(sign / &factorial));
            let mut k_factorial = BigRational::one();
            for k in 0..order.min(STIRLING_MAX + 1) {
                if k > 0 {
                    k_factorial *= BigRational::from(BigInt::from(k as u64));
                }
                let expect = if k < n {
                    BigRational::zero()
                } else {
                    BigRational::from(stirling(StirlingKind::First, k, n).unwrap()) / &k_factorial
                };
                assert_eq!(*lhs.coeff(k), expect, "n={n}, k={k}");
            }
        }
    }

    #[test]
    fn stirling_first_prime_divisibility() {
        for &p in &[5usize, 7, 11, 13] {
            for k in 2..p {
                let s = stirling(StirlingKind::First, p, k).unwrap();
                assert!(
                    (s % BigInt::from(p as u64)).is_zero(),
                    "s({p},{k}) not divisible by {p}"
                );
            }
        }
    }

    #[test]
    fn bernoulli_first_values() {
        let b = bernoulli(3).unwrap().values;
        assert_eq!(b, vec![q(1, 1), q(-1, 2), q(1, 6), q(0, 1)]);
    }

    #[test]
    fn bernoulli_odd_indices_vanish() {
        let b = bernoulli(31).unwrap().values;
        for n in 1..=15usize {
            assert!(b[2 * n + 1].is_zero(), "b_{}", 2 * n + 1);
        }
    }

    #[test]
    fn faulhaber_nicomachus() {
        // d = 3: ((X+1)X/2)^2 = (X^2 + X)^2 / 4
        let alpha = faulhaber(3).unwrap();
        assert_eq!(
            alpha,
            vec![q(0, 1), q(0, 1), q(1, 4), q(1, 2), q(1, 4)]
        );
    }

    #[test]
    fn faulhaber_linear() {
        let alpha = faulhaber(1).unwrap();
        assert_eq!(alpha, vec![q(0, 1), q(1, 2), q(1, 2)]);
    }

    #[test]
    fn faulhaber_matches_direct_sums() {
        for d in 1..=6usize {
            let alpha = faulhaber(d).unwrap();
            let mut acc = BigRational::zero();
            for n in 1..=20i64 {
                acc += BigRational::from(BigInt::from(n).pow(d as u32));
                assert_eq!(poly_eval(&alpha, n), acc, "d={d}, n={n}");
            }
        }
    }
}

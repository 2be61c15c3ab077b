//! Combinatorial sequences backed by the series engine.
//!
//! Every operation here has an independent route (a recurrence against a
//! generating function, a formula against brute-force enumeration) and the
//! tests drive both; the public functions return exact values.
//!
//! - partitions: `partition_count`, `restricted_partitions`,
//!   `ramanujan_congruence`, `plane_partition_count`
//! - divisor sums: `divisor_series`, `four_square_count`
//! - matrix classes: `gl_class_count`
//! - classics: `stirling`, `bell`, `bernoulli`, `faulhaber`,
//!   `inversion_polynomial`, `cycle_type_count`, `erdos_turan`,
//!   `linear_recurrence_series`

mod permutations;
mod sequences;

pub use permutations::{
    cycle_type_count, erdos_turan, erdos_turan_enumerated, inversion_polynomial,
    inversion_polynomial_enumerated, permutations_with_cycle_type,
};
pub use sequences::{bell, bernoulli, faulhaber, poly_eval, stirling, StirlingKind};

use crate::coeffring::{AlphaPoly, AlphaRing, IntegerRing, Ring};
use crate::error::{Error, Result};
use crate::fps::Series;
use crate::qseries::{gauss_binom, product_build, x_factorial, ProductTerm};
use num_bigint::BigInt;
use num_traits::Zero;

/// A named table of exact values indexed `0..=max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceTable<V = BigInt> {
    pub name: String,
    pub values: Vec<V>,
}

impl<V: std::fmt::Display> SequenceTable<V> {
    pub fn new(name: impl Into<String>, values: Vec<V>) -> Self {
        SequenceTable {
            name: name.into(),
            values,
        }
    }

    /// CSV emission with the exact string rendering of each value.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,value\n");
        for (n, v) in self.values.iter().enumerate() {
            out.push_str(&format!("{n},{v}\n"));
        }
        out
    }
}

/// `p(0..=max)` by the pentagonal number recurrence
/// `p(n) = p(n-1) + p(n-2) - p(n-5) - p(n-7) + ...`.
pub fn partition_count(max: usize) -> SequenceTable {
    let mut table: Vec<BigInt> = Vec::with_capacity(max + 1);
    table.push(BigInt::from(1));
    for n in 1..=max {
        let mut acc = BigInt::zero();
        let mut k: i64 = 1;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > n {
                break;
            }
            let sign = k % 2 == 1;
            if sign {
                acc += &table[n - g1];
            } else {
                acc -= &table[n - g1];
            }
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= n {
                if sign {
                    acc += &table[n - g2];
                } else {
                    acc -= &table[n - g2];
                }
            }
            k += 1;
        }
        table.push(acc);
    }
    SequenceTable::new("partitions", table)
}

/// `p(0..max)` read off the inverted Euler product; the series route dual to
/// the recurrence.
pub fn partition_count_via_product(max: usize) -> Result<SequenceTable> {
    let order = max + 1;
    let euler = product_build(
        &IntegerRing,
        &[ProductTerm::new(BigInt::from(-1), 1, 0)],
        order,
    )?;
    let series = euler.inverse()?;
    Ok(SequenceTable::new(
        "partitions",
        series.coeffs().to_vec(),
    ))
}

/// Number of partitions of `n` with every part `<= max_part` and at most
/// `max_parts` parts, by direct dynamic programming (no series involved).
pub fn bounded_part_count(max_part: usize, max_parts: usize, n: usize) -> BigInt {
    // dp[parts][m] after considering part sizes up to some k
    let parts_cap = max_parts.min(n.max(1));
    let mut dp = vec![vec![BigInt::zero(); n + 1]; parts_cap + 1];
    dp[0][0] = BigInt::from(1);
    for size in 1..=max_part.min(n) {
        for used in 1..=parts_cap {
            for m in size..=n {
                let add = dp[used - 1][m - size].clone();
                dp[used][m] += add;
            }
        }
    }
    let mut total = BigInt::zero();
    for row in dp.iter().take(parts_cap + 1) {
        total += &row[n];
    }
    if n == 0 {
        total = BigInt::from(1);
    }
    total
}

/// Restriction flavor for [`restricted_partitions`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionKind {
    /// All parts at most `k`.
    MaxPart(usize),
    /// Parts at most `k` and at most `l` parts in total.
    Box(usize, usize),
}

/// `p_k(n)` as a coefficient of `1/X^k!`, and `p_(k,l)(n)` as a coefficient
/// of the Gaussian coefficient `gauss(k+l, k)`.
pub fn restricted_partitions(kind: PartitionKind, n: usize) -> Result<BigInt> {
    match kind {
        PartitionKind::MaxPart(k) => {
            let series = x_factorial(&IntegerRing, k, n + 1).inverse()?;
            Ok(series.coeff(n).clone())
        }
        PartitionKind::Box(k, l) => {
            let poly = gauss_binom(k + l, k as i64);
            if n < poly.precision() {
                Ok(poly.coeff(n).clone())
            } else {
                Ok(BigInt::zero())
            }
        }
    }
}

/// Checks `p(5n+4) = 0 mod 5` (or `p(7n+5) = 0 mod 7`) for all `n <= max_n`
/// from exact partition values.
pub fn ramanujan_congruence(modulus: u64, max_n: usize) -> Result<bool> {
    let (step, offset) = match modulus {
        5 => (5usize, 4usize),
        7 => (7usize, 5usize),
        _ => {
            return Err(Error::Domain(format!(
                "only the moduli 5 and 7 are supported, got {modulus}"
            )))
        }
    };
    let table = partition_count(step * max_n + offset);
    let m = BigInt::from(modulus);
    Ok((0..=max_n).all(|n| (&table.values[step * n + offset] % &m).is_zero()))
}

/// Plane partition counts: coefficients of `prod 1/(1-X^k)^k`.
pub fn plane_partition_count(max: usize) -> Result<SequenceTable> {
    let order = max + 1;
    let mut denom = Series::one(IntegerRing, order);
    for k in 1..order {
        let factor = Series::monomial(IntegerRing, &BigInt::from(-1), k, order)
            .add(&Series::one(IntegerRing, order))?;
        let powered = factor.pow_usize(k)?.truncate(order)?;
        denom = denom.mul(&powered)?.truncate(order)?;
    }
    let series = denom.inverse()?;
    Ok(SequenceTable::new(
        "plane-partitions",
        series.coeffs().to_vec(),
    ))
}

/// Divisor counts `d_1..=d_max` via the Lambert series `sum X^k/(1-X^k)`.
pub fn divisor_series(max: usize) -> Result<SequenceTable> {
    let order = max + 1;
    let mut acc = Series::zero(IntegerRing, order);
    for k in 1..order {
        let denom = Series::monomial(IntegerRing, &BigInt::from(-1), k, order)
            .add(&Series::one(IntegerRing, order))?
            .inverse()?;
        acc = acc.add(&denom.shift_up(k).truncate(order)?)?;
    }
    Ok(SequenceTable::new("divisors", acc.coeffs().to_vec()))
}

/// Divisor counts by trial division; the oracle route.
pub fn divisor_count_direct(n: usize) -> u64 {
    (1..=n).filter(|k| n % k == 0).count() as u64
}

/// Dirichlet convolution of two arithmetic functions given as tables
/// (index 0 unused).
pub fn dirichlet_convolve(f: &[BigInt], g: &[BigInt]) -> Vec<BigInt> {
    let n = f.len().min(g.len());
    let mut out = vec![BigInt::zero(); n];
    for d in 1..n {
        for m in 1..n {
            if d * m >= n {
                break;
            }
            out[d * m] += &f[d] * &g[m];
        }
    }
    out
}

/// Conjugacy class count of the general linear group of degree `n` over a
/// field with `q` elements, as an exact polynomial in `q`: the coefficient
/// of `X^n` in `prod (1-X^l)/(1-qX^l)`.
pub fn gl_class_count(n: usize) -> Result<AlphaPoly> {
    if n == 0 || n > 12 {
        return Err(Error::Domain(format!(
            "class counts are provided for 1 <= n <= 12, got {n}"
        )));
    }
    let ring = AlphaRing;
    let order = n + 1;
    let numer = product_build(&ring, &[ProductTerm::new(ring.from_i64(-1), 1, 0)], order)?;
    let denom = product_build(&ring, &[ProductTerm::new(ring.neg(&ring.alpha()), 1, 0)], order)?;
    let series = numer.mul(&denom.inverse()?)?;
    let poly = series.coeff(n).clone();
    if poly.min_exp().is_some_and(|e| e < 0) {
        return Err(Error::Domain(
            "class-count polynomial unexpectedly has negative powers".into(),
        ));
    }
    Ok(poly)
}

/// `q(n)`: the number of ways to write `n` as an ordered sum of four signed
/// squares, by the divisor formula `8 * sum of divisors not divisible by 4`.
pub fn four_square_count(n: usize) -> Result<u64> {
    if n == 0 || n > 5000 {
        return Err(Error::Domain(format!(
            "four-square counts are provided for 1 <= n <= 5000, got {n}"
        )));
    }
    let mut acc = 0u64;
    for d in 1..=n {
        if n % d == 0 && d % 4 != 0 {
            acc += d as u64;
        }
    }
    Ok(8 * acc)
}

/// Lattice enumeration of `a^2+b^2+c^2+d^2 = n` for all `n <= max` at once;
/// the brute-force oracle for the divisor formula.
pub fn four_square_histogram(max: usize) -> Vec<u64> {
    let bound = (max as f64).sqrt() as i64 + 1;
    let mut histogram = vec![0u64; max + 1];
    // counts of a^2 = m, then two convolution rounds
    let mut squares = vec![0u64; max + 1];
    for a in -bound..=bound {
        let s = (a * a) as usize;
        if s <= max {
            squares[s] += 1;
        }
    }
    let mut pairs = vec![0u64; max + 1];
    for i in 0..=max {
        if squares[i] == 0 {
            continue;
        }
        for j in 0..=max - i {
            pairs[i + j] += squares[i] * squares[j];
        }
    }
    for i in 0..=max {
        if pairs[i] == 0 {
            continue;
        }
        for j in 0..=max - i {
            histogram[i + j] += pairs[i] * pairs[j];
        }
    }
    histogram
}

/// The two rational-generating-function sequences from the worked examples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecurrenceKind {
    /// `f_0 = 0, f_1 = 1, f_(n+1) = f_n + f_(n-1)`; series `X/(1-X-X^2)`.
    Fibonacci,
    /// `c_0 = 0, c_1 = 1, c_n = sum c_k c_(n-k)`; the reverse of `X - X^2`.
    Catalan,
}

/// Builds the sequence table from its generating function. Indexing follows
/// the seeds `f_0 = 0, f_1 = 1` (and likewise `c_0 = 0, c_1 = 1`, one slot
/// earlier than the common convention that starts the Catalan numbers at 1).
pub fn linear_recurrence_series(kind: RecurrenceKind, max: usize) -> Result<SequenceTable> {
    if max > 200 {
        return Err(Error::Domain(format!("table bound 200 exceeded: {max}")));
    }
    let order = max + 2;
    match kind {
        RecurrenceKind::Fibonacci => {
            let denom = Series::from_i64s(IntegerRing, &[1, -1, -1])?.extend_exact(order);
            let series = Series::x(IntegerRing, order).mul(&denom.inverse()?)?;
            Ok(SequenceTable::new(
                "fibonacci",
                series.coeffs()[..=max].to_vec(),
            ))
        }
        RecurrenceKind::Catalan => {
            let base = Series::from_i64s(IntegerRing, &[0, 1, -1])?.extend_exact(order);
            let series = base.reverse()?;
            Ok(SequenceTable::new(
                "catalan",
                series.coeffs()[..=max].to_vec(),
            ))
        }
    }
}

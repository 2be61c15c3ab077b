//! The identity registry: named left/right builder pairs that are expanded
//! to a requested order and compared coefficient by coefficient.
//!
//! Entries are pure builders, so the order is a free parameter; no expected
//! coefficients are stored anywhere. `verify_all` runs the whole table (one
//! deliberately broken fixture entry excluded) and may fan the work out
//! across threads; the output order is fixed by the registry order.

use super::{
    gauss_binom, product_build, theta_sum_alpha, theta_sum_int, x_factorial, ProductTerm,
    ThetaSpec,
};
use crate::coeffring::{AlphaRing, IntegerRing, Ring};
use crate::combinat;
use crate::error::{Error, Result};
use crate::fps::Series;
use crate::mps::MSeries;
use num_bigint::BigInt;

/// Outcome of verifying one identity to a given order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity_id: String,
    pub order: usize,
    pub holds: bool,
    pub first_mismatch: Option<Mismatch>,
}

/// First coefficient index at which the two sides disagree, with both values
/// rendered exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub index: usize,
    pub lhs: String,
    pub rhs: String,
}

impl IdentityReport {
    pub fn pass(id: impl Into<String>, order: usize) -> Self {
        IdentityReport {
            identity_id: id.into(),
            order,
            holds: true,
            first_mismatch: None,
        }
    }

    pub fn fail(id: impl Into<String>, order: usize, mismatch: Mismatch) -> Self {
        IdentityReport {
            identity_id: id.into(),
            order,
            holds: false,
            first_mismatch: Some(mismatch),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match &self.first_mismatch {
            None => serde_json::json!({
                "id": self.identity_id,
                "order": self.order,
                "holds": self.holds,
            }),
            Some(m) => serde_json::json!({
                "id": self.identity_id,
                "order": self.order,
                "holds": self.holds,
                "first_mismatch": {"index": m.index, "lhs": m.lhs, "rhs": m.rhs},
            }),
        }
    }
}

/// Compares two univariate series below `order` (and below both precisions).
fn compare_series<R: Ring>(lhs: &Series<R>, rhs: &Series<R>, order: usize) -> Option<Mismatch> {
    let n = order.min(lhs.precision()).min(rhs.precision());
    let ring = lhs.ring();
    for i in 0..n {
        if lhs.coeff(i) != rhs.coeff(i) {
            return Some(Mismatch {
                index: i,
                lhs: ring.render(lhs.coeff(i)),
                rhs: ring.render(rhs.coeff(i)),
            });
        }
    }
    None
}

fn compare_mseries<R: Ring>(lhs: &MSeries<R>, rhs: &MSeries<R>) -> Option<Mismatch> {
    lhs.first_difference(rhs).map(|(e, a, b)| Mismatch {
        index: e.total_degree() as usize,
        lhs: format!("{:?}: {}", e.0, lhs.ring().render(&a)),
        rhs: format!("{:?}: {}", e.0, rhs.ring().render(&b)),
    })
}

type Check = Box<dyn Fn(usize) -> Result<Option<Mismatch>> + Send + Sync>;

struct Entry {
    id: String,
    fixture: bool,
    check: Check,
}

impl Entry {
    fn new(id: impl Into<String>, check: Check) -> Self {
        Entry {
            id: id.into(),
            fixture: false,
            check,
        }
    }

    fn fixture(id: impl Into<String>, check: Check) -> Self {
        Entry {
            id: id.into(),
            fixture: true,
            check,
        }
    }
}

fn minus_one() -> BigInt {
    BigInt::from(-1)
}

/// `prod (1 - X^(step k + shift))` over the integers.
fn int_product(families: &[(i64, i64, i64)], order: usize) -> Result<Series<IntegerRing>> {
    let terms: Vec<ProductTerm<IntegerRing>> = families
        .iter()
        .map(|&(coeff, step, shift)| ProductTerm::new(BigInt::from(coeff), step, shift))
        .collect();
    product_build(&IntegerRing, &terms, order)
}

/// Partitions of `n` into parts that differ pairwise by more than 1, all
/// parts at least `min_part`; plain recursive enumeration with memoization.
fn superdistinct_count(n: usize, min_part: usize, memo: &mut Vec<Vec<Option<BigInt>>>) -> BigInt {
    if n == 0 {
        return BigInt::from(1);
    }
    if min_part > n {
        return BigInt::from(0);
    }
    if let Some(v) = &memo[n][min_part] {
        return v.clone();
    }
    let mut total = BigInt::from(0);
    for smallest in min_part..=n {
        let next_min = smallest + 2;
        let rest = n - smallest;
        if rest == 0 {
            total += 1;
        } else if next_min <= rest {
            total += superdistinct_count(rest, next_min, memo);
        }
    }
    memo[n][min_part] = Some(total.clone());
    total
}

/// Generating function of partitions into parts from the allowed residues
/// mod 5, by direct counting (no series machinery).
fn residue_partition_counts(order: usize, residues: &[u64]) -> Vec<BigInt> {
    let mut table = vec![BigInt::from(0); order.max(1)];
    table[0] = BigInt::from(1);
    for part in 1..order {
        if !residues.contains(&((part as u64) % 5)) {
            continue;
        }
        for n in part..order {
            let add = table[n - part].clone();
            table[n] += add;
        }
    }
    table
}

fn entries() -> Vec<Entry> {
    let mut list: Vec<Entry> = Vec::new();

    // Gauss' binomial theorem, finite product (n = 10), symbolic alpha.
    list.push(Entry::new(
        "g0",
        Box::new(|order| {
            let n = 10usize;
            let ring = AlphaRing;
            let mut lhs = Series::one(ring, order.max(1));
            for k in 0..n {
                let factor = Series::monomial(ring, &ring.alpha(), k, order.max(1))
                    .add(&Series::one(ring, order.max(1)))?;
                lhs = lhs.mul(&factor)?.truncate(order.max(1))?;
            }
            let mut rhs = Series::zero(ring, order.max(1));
            for k in 0..=n {
                let exp = k * (k.saturating_sub(1)) / 2;
                if exp >= order {
                    continue;
                }
                let gauss = gauss_binom(n, k as i64)
                    .map_ring(ring, |c| ring.from_bigint(c))
                    .extend_exact(order.max(1))
                    .truncate(order.max(1))?;
                let term = gauss
                    .scale(&ring.alpha_pow(k as i64))
                    .shift_up(exp)
                    .truncate(order.max(1))?;
                rhs = rhs.add(&term)?;
            }
            Ok(compare_series(&lhs, &rhs, order))
        }),
    ));

    // Euler's infinite expansion of prod (1 + a X^k), k >= 0.
    list.push(Entry::new(
        "e1",
        Box::new(move |order| {
            let ring = AlphaRing;
            let lhs = product_build(
                &ring,
                &[ProductTerm::new(ring.alpha(), 1, -1)],
                order,
            )?;
            let mut rhs = Series::zero(ring, order.max(1));
            let mut k = 0usize;
            loop {
                let exp = k * k.saturating_sub(1) / 2;
                if exp >= order {
                    break;
                }
                let denom = x_factorial(&ring, k, order).inverse()?;
                let term = denom
                    .scale(&ring.alpha_pow(k as i64))
                    .shift_up(exp)
                    .truncate(order.max(1))?;
                rhs = rhs.add(&term)?;
                k += 1;
            }
            Ok(compare_series(&lhs, &rhs, order))
        }),
    ));

    // Rothe's binomial theorem, trivariate (alpha, beta, X), small n.
    for n in [3usize, 4, 5] {
        list.push(Entry::new(
            format!("rothe-{n}"),
            Box::new(move |order| {
                let ring = IntegerRing;
                let full = n + n * (n - 1) / 2 + 2;
                let cap = order.min(full).max(2);
                let nv = 3usize; // alpha, beta, X
                let a = MSeries::variable(ring, nv, cap, 0);
                let b = MSeries::variable(ring, nv, cap, 1);
                let x = MSeries::variable(ring, nv, cap, 2);
                let mut lhs = MSeries::one(ring, nv, cap);
                let mut xk = MSeries::one(ring, nv, cap);
                for k in 0..n {
                    if k > 0 {
                        xk = xk.mul(&x)?;
                    }
                    lhs = lhs.mul(&a.add(&b.mul(&xk)?)?)?;
                }
                let mut rhs = MSeries::zero(ring, nv, cap);
                for k in 0..=n {
                    let gauss = gauss_binom(n, k as i64);
                    let choose2 = k * k.saturating_sub(1) / 2;
                    // gauss(X) * a^(n-k) * b^k * X^(k choose 2)
                    let mut term = MSeries::zero(ring, nv, cap);
                    for (i, c) in gauss.coeffs().iter().enumerate() {
                        if c == &BigInt::from(0) {
                            continue;
                        }
                        let e = [
                            (n - k) as u32,
                            k as u32,
                            (i + choose2) as u32,
                        ];
                        term = term.add(&MSeries::monomial(ring, nv, cap, &e, c))?;
                    }
                    rhs = rhs.add(&term)?;
                }
                Ok(compare_mseries(&lhs, &rhs))
            }),
        ));
    }

    // Finite dual of Gauss' theorem (n = 6), symbolic alpha.
    list.push(Entry::new(
        "coreuler-finite",
        Box::new(move |order| {
            let n = 6usize;
            let ring = AlphaRing;
            let mut denom_terms = Vec::new();
            for k in 1..=n {
                denom_terms.push((k, ring.neg(&ring.alpha())));
            }
            let mut denom = Series::one(ring, order.max(1));
            for (k, coeff) in denom_terms {
                if k < order {
                    let factor = Series::monomial(ring, &coeff, k, order.max(1))
                        .add(&Series::one(ring, order.max(1)))?;
                    denom = denom.mul(&factor)?.truncate(order.max(1))?;
                }
            }
            let lhs = denom.inverse()?;
            let mut rhs = Series::zero(ring, order.max(1));
            for k in 0..order {
                let gauss = gauss_binom(n + k - 1, k as i64)
                    .map_ring(ring, |c| ring.from_bigint(c))
                    .extend_exact(order.max(1))
                    .truncate(order.max(1))?;
                let term = gauss
                    .scale(&ring.alpha_pow(k as i64))
                    .shift_up(k)
                    .truncate(order.max(1))?;
                rhs = rhs.add(&term)?;
            }
            Ok(compare_series(&lhs, &rhs, order))
        }),
    ));

    // Euler's expansion of prod 1/(1 - a X^k), k >= 1, symbolic alpha.
    list.push(Entry::new(
        "e2",
        Box::new(move |order| {
            let ring = AlphaRing;
            let denom = product_build(
                &ring,
                &[ProductTerm::new(ring.neg(&ring.alpha()), 1, 0)],
                order,
            )?;
            let lhs = denom.inverse()?;
            let mut rhs = Series::zero(ring, order.max(1));
            for k in 0..order {
                let denom = x_factorial(&ring, k, order).inverse()?;
                let term = denom
                    .scale(&ring.alpha_pow(k as i64))
                    .shift_up(k)
                    .truncate(order.max(1))?;
                rhs = rhs.add(&term)?;
            }
            Ok(compare_series(&lhs, &rhs, order))
        }),
    ));

    // The alpha = X specialization over the integers.
    list.push(Entry::new(
        "e3",
        Box::new(|order| {
            let denom = int_product(&[(-1, 1, 0)], order)?;
            let lhs = denom.inverse()?;
            let mut rhs = Series::zero(IntegerRing, order.max(1));
            for k in 0..order {
                let term = x_factorial(&IntegerRing, k, order)
                    .inverse()?
                    .shift_up(k)
                    .truncate(order.max(1))?;
                rhs = rhs.add(&term)?;
            }
            Ok(compare_series(&lhs, &rhs, order))
        }),
    ));

    // Jacobi's triple product over Z[a, a^-1].
    list.push(Entry::new(
        "jtp",
        Box::new(move |order| {
            let ring = AlphaRing;
            let lhs = product_build(
                &ring,
                &[
                    ProductTerm::new(ring.from_i64(-1), 2, 0),
                    ProductTerm::new(ring.alpha(), 2, -1),
                    ProductTerm::new(ring.alpha_pow(-1), 2, -1),
                ],
                order,
            )?;
            let rhs = theta_sum_alpha(&ThetaSpec::new(false, 2, 0).with_alpha(1, 0), order)?;
            Ok(compare_series(&lhs, &rhs, order))
        }),
    ));

    // The three classical specializations.
    list.push(Entry::new(
        "jtp1",
        Box::new(|order| {
            let lhs = int_product(&[(-1, 2, 0), (1, 2, -1), (1, 2, -1)], order)?;
            let rhs = theta_sum_int(&ThetaSpec::new(false, 2, 0), order)?;
            Ok(compare_series(&lhs, &rhs, order))
        }),
    ));
    list.push(Entry::new(
        "jtp2",
        Box::new(|order| {
            let lhs = int_product(&[(-1, 2, 0), (-1, 2, -1), (-1, 2, -1)], order)?;
            let rhs = theta_sum_int(&ThetaSpec::new(true, 2, 0), order)?;
            Ok(compare_series(&lhs, &rhs, order))
        }),
    ));
    list.push(Entry::new(
        "jtp3",
        Box::new(|order| {
            let lhs = int_product(&[(-1, 2, 0), (1, 2, 0), (1, 2, 0)], order)?;
            let mut rhs = Series::zero(IntegerRing, order.max(1));
            let mut k = 0usize;
            while k * k + k < order {
                rhs = rhs.add(&Series::monomial(
                    IntegerRing,
                    &BigInt::from(1),
                    k * k + k,
                    order.max(1),
                ))?;
                k += 1;
            }
            Ok(compare_series(&lhs, &rhs, order))
        }),
    ));

    // Euler's pentagonal number theorem.
    list.push(Entry::new(
        "eptn",
        Box::new(|order| {
            let lhs = int_product(&[(-1, 1, 0)], order)?;
            let rhs = theta_sum_int(&ThetaSpec::new(true, 3, 1), order)?;
            Ok(compare_series(&lhs, &rhs, order))
        }),
    ));

    // The mod-5 dissections feeding Rogers-Ramanujan.
    list.push(Entry::new(
        "mod51",
        Box::new(|order| {
            let lhs = int_product(&[(-1, 5, 0), (-1, 5, -2), (-1, 5, -3)], order)?;
            let rhs = theta_sum_int(&ThetaSpec::new(true, 5, 1), order)?;
            Ok(compare_series(&lhs, &rhs, order))
        }),
    ));
    list.push(Entry::new(
        "mod52",
        Box::new(|order| {
            let lhs = int_product(&[(-1, 5, 0), (-1, 5, -1), (-1, 5, -4)], order)?;
            let rhs = theta_sum_int(&ThetaSpec::new(true, 5, 3), order)?;
            Ok(compare_series(&lhs, &rhs, order))
        }),
    ));

    // Ramanujan's theta function, bivariate with a total-degree cap.
    list.push(Entry::new(
        "ramanujan-theta",
        Box::new(|order| {
            let ring = IntegerRing;
            let cap = order.max(2);
            let a = MSeries::variable(ring, 2, cap, 0);
            let b = MSeries::variable(ring, 2, cap, 1);
            let one = MSeries::one(ring, 2, cap);
            let mut lhs = one.clone();
            let mut k = 1usize;
            while 2 * k - 1 < cap {
                let ak = a.pow_usize(k)?;
                let bk = b.pow_usize(k)?;
                let ak1 = a.pow_usize(k - 1)?;
                let bk1 = b.pow_usize(k - 1)?;
                lhs = lhs.mul(&one.sub(&ak.mul(&bk)?)?)?;
                lhs = lhs.mul(&one.add(&ak.mul(&bk1)?)?)?;
                lhs = lhs.mul(&one.add(&ak1.mul(&bk)?)?)?;
                k += 1;
            }
            let mut rhs = MSeries::zero(ring, 2, cap);
            let mut k: i64 = 0;
            while ((k * k) as usize) < cap {
                let ea = ((k * k + k) / 2) as u32;
                let eb = ((k * k - k) / 2) as u32;
                rhs = rhs.add(&MSeries::monomial(ring, 2, cap, &[ea, eb], &BigInt::from(1)))?;
                if k > 0 {
                    // the mirrored k -> -k term
                    rhs = rhs.add(&MSeries::monomial(ring, 2, cap, &[eb, ea], &BigInt::from(1)))?;
                }
                k += 1;
            }
            Ok(compare_mseries(&lhs, &rhs))
        }),
    ));

    // Theta products from the alpha^4 - beta^4 factorization exercise.
    list.push(Entry::new(
        "theta-cauchy",
        Box::new(|order| {
            let t1 = theta_sum_int(&ThetaSpec::new(false, 2, 0), order)?;
            let t2 = theta_sum_int(&ThetaSpec::new(false, 2, 2), order)?;
            let t3 = theta_sum_int(&ThetaSpec::new(false, 1, 1), order)?;
            let lhs = t1.mul(&t2)?.scale(&BigInt::from(2));
            let rhs = t3.mul(&t3)?;
            Ok(compare_series(&lhs, &rhs, order))
        }),
    ));
    list.push(Entry::new(
        "theta-gauss",
        Box::new(|order| {
            let t = theta_sum_int(&ThetaSpec::new(false, 2, 0), order)?;
            let ts = theta_sum_int(&ThetaSpec::new(true, 2, 0), order)?;
            let t2 = theta_sum_int(&ThetaSpec::new(false, 2, 2), order)?;
            let lhs = t.pow_usize(4)?;
            let rhs = ts.pow_usize(4)?.add(&t2.pow_usize(4)?.shift_up(1).truncate(order.max(1))?)?;
            Ok(compare_series(&lhs, &rhs, order))
        }),
    ));

    // Hirschhorn's finite triple product.
    for n in 1..=8usize {
        list.push(Entry::new(
            format!("hirschhorn-{n}"),
            Box::new(move |order| {
                let xf = x_factorial(&IntegerRing, n, order);
                let lhs = xf.mul(&xf)?.truncate(order.max(1))?;
                let mut rhs = Series::zero(IntegerRing, order.max(1));
                for k in 0..=n {
                    let exp = (k * k + k) / 2;
                    if exp >= order {
                        continue;
                    }
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    let weight = BigInt::from(sign * (2 * k as i64 + 1));
                    let gauss = gauss_binom(2 * n + 1, (n - k) as i64)
                        .extend_exact(order.max(1))
                        .truncate(order.max(1))?;
                    rhs = rhs.add(&gauss.scale(&weight).shift_up(exp).truncate(order.max(1))?)?;
                }
                Ok(compare_series(&lhs, &rhs, order))
            }),
        ));
    }

    // Jacobi's cube identity.
    list.push(Entry::new(
        "jacobi-cube",
        Box::new(|order| {
            let lhs = int_product(&[(-1, 1, 0), (-1, 1, 0), (-1, 1, 0)], order)?;
            let mut rhs = Series::zero(IntegerRing, order.max(1));
            let mut k = 0usize;
            while (k * k + k) / 2 < order {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                rhs = rhs.add(&Series::monomial(
                    IntegerRing,
                    &BigInt::from(sign * (2 * k as i64 + 1)),
                    (k * k + k) / 2,
                    order.max(1),
                ))?;
                k += 1;
            }
            Ok(compare_series(&lhs, &rhs, order))
        }),
    ));

    // Bressoud's finite Rogers-Ramanujan approximations.
    for n in 1..=8usize {
        list.push(Entry::new(
            format!("bressoud1-{n}"),
            Box::new(move |order| {
                let mut lhs = Series::zero(IntegerRing, order.max(1));
                for k in 0..=n {
                    if k * k >= order {
                        continue;
                    }
                    let gauss = gauss_binom(n, k as i64)
                        .extend_exact(order.max(1))
                        .truncate(order.max(1))?;
                    lhs = lhs.add(&gauss.shift_up(k * k).truncate(order.max(1))?)?;
                }
                let mut rhs = Series::zero(IntegerRing, order.max(1));
                for k in -(n as i64)..=(n as i64) {
                    let exp = 5 * k * k + k;
                    debug_assert!(exp % 2 == 0);
                    let exp = (exp / 2) as usize;
                    if exp >= order {
                        continue;
                    }
                    let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
                    let gauss = gauss_binom(2 * n, n as i64 + 2 * k)
                        .extend_exact(order.max(1))
                        .truncate(order.max(1))?;
                    rhs = rhs.add(
                        &gauss
                            .scale(&BigInt::from(sign))
                            .shift_up(exp)
                            .truncate(order.max(1))?,
                    )?;
                }
                Ok(compare_series(&lhs, &rhs, order))
            }),
        ));
        list.push(Entry::new(
            format!("bressoud2-{n}"),
            Box::new(move |order| {
                let mut lhs = Series::zero(IntegerRing, order.max(1));
                for k in 0..=n {
                    if k * k + k >= order {
                        continue;
                    }
                    let gauss = gauss_binom(n, k as i64)
                        .extend_exact(order.max(1))
                        .truncate(order.max(1))?;
                    lhs = lhs.add(&gauss.shift_up(k * k + k).truncate(order.max(1))?)?;
                }
                let mut rhs = Series::zero(IntegerRing, order.max(1));
                for k in -(n as i64)..=(n as i64) {
                    let exp = 5 * k * k - 3 * k;
                    debug_assert!(exp % 2 == 0);
                    let exp = (exp / 2) as usize;
                    if exp >= order {
                        continue;
                    }
                    let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
                    let gauss = gauss_binom(2 * n + 1, n as i64 + 2 * k)
                        .extend_exact(order.max(1))
                        .truncate(order.max(1))?;
                    rhs = rhs.add(
                        &gauss
                            .scale(&BigInt::from(sign))
                            .shift_up(exp)
                            .truncate(order.max(1))?,
                    )?;
                }
                Ok(compare_series(&lhs, &rhs, order))
            }),
        ));
    }

    // The Rogers-Ramanujan identities.
    list.push(Entry::new(
        "rr1",
        Box::new(|order| {
            let denom = int_product(&[(-1, 5, -1), (-1, 5, -4)], order)?;
            let lhs = denom.inverse()?;
            let mut rhs = Series::zero(IntegerRing, order.max(1));
            let mut k = 0usize;
            while k * k < order {
                let term = x_factorial(&IntegerRing, k, order)
                    .inverse()?
                    .shift_up(k * k)
                    .truncate(order.max(1))?;
                rhs = rhs.add(&term)?;
                k += 1;
            }
            Ok(compare_series(&lhs, &rhs, order))
        }),
    ));
    list.push(Entry::new(
        "rr2",
        Box::new(|order| {
            let denom = int_product(&[(-1, 5, -2), (-1, 5, -3)], order)?;
            let lhs = denom.inverse()?;
            let mut rhs = Series::zero(IntegerRing, order.max(1));
            let mut k = 0usize;
            while k * k + k < order {
                let term = x_factorial(&IntegerRing, k, order)
                    .inverse()?
                    .shift_up(k * k + k)
                    .truncate(order.max(1))?;
                rhs = rhs.add(&term)?;
                k += 1;
            }
            Ok(compare_series(&lhs, &rhs, order))
        }),
    ));

    // Lambert's divisor series and Clausen's variant, against direct counts.
    list.push(Entry::new(
        "lambert",
        Box::new(|order| {
            let mut lhs = Series::zero(IntegerRing, order.max(1));
            for k in 1..order {
                let geo = Series::monomial(IntegerRing, &minus_one(), k, order.max(1))
                    .add(&Series::one(IntegerRing, order.max(1)))?
                    .inverse()?;
                lhs = lhs.add(&geo.shift_up(k).truncate(order.max(1))?)?;
            }
            let rhs = divisor_count_series(order);
            Ok(compare_series(&lhs, &rhs, order))
        }),
    ));
    list.push(Entry::new(
        "clausen",
        Box::new(|order| {
            let mut lhs = Series::zero(IntegerRing, order.max(1));
            let mut k = 1usize;
            while k * k < order {
                let denom = Series::monomial(IntegerRing, &minus_one(), k, order.max(1))
                    .add(&Series::one(IntegerRing, order.max(1)))?
                    .inverse()?;
                let numer = Series::monomial(IntegerRing, &BigInt::from(1), k, order.max(1))
                    .add(&Series::one(IntegerRing, order.max(1)))?;
                let term = numer
                    .mul(&denom)?
                    .truncate(order.max(1))?
                    .shift_up(k * k)
                    .truncate(order.max(1))?;
                lhs = lhs.add(&term)?;
                k += 1;
            }
            let rhs = divisor_count_series(order);
            Ok(compare_series(&lhs, &rhs, order))
        }),
    ));

    // Partition generating functions: recurrence versus product inversion.
    list.push(Entry::new(
        "partition-genfun",
        Box::new(|order| {
            let table = combinat::partition_count(order.max(1) - 1);
            let lhs = Series::from_coeffs(IntegerRing, table.values)?;
            let rhs = int_product(&[(-1, 1, 0)], order)?.inverse()?;
            Ok(compare_series(&lhs, &rhs, order))
        }),
    ));
    list.push(Entry::new(
        "pk-genfun",
        Box::new(|order| {
            let k = 4usize;
            let counts: Vec<BigInt> = (0..order.max(1))
                .map(|n| combinat::bounded_part_count(k, usize::MAX, n))
                .collect();
            let lhs = Series::from_coeffs(IntegerRing, counts)?;
            let rhs = x_factorial(&IntegerRing, k, order).inverse()?;
            Ok(compare_series(&lhs, &rhs, order))
        }),
    ));
    list.push(Entry::new(
        "pkl-genfun",
        Box::new(|order| {
            let (k, l) = (3usize, 4usize);
            let counts: Vec<BigInt> = (0..order.max(1))
                .map(|n| combinat::bounded_part_count(k, l, n))
                .collect();
            let lhs = Series::from_coeffs(IntegerRing, counts)?;
            let rhs = gauss_binom(k + l, k as i64)
                .extend_exact(order.max(1))
                .truncate(order.max(1))?;
            Ok(compare_series(&lhs, &rhs, order))
        }),
    ));

    // Ramanujan's most beautiful formula.
    list.push(Entry::new(
        "most-beautiful",
        Box::new(|order| {
            let p = combinat::partition_count(5 * order.max(1) + 4);
            let coeffs: Vec<BigInt> = (0..order.max(1))
                .map(|n| p.values[5 * n + 4].clone())
                .collect();
            let lhs = Series::from_coeffs(IntegerRing, coeffs)?;
            let a5 = int_product(&[(-1, 5, 0)], order)?.pow_usize(5)?.truncate(order.max(1))?;
            let b6 = int_product(&[(-1, 1, 0)], order)?.pow_usize(6)?.truncate(order.max(1))?;
            let rhs = a5.mul(&b6.inverse()?)?.scale(&BigInt::from(5));
            Ok(compare_series(&lhs, &rhs, order))
        }),
    ));

    // Schur's partition-theoretic reading of Rogers-Ramanujan.
    list.push(Entry::new(
        "schur-rr-interpretation",
        Box::new(|order| {
            let n = order.max(1);
            let mut memo = vec![vec![None; n + 3]; n + 1];
            // parts differing by more than 1 vs parts = +-1 mod 5
            let gap = Series::from_coeffs(
                IntegerRing,
                (0..n).map(|m| superdistinct_count(m, 1, &mut memo)).collect(),
            )?;
            let res15 = Series::from_coeffs(IntegerRing, residue_partition_counts(n, &[1, 4]))?;
            if let Some(m) = compare_series(&gap, &res15, order) {
                return Ok(Some(m));
            }
            // parts > 1 differing by more than 1 vs parts = +-2 mod 5
            let mut memo = vec![vec![None; n + 3]; n + 1];
            let gap2 = Series::from_coeffs(
                IntegerRing,
                (0..n).map(|m| superdistinct_count(m, 2, &mut memo)).collect(),
            )?;
            let res25 = Series::from_coeffs(IntegerRing, residue_partition_counts(n, &[2, 3]))?;
            Ok(compare_series(&gap2, &res25, order))
        }),
    ));

    // The 2-adic digit expansion as a product identity.
    list.push(Entry::new(
        "2adic",
        Box::new(|order| {
            let mut lhs = Series::one(IntegerRing, order.max(1));
            let mut e = 1usize;
            while e < order {
                let factor = Series::monomial(IntegerRing, &BigInt::from(1), e, order.max(1))
                    .add(&Series::one(IntegerRing, order.max(1)))?;
                lhs = lhs.mul(&factor)?.truncate(order.max(1))?;
                e *= 2;
            }
            let rhs = Series::from_coeffs(IntegerRing, vec![BigInt::from(1); order.max(1)])?;
            Ok(compare_series(&lhs, &rhs, order))
        }),
    ));

    // prod (1 + X^k)(1 - X^(2k-1)) = 1.
    list.push(Entry::new(
        "euler-distinct-odd",
        Box::new(|order| {
            let lhs = int_product(&[(1, 1, 0), (-1, 2, -1)], order)?;
            let rhs = Series::one(IntegerRing, order.max(1));
            Ok(compare_series(&lhs, &rhs, order))
        }),
    ));

    // Deliberately corrupted pair; a harness self-test kept out of `all`.
    list.push(Entry::fixture(
        "selftest-mismatch",
        Box::new(|order| {
            let lhs = int_product(&[(-1, 1, 0)], order)?;
            let rhs = theta_sum_int(&ThetaSpec::new(true, 3, 1), order)?
                .add(&Series::x(IntegerRing, order.max(1)))?;
            Ok(compare_series(&lhs, &rhs, order))
        }),
    ));

    list
}

fn divisor_count_series(order: usize) -> Series<IntegerRing> {
    let mut coeffs = vec![BigInt::from(0); order.max(1)];
    for (n, slot) in coeffs.iter_mut().enumerate().skip(1) {
        let mut d = 0i64;
        for k in 1..=n {
            if n % k == 0 {
                d += 1;
            }
        }
        *slot = BigInt::from(d);
    }
    Series::from_coeffs(IntegerRing, coeffs).expect("nonempty")
}

/// All registered identity ids, in registry order. Fixture entries (broken
/// on purpose, for harness self-tests) are flagged.
pub fn identity_ids() -> Vec<(String, bool)> {
    entries().into_iter().map(|e| (e.id, e.fixture)).collect()
}

/// Verifies a single identity to the given order.
pub fn verify_identity(id: &str, order: usize) -> Result<IdentityReport> {
    if order == 0 {
        return Err(Error::Domain("order must be at least 1".into()));
    }
    let all = entries();
    let entry = all
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))?;
    let mismatch = (entry.check)(order)?;
    Ok(match mismatch {
        None => IdentityReport::pass(id, order),
        Some(m) => IdentityReport::fail(id, order, m),
    })
}

/// Verifies every non-fixture identity, fanning out across threads; reports
/// come back in registry order regardless of completion order.
pub fn verify_all(order: usize) -> Result<Vec<IdentityReport>> {
    if order == 0 {
        return Err(Error::Domain("order must be at least 1".into()));
    }
    let all: Vec<Entry> = entries().into_iter().filter(|e| !e.fixture).collect();
    let workers = std::thread::available_parallelism().map_or(4, |n| n.get());
    let reports: Vec<Result<IdentityReport>> = std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for chunk in all.chunks(all.len().div_ceil(workers).max(1)) {
            handles.push(scope.spawn(move || {
                chunk
                    .iter()
                    .map(|entry| {
                        let mismatch = (entry.check)(order)?;
                        Ok(match mismatch {
                            None => IdentityReport::pass(entry.id.clone(), order),
                            Some(m) => IdentityReport::fail(entry.id.clone(), order, m),
                        })
                    })
                    .collect::<Vec<_>>()
            }));
        }
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("verification worker panicked"))
            .collect()
    });
    reports.into_iter().collect()
}

use super::elementary::maclaurin;
use super::*;
use crate::coeffring::{Gaussian, GaussianRing, IntegerRing, ModRing, RationalRing};
use num_rational::BigRational;
use num_traits::{One, Zero};

type QSeries = Series<RationalRing>;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn zs(coeffs: &[i64]) -> Series<IntegerRing> {
    Series::from_i64s(IntegerRing, coeffs).unwrap()
}

fn qs(coeffs: &[i64]) -> QSeries {
    Series::from_i64s(RationalRing, coeffs).unwrap()
}

fn geometric(n: usize) -> Series<IntegerRing> {
    Series::from_coeffs(IntegerRing, vec![BigInt::one(); n]).unwrap()
}

/// Small deterministic generator for random-looking test series.
fn pseudo_series(seed: u64, precision: usize, val_one: bool) -> QSeries {
    let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1);
    let mut coeffs = Vec::with_capacity(precision);
    for i in 0..precision {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        let v = ((state >> 33) as i64 % 9) - 4;
        if val_one && i == 0 {
            coeffs.push(q(0, 1));
        } else if val_one && i == 1 {
            coeffs.push(q(if v == 0 { 1 } else { v }, 1));
        } else {
            coeffs.push(q(v, 1));
        }
    }
    Series::from_coeffs(RationalRing, coeffs).unwrap()
}

#[test]
fn make_and_precision() {
    let s = zs(&[1, 1, 1, 1]);
    assert_eq!(s.precision(), 4);
    let x = zs(&[0, 1]);
    assert_eq!(x.valuation(), Valuation::Exact(1));
    assert!(Series::from_coeffs(IntegerRing, vec![]).is_err());
}

#[test]
fn one_minus_x_times_geometric_is_one() {
    let n = 12;
    let mut one_minus_x = Series::one(IntegerRing, n);
    one_minus_x = one_minus_x.sub(&Series::x(IntegerRing, n)).unwrap();
    let prod = one_minus_x.mul(&geometric(n)).unwrap();
    assert_eq!(prod, Series::one(IntegerRing, prod.precision()));
}

#[test]
fn additive_identity() {
    let a = zs(&[3, -1, 4, 1, -5]);
    let z = Series::zero(IntegerRing, 5);
    assert_eq!(a.add(&z).unwrap(), a);
}

#[test]
fn geometric_squared() {
    let sq = geometric(10).mul(&geometric(10)).unwrap();
    for n in 0..sq.precision() {
        assert_eq!(*sq.coeff(n), BigInt::from(n as i64 + 1));
    }
}

#[test]
fn mul_rejects_ring_mismatch() {
    let a = Series::one(ModRing::from_u64(5).unwrap(), 4);
    let b = Series::one(ModRing::from_u64(7).unwrap(), 4);
    assert!(matches!(a.mul(&b), Err(crate::Error::RingMismatch(..))));
}

#[test]
fn inverse_of_one_minus_x_is_geometric() {
    let one_minus_x = zs(&[1, -1, 0, 0, 0, 0, 0, 0]);
    assert_eq!(one_minus_x.inverse().unwrap(), geometric(8));
    let one = Series::one(IntegerRing, 6);
    assert_eq!(one.inverse().unwrap(), one);
}

#[test]
fn inverse_multiplies_back() {
    let a = Series::from_coeffs(RationalRing, vec![q(2, 1); 21]).unwrap();
    let a = a.add(&Series::x(RationalRing, 21).scale(&q(-1, 1))).unwrap();
    let inv = a.inverse().unwrap();
    let prod = a.mul(&inv).unwrap();
    assert_eq!(prod, Series::one(RationalRing, prod.precision()));
}

#[test]
fn inverse_needs_unit_constant() {
    let a = zs(&[2, 1, 1]);
    assert!(matches!(a.inverse(), Err(crate::Error::NotInvertible(..))));
}

#[test]
fn compose_right_identity() {
    let a = qs(&[5, 4, 3, 2, 1]);
    let x = Series::x(RationalRing, 5);
    assert_eq!(a.compose(&x).unwrap(), a);
}

#[test]
fn compose_spreads_x_squared() {
    let a = qs(&[1, 2, 3]);
    let x2 = Series::monomial(RationalRing, &q(1, 1), 2, 7);
    let c = a.compose(&x2).unwrap();
    assert_eq!(c, qs(&[1, 0, 2, 0, 3, 0, 0]).truncate(c.precision()).unwrap());
}

#[test]
fn compose_agrees_with_inverse_route() {
    // geometric(X + X^2) = 1/(1 - X - X^2)
    let n = 11;
    let geo = Series::from_coeffs(RationalRing, vec![q(1, 1); n]).unwrap();
    let inner = qs(&[0, 1, 1]).extend_exact(n);
    let via_compose = geo.compose(&inner).unwrap();
    let via_inverse = qs(&[1, -1, -1]).extend_exact(n).inverse().unwrap();
    let m = via_compose.precision().min(via_inverse.precision());
    assert!(m >= 10);
    assert_eq!(
        via_compose.truncate(m).unwrap(),
        via_inverse.truncate(m).unwrap()
    );
}

#[test]
fn compose_constant_term_violation() {
    let geo = Series::from_coeffs(RationalRing, vec![q(1, 1); 6]).unwrap();
    let shifted = qs(&[1, 1]).extend_exact(6);
    assert!(matches!(
        geo.compose(&shifted),
        Err(crate::Error::CompositionDomain(..))
    ));
    // A visible polynomial may be composed with anything.
    let poly = qs(&[1, 2]).extend_exact(6);
    let ok = poly.compose(&shifted).unwrap();
    assert_eq!(*ok.coeff(0), q(3, 1));
    assert_eq!(*ok.coeff(1), q(2, 1));
}

#[test]
fn reverse_moebius() {
    // reverse(X/(1-X)) = X/(1+X) = X - X^2 + X^3 -+ ...
    let n = 10;
    let a = Series::x(RationalRing, n)
        .mul(&qs(&[1, -1]).extend_exact(n).inverse().unwrap())
        .unwrap();
    let rev = a.reverse().unwrap();
    for i in 1..rev.precision() {
        let expect = if i % 2 == 1 { q(1, 1) } else { q(-1, 1) };
        assert_eq!(*rev.coeff(i), expect, "coefficient {i}");
    }
    let x = Series::x(RationalRing, 8);
    assert_eq!(x.reverse().unwrap(), x);
}

#[test]
fn reverse_is_two_sided() {
    for seed in 0..6u64 {
        let a = pseudo_series(seed, 12, true);
        let b = a.reverse().unwrap();
        let x = Series::x(RationalRing, 12);
        let ab = a.compose(&b).unwrap();
        let ba = b.compose(&a).unwrap();
        assert_eq!(ab, x.truncate(ab.precision()).unwrap());
        assert_eq!(ba, x.truncate(ba.precision()).unwrap());
    }
}

#[test]
fn reverse_rejects_bad_valuation() {
    assert!(matches!(
        qs(&[1, 1, 1]).reverse(),
        Err(crate::Error::NotReversible(..))
    ));
    assert!(matches!(
        qs(&[0, 0, 1]).reverse(),
        Err(crate::Error::NotReversible(..))
    ));
}

#[test]
fn derivative_of_exp_is_exp() {
    let e = maclaurin(&RationalRing, ElementaryKind::Exp, 12).unwrap();
    let d = e.derivative().unwrap();
    assert_eq!(d, e.truncate(11).unwrap());
    let one = Series::one(RationalRing, 5);
    assert_eq!(one.derivative().unwrap(), Series::zero(RationalRing, 4));
}

#[test]
fn derivative_exhausts_precision() {
    let s = qs(&[7]);
    assert!(matches!(
        s.derivative(),
        Err(crate::Error::PrecisionExhausted(..))
    ));
    assert!(matches!(
        qs(&[1, 2, 3]).hasse(3),
        Err(crate::Error::PrecisionExhausted(..))
    ));
}

#[test]
fn hasse_times_factorial_is_iterated_derivative() {
    for seed in 0..4u64 {
        let a = pseudo_series(seed + 20, 14, false);
        for k in 0..=5usize {
            let mut derived = a.clone();
            for _ in 0..k {
                derived = derived.derivative().unwrap();
            }
            let mut factorial = q(1, 1);
            for i in 1..=k {
                factorial *= q(i as i64, 1);
            }
            let hasse = a.hasse(k).unwrap().scale(&factorial);
            assert_eq!(hasse, derived);
        }
    }
}

#[test]
fn hasse_works_over_residue_rings() {
    let m5 = ModRing::from_u64(5).unwrap();
    let a = Series::from_i64s(m5, &[1, 2, 3, 4, 0, 1, 2]).unwrap();
    let h = a.hasse(2).unwrap();
    // binom(2,2)*3, binom(3,2)*4, binom(4,2)*0, binom(5,2)*1, binom(6,2)*2
    assert_eq!(h, Series::from_i64s(ModRing::from_u64(5).unwrap(), &[3, 12, 0, 10, 30]).unwrap());
}

#[test]
fn log1p_inverts_exp() {
    let n = 16;
    let e = maclaurin(&RationalRing, ElementaryKind::Exp, n).unwrap();
    let em1 = e.sub(&Series::one(RationalRing, n)).unwrap();
    let log = elementary(ElementaryKind::Log1p, &em1).unwrap();
    assert_eq!(log, Series::x(RationalRing, log.precision()));
}

#[test]
fn exp_of_zero_series() {
    let z = Series::zero(RationalRing, 6);
    let e = elementary(ElementaryKind::Exp, &z).unwrap();
    assert_eq!(e, Series::one(RationalRing, e.precision()));
}

#[test]
fn pythagorean_identity() {
    let x = Series::x(RationalRing, 30);
    let sin = elementary(ElementaryKind::Sin, &x).unwrap();
    let cos = elementary(ElementaryKind::Cos, &x).unwrap();
    let total = sin.mul(&sin).unwrap().add(&cos.mul(&cos).unwrap()).unwrap();
    assert_eq!(total, Series::one(RationalRing, total.precision()));
}

#[test]
fn tan_and_arctan_cancel() {
    let x = Series::x(RationalRing, 14);
    let tan = elementary(ElementaryKind::Tan, &x).unwrap();
    let back = elementary(ElementaryKind::Arctan, &tan).unwrap();
    assert_eq!(back, Series::x(RationalRing, back.precision()));
}

#[test]
fn arcsin_inverts_sin() {
    let x = Series::x(RationalRing, 12);
    let sin = elementary(ElementaryKind::Sin, &x).unwrap();
    let back = elementary(ElementaryKind::Arcsin, &sin).unwrap();
    assert_eq!(back, Series::x(RationalRing, back.precision()));
}

#[test]
fn elementary_rejects_residue_rings() {
    let m5 = ModRing::from_u64(5).unwrap();
    let x = Series::x(m5, 6);
    assert!(matches!(
        elementary(ElementaryKind::Exp, &x),
        Err(crate::Error::Characteristic(..))
    ));
}

#[test]
fn elementary_rejects_nonzero_constant_term() {
    let a = qs(&[1, 1, 1]);
    assert!(matches!(
        elementary(ElementaryKind::Exp, &a),
        Err(crate::Error::Domain(..))
    ));
}

#[test]
fn sqrt_squares_back() {
    let n = 20;
    let a = qs(&[1, 1]).extend_exact(n);
    let root = pow_c(&a, &q(1, 2)).unwrap();
    let sq = root.mul(&root).unwrap();
    assert_eq!(sq, a.truncate(sq.precision()).unwrap());
}

#[test]
fn integer_power_matches_expansion() {
    let a = qs(&[1, 1, 0]);
    let p = pow_c(&a, &q(2, 1)).unwrap();
    assert_eq!(p, qs(&[1, 2, 1]));
}

#[test]
fn negative_power_matches_inverse() {
    let n = 15;
    let a = qs(&[1, 1]).extend_exact(n);
    let p = pow_c(&a, &q(-1, 1)).unwrap();
    let inv = a.inverse().unwrap();
    assert_eq!(p, inv.truncate(p.precision()).unwrap());
}

#[test]
fn binomial_series_coefficients() {
    // [X^k] (1+X)^c = c(c-1)...(c-k+1)/k!
    let n = 10;
    let c = q(1, 3);
    let p = pow_c(&qs(&[1, 1]).extend_exact(n), &c).unwrap();
    let mut expect = q(1, 1);
    for k in 0..p.precision() {
        if k > 0 {
            expect = expect * (&c - q(k as i64 - 1, 1)) / q(k as i64, 1);
        }
        assert_eq!(*p.coeff(k), expect, "binom(1/3, {k})");
    }
}

#[test]
fn vandermonde_convolution() {
    let n = 12;
    let base = qs(&[1, 1]).extend_exact(n);
    let a = q(2, 3);
    let b = q(-5, 7);
    let lhs = pow_c(&base, &a)
        .unwrap()
        .mul(&pow_c(&base, &b).unwrap())
        .unwrap();
    let rhs = pow_c(&base, &(a + b)).unwrap();
    assert_eq!(lhs, rhs.truncate(lhs.precision()).unwrap());
}

#[test]
fn euler_formula_over_gaussian_rationals() {
    let n = 16;
    let ring = GaussianRing;
    let i = Gaussian::i();
    let ix = Series::x(ring, n).scale(&i);
    let lhs = elementary(ElementaryKind::Exp, &ix).unwrap();
    let x = Series::x(ring, n);
    let cos = elementary(ElementaryKind::Cos, &x).unwrap();
    let sin = elementary(ElementaryKind::Sin, &x).unwrap().scale(&i);
    let rhs = cos.add(&sin).unwrap();
    assert_eq!(lhs, rhs.truncate(lhs.precision()).unwrap());
}

#[test]
fn valuation_and_norm() {
    let s = zs(&[0, 0, 1, 1]);
    assert_eq!(s.valuation(), Valuation::Exact(2));
    assert_eq!(s.norm(), Norm::Exact(q(1, 4)));
    let z = Series::zero(IntegerRing, 5);
    assert_eq!(z.valuation(), Valuation::AtLeast(5));
    assert_eq!(z.norm(), Norm::AtMost(q(1, 32)));
}

#[test]
fn norm_is_multiplicative() {
    for seed in 0..8u64 {
        let a = pseudo_series(seed, 9, false);
        let b = pseudo_series(seed + 101, 9, true);
        if let (Valuation::Exact(va), Valuation::Exact(vb)) = (a.valuation(), b.valuation()) {
            let prod = a.mul(&b).unwrap();
            if let Valuation::Exact(vp) = prod.valuation() {
                assert_eq!(vp, va + vb);
            } else {
                panic!("product valuation must stay exact over a field");
            }
        }
    }
}

#[test]
fn mul_associativity_random_triples() {
    for seed in 0..10u64 {
        let a = pseudo_series(3 * seed, 30, false);
        let b = pseudo_series(3 * seed + 1, 30, false);
        let c = pseudo_series(3 * seed + 2, 30, false);
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        let m = left.precision().min(right.precision());
        assert_eq!(left.truncate(m).unwrap(), right.truncate(m).unwrap());
    }
}

#[test]
fn composition_associativity() {
    for seed in 0..5u64 {
        let a = pseudo_series(seed + 40, 10, true);
        let b = pseudo_series(seed + 50, 10, true);
        let c = pseudo_series(seed + 60, 10, true);
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        let m = left.precision().min(right.precision());
        assert_eq!(left.truncate(m).unwrap(), right.truncate(m).unwrap());
    }
}

#[test]
fn exp_functional_equation() {
    let n = 12;
    for seed in 0..4u64 {
        let a = pseudo_series(seed + 70, n, true);
        let b = pseudo_series(seed + 80, n, true);
        let lhs = elementary(ElementaryKind::Exp, &a.add(&b).unwrap()).unwrap();
        let rhs = elementary(ElementaryKind::Exp, &a)
            .unwrap()
            .mul(&elementary(ElementaryKind::Exp, &b).unwrap())
            .unwrap();
        let m = lhs.precision().min(rhs.precision());
        assert_eq!(lhs.truncate(m).unwrap(), rhs.truncate(m).unwrap());
    }
}

#[test]
fn exp_integer_multiples() {
    let n = 12;
    let x = Series::x(RationalRing, n);
    let e = elementary(ElementaryKind::Exp, &x).unwrap();
    for k in -3i64..=3 {
        let kx = x.scale(&q(k, 1));
        let lhs = elementary(ElementaryKind::Exp, &kx).unwrap();
        let rhs = if k >= 0 {
            e.pow_usize(k as usize).unwrap()
        } else {
            e.pow_usize((-k) as usize).unwrap().inverse().unwrap()
        };
        let m = lhs.precision().min(rhs.precision());
        assert_eq!(lhs.truncate(m).unwrap(), rhs.truncate(m).unwrap(), "k={k}");
    }
}

#[test]
fn log_of_product_is_sum_of_logs() {
    let n = 12;
    for seed in 0..4u64 {
        let a = pseudo_series(seed + 90, n, true);
        let b = pseudo_series(seed + 95, n, true);
        let one = Series::one(RationalRing, n);
        let prod = one
            .add(&a)
            .unwrap()
            .mul(&one.add(&b).unwrap())
            .unwrap()
            .sub(&one)
            .unwrap();
        let lhs = elementary(ElementaryKind::Log1p, &prod).unwrap();
        let rhs = elementary(ElementaryKind::Log1p, &a)
            .unwrap()
            .add(&elementary(ElementaryKind::Log1p, &b).unwrap())
            .unwrap();
        let m = lhs.precision().min(rhs.precision());
        assert_eq!(lhs.truncate(m).unwrap(), rhs.truncate(m).unwrap());
    }
}

#[test]
fn maclaurin_reconstruction() {
    let a = pseudo_series(123, 10, false);
    let mut derived = a.clone();
    let mut factorial = q(1, 1);
    for n in 0..a.precision() {
        if n > 0 {
            factorial *= q(n as i64, 1);
            derived = derived.derivative().unwrap();
        }
        let value = derived.coeff(0).clone() / &factorial;
        assert_eq!(value, *a.coeff(n), "coefficient {n}");
    }
}

#[test]
fn chain_rule() {
    for seed in 0..5u64 {
        let outer = pseudo_series(seed + 200, 10, false);
        let inner = pseudo_series(seed + 300, 10, true);
        let lhs = outer.compose(&inner).unwrap().derivative().unwrap();
        let rhs = outer
            .derivative()
            .unwrap()
            .compose(&inner)
            .unwrap()
            .mul(&inner.derivative().unwrap())
            .unwrap();
        let m = lhs.precision().min(rhs.precision());
        assert_eq!(lhs.truncate(m).unwrap(), rhs.truncate(m).unwrap());
    }
}

#[test]
fn karatsuba_is_bit_identical() {
    for seed in 0..6u64 {
        let a = pseudo_series(seed + 400, 45, false);
        let b = pseudo_series(seed + 500, 45, false);
        assert_eq!(a.mul(&b).unwrap(), a.mul_karatsuba(&b).unwrap());
    }
    // Also with uneven precisions and positive valuations.
    let a = pseudo_series(77, 37, true);
    let b = pseudo_series(78, 52, false);
    assert_eq!(a.mul(&b).unwrap(), a.mul_karatsuba(&b).unwrap());
}

#[test]
fn reduction_commutes_with_arithmetic() {
    // Over Z, then reduce mod 7 == over Z/7 directly.
    let m7 = ModRing::from_u64(7).unwrap();
    let a = zs(&[3, -4, 11, 5, -9, 2]);
    let b = zs(&[1, 6, -2, 8, 3, -1]);
    let prod_z = a.mul(&b).unwrap();
    let reduced = prod_z.map_ring(m7.clone(), |c| m7.from_bigint(c));
    let am = a.map_ring(m7.clone(), |c| m7.from_bigint(c));
    let bm = b.map_ring(m7.clone(), |c| m7.from_bigint(c));
    let prod_m = am.mul(&bm).unwrap();
    assert_eq!(reduced, prod_m);
}

#[test]
fn div_shift_then_inverse() {
    // X^2 / (X - X^2) = X * geometric
    let num = Series::monomial(RationalRing, &q(1, 1), 2, 10);
    let den = qs(&[0, 1, -1]).extend_exact(10);
    let quot = num.div(&den).unwrap();
    for i in 1..quot.precision() {
        assert_eq!(*quot.coeff(i), q(1, 1));
    }
    assert!(den.div(&num).is_err());
    assert!(matches!(
        num.div(&Series::zero(RationalRing, 10)),
        Err(crate::Error::Domain(..))
    ));
}

#[test]
fn render_and_json_roundtrip() {
    let s = qs(&[1, 0, -2]);
    assert_eq!(s.render(), "1 + -2*X^2 + O(X^3)");
    let js = s.to_json();
    let back = Series::from_json(RationalRing, &js).unwrap();
    assert_eq!(back, s);

    let m7 = ModRing::from_u64(7).unwrap();
    let t = Series::from_i64s(m7.clone(), &[5, 6, 0, 2]).unwrap();
    let back = Series::from_json(m7, &t.to_json()).unwrap();
    assert_eq!(back, t);
}

#[test]
fn zero_render_keeps_precision_marker() {
    let z = Series::zero(RationalRing, 4);
    assert_eq!(z.render(), "0 + O(X^4)");
    assert!(Series::<RationalRing>::from_json(RationalRing, &z.to_json())
        .unwrap()
        .is_zero());
}

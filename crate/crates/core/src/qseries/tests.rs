use super::*;
use crate::coeffring::IntegerRing;
use num_traits::One;

fn zs(coeffs: &[i64]) -> Series<IntegerRing> {
    Series::from_i64s(IntegerRing, coeffs).unwrap()
}

#[test]
fn x_factorial_basics() {
    assert_eq!(x_factorial(&IntegerRing, 0, 5), Series::one(IntegerRing, 5));
    assert_eq!(x_factorial(&IntegerRing, 2, 4), zs(&[1, -1, -1, 1]));
    // factors beyond the order are inert
    assert_eq!(
        x_factorial(&IntegerRing, 50, 20),
        x_factorial(&IntegerRing, 20, 20)
    );
}

#[test]
fn gauss_binom_worked_example() {
    assert_eq!(gauss_binom(4, 2), zs(&[1, 1, 2, 1, 1]));
    assert_eq!(gauss_binom(7, 0), zs(&[1]));
    assert_eq!(gauss_binom(7, 7), zs(&[1]));
    assert!(gauss_binom(4, -1).is_zero());
    assert!(gauss_binom(4, 5).is_zero());
}

#[test]
fn gauss_binom_evaluates_to_binomial() {
    // at X = 1 the Gaussian coefficient collapses to binom(n, k)
    let one = BigInt::one();
    assert_eq!(gauss_binom(4, 2).eval_at(&one), BigInt::from(6));
    assert_eq!(gauss_binom(10, 3).eval_at(&one), BigInt::from(120));
}

#[test]
fn gauss_symmetry() {
    for n in 0..=12usize {
        for k in 0..=n as i64 {
            assert_eq!(
                gauss_binom(n, k),
                gauss_binom(n, n as i64 - k),
                "n={n}, k={k}"
            );
        }
    }
}

#[test]
fn gauss_recurrence_branches_agree() {
    for n in 0..=10usize {
        for k in 0..=n as i64 {
            assert_eq!(gauss_binom(n, k), gauss_binom_alt(n, k), "n={n}, k={k}");
        }
    }
}

#[test]
fn gauss_matches_factorial_ratio() {
    // gauss(n,k) = X^n! / (X^k! X^(n-k)!), checked through series division
    for n in 1..=10usize {
        for k in 0..=n as i64 {
            let poly = gauss_binom(n, k);
            let order = poly.precision() + 4;
            let numer = x_factorial(&IntegerRing, n, order);
            let denom = x_factorial(&IntegerRing, k as usize, order)
                .mul(&x_factorial(&IntegerRing, n - k as usize, order))
                .unwrap()
                .truncate(order)
                .unwrap();
            let ratio = numer.mul(&denom.inverse().unwrap()).unwrap();
            for i in 0..poly.precision().min(ratio.precision()) {
                assert_eq!(ratio.coeff(i), poly.coeff(i), "n={n}, k={k}, X^{i}");
            }
        }
    }
}

#[test]
fn theta_sum_square_exponents() {
    // sum (-1)^k X^(k^2) = 1 - 2X + 2X^4 - 2X^9 + ...
    let t = theta_sum_int(&ThetaSpec::new(true, 2, 0), 16).unwrap();
    let mut expect = vec![0i64; 16];
    expect[0] = 1;
    expect[1] = -2;
    expect[4] = 2;
    expect[9] = -2;
    assert_eq!(t, zs(&expect));
}

#[test]
fn theta_sum_pentagonal() {
    let t = theta_sum_int(&ThetaSpec::new(true, 3, 1), 13).unwrap();
    let mut expect = vec![0i64; 13];
    expect[0] = 1;
    expect[1] = -1; // k = 1
    expect[2] = -1; // k = -1
    expect[5] = 1; // k = 2
    expect[7] = 1; // k = -2
    expect[12] = -1; // k = 3
    assert_eq!(t, zs(&expect));
}

#[test]
fn theta_sum_order_one_is_constant() {
    let t = theta_sum_int(&ThetaSpec::new(false, 4, 0), 1).unwrap();
    assert_eq!(t, zs(&[1]));
}

#[test]
fn theta_sum_rejects_fractional_exponents() {
    // (k^2 + k/2)/... A=1, B=0 gives k^2/2, fractional at k=1
    let spec = ThetaSpec::new(false, 1, 0);
    assert!(matches!(
        theta_sum_int(&spec, 10),
        Err(crate::Error::Domain(..))
    ));
}

#[test]
fn product_matches_pentagonal_theta() {
    let product = product_build(
        &IntegerRing,
        &[ProductTerm::new(BigInt::from(-1), 1, 0)],
        12,
    )
    .unwrap();
    let theta = theta_sum_int(&ThetaSpec::new(true, 3, 1), 12).unwrap();
    assert_eq!(product, theta);
}

#[test]
fn empty_product_is_one() {
    let p = product_build::<IntegerRing>(&IntegerRing, &[], 6).unwrap();
    assert_eq!(p, Series::one(IntegerRing, 6));
}

#[test]
fn distinct_odd_pairing_cancels() {
    let p = product_build(
        &IntegerRing,
        &[
            ProductTerm::new(BigInt::from(1), 1, 0),
            ProductTerm::new(BigInt::from(-1), 2, -1),
        ],
        40,
    )
    .unwrap();
    assert_eq!(p, Series::one(IntegerRing, 40));
}

#[test]
fn product_rejects_non_increasing_exponents() {
    let term = ProductTerm::new(BigInt::from(1), 0, 3);
    assert!(matches!(
        product_build(&IntegerRing, &[term], 10),
        Err(crate::Error::DivergentProduct(..))
    ));
}

#[test]
fn product_filters_by_residue_class() {
    // prod over k = 1 mod 2 of (1 - X^k) with filter == explicit odd family
    let filtered = product_build(
        &IntegerRing,
        &[ProductTerm::new(BigInt::from(-1), 1, 0)
            .filtered(KFilter::ModClass { modulus: 2, residue: 1 })],
        24,
    )
    .unwrap();
    let direct = product_build(
        &IntegerRing,
        &[ProductTerm::new(BigInt::from(-1), 2, -1)],
        24,
    )
    .unwrap();
    assert_eq!(filtered, direct);

    let not_div3 = product_build(
        &IntegerRing,
        &[ProductTerm::new(BigInt::from(-1), 1, 0).filtered(KFilter::NotDivisibleBy(3))],
        24,
    )
    .unwrap();
    let two_classes = product_build(
        &IntegerRing,
        &[
            ProductTerm::new(BigInt::from(-1), 3, -1),
            ProductTerm::new(BigInt::from(-1), 3, -2),
        ],
        24,
    )
    .unwrap();
    assert_eq!(not_div3, two_classes);
}

#[test]
fn verify_pentagonal_theorem() {
    let report = verify_identity("eptn", 60).unwrap();
    assert!(report.holds, "{report:?}");
}

#[test]
fn verify_triple_product_with_symbol_coefficients() {
    let report = verify_identity("jtp", 30).unwrap();
    assert!(report.holds, "{report:?}");
    // spot-check the alpha powers on the right-hand side
    let theta = theta_sum_alpha(&ThetaSpec::new(false, 2, 0).with_alpha(1, 0), 30).unwrap();
    let ring = AlphaRing;
    for k in 1..=5i64 {
        let c = theta.coeff((k * k) as usize);
        let expect = ring.add(&ring.alpha_pow(k), &ring.alpha_pow(-k));
        assert_eq!(c, &expect, "X^{}", k * k);
    }
}

#[test]
fn verify_fixture_detects_mismatch_at_one() {
    let report = verify_identity("selftest-mismatch", 10).unwrap();
    assert!(!report.holds);
    assert_eq!(report.first_mismatch.as_ref().unwrap().index, 1);
}

#[test]
fn unknown_identity_is_an_error() {
    assert!(matches!(
        verify_identity("no-such-identity", 10),
        Err(crate::Error::UnknownIdentity(..))
    ));
}

#[test]
fn hirschhorn_exact_for_all_small_n() {
    for n in 1..=8usize {
        let order = n * (n + 1) + 2;
        let report = verify_identity(&format!("hirschhorn-{n}"), order).unwrap();
        assert!(report.holds, "{report:?}");
    }
}

#[test]
fn bressoud_exact_for_all_small_n() {
    for n in 1..=8usize {
        let order = n * n + 2;
        for id in [format!("bressoud1-{n}"), format!("bressoud2-{n}")] {
            let report = verify_identity(&id, order).unwrap();
            assert!(report.holds, "{report:?}");
        }
    }
}

#[test]
fn whole_registry_holds_at_order_40() {
    let reports = verify_all(40).unwrap();
    assert!(reports.len() >= 40);
    for report in &reports {
        assert!(report.holds, "{report:?}");
        assert!(report.first_mismatch.is_none());
    }
    // ordering matches the registry listing
    let ids: Vec<String> = identity_ids()
        .into_iter()
        .filter(|(_, fixture)| !fixture)
        .map(|(id, _)| id)
        .collect();
    let got: Vec<String> = reports.into_iter().map(|r| r.identity_id).collect();
    assert_eq!(ids, got);
}

#[test]
fn report_json_shape() {
    let report = verify_identity("selftest-mismatch", 10).unwrap();
    let v = report.to_json();
    assert_eq!(v["holds"], serde_json::json!(false));
    assert_eq!(v["first_mismatch"]["index"], serde_json::json!(1));
}

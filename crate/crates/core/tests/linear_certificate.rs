//! The linear certificate and the example matrix pair.

use sympow_core::arith::{PrimeField, Rationals};
use sympow_core::groebner::GbConfig;
use sympow_core::linverify::{
    fermat_suite, find_certificate_arrangement, verify_theorem51_generic,
    verify_theorem51_instance,
};
use sympow_core::moncurve::MonomialCurve;

#[test]
fn generic_identity_over_rationals_and_prime_field() {
    let rep = verify_theorem51_generic(Rationals, 10, 7).unwrap();
    assert!(rep.residual_zero, "residuals: {:?}", rep.residuals);
    assert_eq!(rep.random_evaluations_zero, 10);

    let rep = verify_theorem51_generic(PrimeField::new(32003).unwrap(), 100, 42).unwrap();
    assert!(rep.residual_zero);
    assert_eq!(rep.random_evaluations_zero, 100);
}

#[test]
fn curve_presentation_instance() {
    let cfg = GbConfig::default();
    let curve = MonomialCurve::new(PrimeField::new(32003).unwrap(), 3, 4, 5, &cfg).unwrap();
    let pres = curve.presentation().unwrap();
    let (entries, xs) =
        find_certificate_arrangement(&pres.matrix).expect("power-of-variable entries overlap");
    let report = verify_theorem51_instance(&entries, &xs, &cfg).unwrap();
    assert!(report.certificate_identity);
    // the certificate's conclusion, checked independently
    assert!(report.containment.holds(), "{:?}", report.containment);
}

#[test]
fn b3_equal_to_b1_specialization() {
    let cfg = GbConfig::default();
    let r = sympow_core::arith::Ring::xyz(Rationals);
    // entries with b3 literally equal to b1: x4 = 1, others 0
    let entries = [
        r.poly("x^2"),
        r.poly("y^2"),
        r.poly("z^2"),
        r.poly("x*y"),
        r.poly("y*z"),
        r.poly("x*y"),
    ];
    let zero = sympow_core::arith::Polynomial::zero(&r);
    let one = sympow_core::arith::Polynomial::one(&r);
    let xs = [zero.clone(), zero.clone(), zero.clone(), one, zero];
    let report = verify_theorem51_instance(&entries, &xs, &cfg).unwrap();
    assert!(report.certificate_identity);
    assert!(report.containment.holds());
}

#[test]
fn prereq_failure_is_an_error() {
    let cfg = GbConfig::default();
    let r = sympow_core::arith::Ring::xyz(Rationals);
    let entries = [
        r.poly("x^2"),
        r.poly("y^2"),
        r.poly("z^2"),
        r.poly("x*y"),
        r.poly("y*z"),
        r.poly("z"),
    ];
    let zero = sympow_core::arith::Polynomial::zero(&r);
    let xs = [zero.clone(), zero.clone(), zero.clone(), zero.clone(), zero];
    assert!(matches!(
        verify_theorem51_instance(&entries, &xs, &cfg),
        Err(sympow_core::error::Error::CertificatePrereqFailed(_))
    ));
}

#[test]
fn fermat_suite_verdicts() {
    let cfg = GbConfig::default();
    let report = fermat_suite(PrimeField::new(32003).unwrap(), &cfg).unwrap();
    let by_name = |n: &str| report.variants.iter().find(|v| v.name == n).unwrap();

    // the squared-z variant of the printed matrix reproduces the classical
    // configuration ideal and is the counterexample
    let m2 = by_name("fermat-M-z2");
    assert!(m2.reproduces_classical);
    assert!(!m2.i3_in_i2.holds());
    assert!(m2.i3_in_i2.witness.is_some());
    assert!(!m2.certificate_applies);
    // I^(2) ⊆ I always; I^(2) ⊆ I^2 fails for the configuration
    assert!(m2.i2_in_i.holds());
    assert!(!m2.i2_in_i2.holds());

    // the reordered matrix as printed satisfies the containment
    let n3 = by_name("fermat-N");
    assert!(n3.i3_in_i2.holds());

    // characteristic 3 is refused
    assert!(fermat_suite(PrimeField::new(3).unwrap(), &cfg).is_err());
}

#[test]
fn certificate_implies_containment_on_random_monomial_instances() {
    // wherever the certificate applies, the independent check must agree
    let cfg = GbConfig::default();
    let f = PrimeField::new(32003).unwrap();
    for (a, b, c) in [(3u64, 4, 5), (3, 5, 7)] {
        let curve = MonomialCurve::new(f, a, b, c, &cfg).unwrap();
        let pres = curve.presentation().unwrap();
        if let Some((entries, xs)) = find_certificate_arrangement(&pres.matrix) {
            let report = verify_theorem51_instance(&entries, &xs, &cfg).unwrap();
            assert!(report.certificate_identity, "({a},{b},{c})");
            assert!(report.containment.holds(), "({a},{b},{c})");
        }
    }
}

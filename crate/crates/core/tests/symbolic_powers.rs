//! Symbolic powers: saturation route against the closed forms, on the small
//! curves where both are cheap.

use sympow_core::arith::{Homogeneity, PrimeField, WeightGrading};
use sympow_core::groebner::{GbConfig, Ideal};
use sympow_core::moncurve::MonomialCurve;
use sympow_core::symbolic::{
    cube_closed_form, curve_symbolic_power, schenzel_delta1, symbolic_power_saturation, CaseId,
    CrossCheck, Route, RouteChoice, SymbolicLab,
};

fn field() -> PrimeField {
    PrimeField::new(32003).unwrap()
}

fn curve_345() -> (MonomialCurve<PrimeField>, SymbolicLab<PrimeField>) {
    let cfg = GbConfig::default();
    let curve = MonomialCurve::new(field(), 3, 4, 5, &cfg).unwrap();
    let lab = SymbolicLab::for_curve(&curve, cfg);
    (curve, lab)
}

#[test]
fn first_symbolic_power_of_a_prime_is_itself() {
    let (curve, lab) = curve_345();
    let s1 = lab.symbolic(1).unwrap();
    assert!(s1.equal(curve.ideal(), lab.cfg()).unwrap());
}

#[test]
fn schenzel_generator_345() {
    let (curve, lab) = curve_345();
    let data = schenzel_delta1(&curve, &lab).unwrap();
    let cfg = lab.cfg();

    // Δ₁ closes the gap: (P², Δ₁) = saturation of P²
    let p2 = lab.power(2).unwrap();
    let closed = p2.sum(&Ideal::new(curve.ring(), vec![data.delta1.clone()]));
    assert!(closed.equal(&lab.symbolic(2).unwrap(), cfg).unwrap());

    // Δ₁ is quasi-homogeneous for (3,4,5) and sits in P^(2) \ P²
    let w = WeightGrading::new(vec![3, 4, 5]).unwrap();
    assert!(matches!(
        data.delta1.weighted_degree(&w).unwrap(),
        Homogeneity::Homogeneous(_)
    ));
    assert!(lab
        .symbolic(2)
        .unwrap()
        .contains_poly(&data.delta1, cfg)
        .unwrap());
    assert!(!p2.contains_poly(&data.delta1, cfg).unwrap());

    // rows 1-2 of the matrix are the presentation matrix (up to relabeling)
    for (m, _) in data.matrix[2][0].terms() {
        assert!(m.total_degree() > 0);
    }
}

#[test]
fn second_symbolic_power_differs_from_square() {
    let (_, lab) = curve_345();
    let cfg = lab.cfg();
    assert!(!lab
        .symbolic(2)
        .unwrap()
        .equal(&lab.power(2).unwrap(), cfg)
        .unwrap());
    assert!(!lab
        .symbolic(3)
        .unwrap()
        .equal(&lab.power(3).unwrap(), cfg)
        .unwrap());
}

#[test]
fn cube_closed_form_345() {
    let (curve, lab) = curve_345();
    let cube = cube_closed_form(&curve, &lab).unwrap();
    assert_eq!(cube.case_id, CaseId::C1a);
    assert_eq!(cube.crosscheck, CrossCheck::Pass);
    assert_eq!(cube.deltas.len(), 1);
    for check in &cube.relation_checks {
        assert!(check.verified, "{}", check.description);
    }
    // the cube contains the ordinary cube
    let cfg = lab.cfg();
    assert!(cube
        .ideal
        .contains_ideal(&lab.power(3).unwrap(), cfg)
        .unwrap());
}

#[test]
fn filtration_axioms_345() {
    let (_, lab) = curve_345();
    let cfg = lab.cfg();
    // P^(a) · P^(b) ⊆ P^(a+b)
    for (a, b) in [(1u32, 1u32), (1, 2), (2, 2)] {
        let prod = lab.symbolic(a).unwrap().product(&lab.symbolic(b).unwrap());
        assert!(
            lab.symbolic(a + b)
                .unwrap()
                .contains_ideal(&prod, cfg)
                .unwrap(),
            "P^({a})·P^({b}) ⊄ P^({}{})",
            a + b,
            ""
        );
    }
    // P^(a) ⊆ P^(b) for a ≥ b
    for (a, b) in [(2u32, 1u32), (3, 2), (3, 1), (4, 3)] {
        assert!(
            lab.symbolic(b)
                .unwrap()
                .contains_ideal(&lab.symbolic(a).unwrap(), cfg)
                .unwrap(),
            "P^({a}) ⊄ P^({b})"
        );
    }
}

#[test]
fn route_dispatch() {
    let (curve, lab) = curve_345();
    let r2 = curve_symbolic_power(&curve, &lab, 2, RouteChoice::Both).unwrap();
    assert_eq!(r2.route, Route::ClosedForm);
    assert_eq!(r2.crosscheck, CrossCheck::Pass);

    let r3 = curve_symbolic_power(&curve, &lab, 3, RouteChoice::Both).unwrap();
    assert_eq!(r3.route, Route::ClosedForm);
    assert_eq!(r3.crosscheck, CrossCheck::Pass);

    // n ≥ 4 has no closed form; the request falls back with a reason
    let r4 = curve_symbolic_power(&curve, &lab, 4, RouteChoice::Closed).unwrap();
    assert_eq!(r4.route, Route::Saturation);
    assert!(r4.fallback.is_some());

    let sat = curve_symbolic_power(&curve, &lab, 3, RouteChoice::Saturation).unwrap();
    assert!(sat.ideal.equal(&r3.ideal, lab.cfg()).unwrap());
}

#[test]
fn saturation_route_standalone() {
    let cfg = GbConfig::default();
    let curve = MonomialCurve::new(field(), 3, 4, 5, &cfg).unwrap();
    let res =
        symbolic_power_saturation(curve.ideal(), 2, &curve.maximal_ideal(), &cfg).unwrap();
    assert_eq!(res.route, Route::Saturation);
    assert!(res
        .ideal
        .contains_ideal(&curve.ideal().power(2).unwrap(), &cfg)
        .unwrap());
}

#[test]
fn corpus_closed_forms_match_saturation() {
    let cfg = GbConfig::default();
    for (a, b, c) in [(3u64, 5, 7), (5, 6, 7), (5, 7, 9)] {
        let curve = MonomialCurve::new(field(), a, b, c, &cfg).unwrap();
        let lab = SymbolicLab::for_curve(&curve, cfg.clone());
        let cube = cube_closed_form(&curve, &lab).unwrap();
        assert_eq!(
            cube.crosscheck,
            CrossCheck::Pass,
            "({a},{b},{c}) case {} perm {:?}",
            cube.case_id,
            cube.perm
        );
        for check in &cube.relation_checks {
            assert!(check.verified, "({a},{b},{c}): {}", check.description);
        }
    }
}

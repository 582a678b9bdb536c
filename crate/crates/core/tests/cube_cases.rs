//! Case coverage for the cube closed form: one exemplar curve per case,
//! each cross-checked against the saturation oracle.

use sympow_core::arith::PrimeField;
use sympow_core::groebner::GbConfig;
use sympow_core::moncurve::MonomialCurve;
use sympow_core::symbolic::{cube_closed_form, CaseId, CrossCheck, SymbolicLab};

fn run_case(p: u64, a: u64, b: u64, c: u64, expect: CaseId) {
    let cfg = GbConfig::default();
    let field = PrimeField::new(p).unwrap();
    let curve = MonomialCurve::new(field, a, b, c, &cfg).unwrap();
    let lab = SymbolicLab::for_curve(&curve, cfg);
    let cube = cube_closed_form(&curve, &lab).unwrap();
    assert_eq!(cube.case_id, expect, "({a},{b},{c}) case");
    for check in &cube.relation_checks {
        assert!(
            check.verified,
            "({a},{b},{c}) case {}: {} [{:?}]",
            cube.case_id, check.description, check.note
        );
    }
    assert_eq!(
        cube.crosscheck,
        CrossCheck::Pass,
        "({a},{b},{c}) case {} assembled ideal vs saturation",
        cube.case_id
    );
}

#[test]
fn case_1a() {
    run_case(32003, 3, 4, 5, CaseId::C1a);
}

#[test]
fn case_1b() {
    run_case(32003, 4, 5, 7, CaseId::C1b);
}

#[test]
fn case_1c() {
    run_case(32003, 3, 7, 8, CaseId::C1c);
}

#[test]
fn case_2a() {
    run_case(32003, 7, 9, 10, CaseId::C2a);
}

#[test]
fn case_2b_characteristic_two() {
    run_case(2, 7, 9, 10, CaseId::C2b);
}

#[test]
fn case_2a_second_exemplar() {
    run_case(32003, 7, 11, 13, CaseId::C2a);
}

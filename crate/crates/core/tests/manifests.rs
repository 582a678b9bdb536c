//! The manifest runner: expectation matching, exit codes, named targets.

use sympow_core::manifest::{run_manifest, ExperimentManifest, RunOptions};

fn run(json: serde_json::Value) -> sympow_core::manifest::RunReport {
    let manifest: ExperimentManifest = serde_json::from_value(json).unwrap();
    run_manifest(&manifest, &RunOptions::default()).unwrap()
}

#[test]
fn empty_operations_list_passes() {
    let report = run(serde_json::json!({
        "target": {"curve": [3, 4, 5]},
        "operations": []
    }));
    assert!(report.items.is_empty());
    assert!(report.pass);
    assert_eq!(report.exit_code(), 0);
}

#[test]
fn matched_expectations_exit_zero() {
    let report = run(serde_json::json!({
        "target": {"curve": [3, 4, 5]},
        "operations": [
            {"op": "symbolic_containment", "m": 3, "s": 2, "expect": "holds"},
            {"op": "harbourne_window", "c": 2, "n_max": 3,
             "expect": ["holds", "holds", "holds"]}
        ]
    }));
    assert!(report.pass, "{}", serde_json::to_string_pretty(&report.items).unwrap());
    assert_eq!(report.exit_code(), 0);
}

#[test]
fn failed_expectation_exits_one() {
    let report = run(serde_json::json!({
        "target": {"named": "fermat-M-z2"},
        "operations": [
            {"op": "symbolic_containment", "m": 3, "s": 2, "expect": "holds"}
        ]
    }));
    assert!(!report.pass);
    assert_eq!(report.exit_code(), 1);
}

#[test]
fn expected_failure_matches() {
    let report = run(serde_json::json!({
        "target": {"named": "fermat-M-z2"},
        "operations": [
            {"op": "symbolic_containment", "m": 3, "s": 2, "expect": "fails"}
        ]
    }));
    assert!(report.pass);
    assert_eq!(report.exit_code(), 0);
}

#[test]
fn budget_exceeded_exits_two() {
    let report = run(serde_json::json!({
        "target": {"curve": [3, 4, 5]},
        "budget": 1,
        "operations": [
            {"op": "symbolic_containment", "m": 2, "s": 1}
        ]
    }));
    assert!(report.budget_exceeded);
    assert_eq!(report.exit_code(), 2);
}

#[test]
fn deterministic_mode_zeroes_timings() {
    let manifest: ExperimentManifest = serde_json::from_value(serde_json::json!({
        "target": {"curve": [3, 4, 5]},
        "operations": [{"op": "symbolic_containment", "m": 2, "s": 1}]
    }))
    .unwrap();
    let opts = RunOptions {
        deterministic: true,
        ..Default::default()
    };
    let a = run_manifest(&manifest, &opts).unwrap();
    let b = run_manifest(&manifest, &opts).unwrap();
    assert_eq!(
        serde_json::to_string(&a.items).unwrap(),
        serde_json::to_string(&b.items).unwrap()
    );
}

#[test]
fn corpus_target_runs_per_curve() {
    let report = run(serde_json::json!({
        "target": {"corpus": [[3, 4, 5], [3, 5, 7]]},
        "operations": [{"op": "symbolic_containment", "m": 2, "s": 1, "expect": "holds"}]
    }));
    assert_eq!(report.items.len(), 2);
    assert!(report.pass);
}

#[test]
fn curve_target_rejects_characteristic_three() {
    let manifest: ExperimentManifest = serde_json::from_value(serde_json::json!({
        "target": {"curve": [3, 4, 5]},
        "characteristic": 3,
        "operations": []
    }))
    .unwrap();
    assert!(run_manifest(&manifest, &RunOptions::default()).is_err());
}

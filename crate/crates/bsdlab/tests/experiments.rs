//! Registry-level behavior: name stability, statement labels, precondition
//! rejections, and convergence sweeps with their expected slopes.

use bsdlab::harness::{convergence_study, default_spec, registry, run_experiment, SweepParam};
use bsdlab::linalg::cr;
use bsdlab::Error;

#[test]
fn registry_contains_the_contracted_names() {
    let names: Vec<&str> = registry().iter().map(|d| d.name).collect();
    for required in [
        "thm61_hua_eigen",
        "thm72_radial",
        "prop83_disk",
        "prop83_mc",
        "lemma84_tube",
        "fk_dual_cauchy",
        "remark51_hprime",
        "typeone_k1",
    ] {
        assert!(names.contains(&required), "missing experiment {required}");
    }
    let mut unique = names.clone();
    unique.sort_unstable();
    unique.dedup();
    assert_eq!(unique.len(), names.len(), "duplicate experiment names");
}

#[test]
fn every_statement_carries_its_label() {
    for def in registry() {
        let labeled = ["Thm", "Prop", "Lemma", "Remark", "(5.6)"]
            .iter()
            .any(|tag| def.statement.contains(tag));
        assert!(labeled, "statement of {} lacks a label: {}", def.name, def.statement);
    }
}

#[test]
fn unknown_names_are_rejected_with_a_clear_message() {
    let err = default_spec("no_such_experiment").unwrap_err();
    assert!(err.to_string().contains("unregistered experiment"));
}

#[test]
fn conical_experiments_reject_the_wrong_regime() {
    let mut spec = default_spec("prop83_mc").unwrap();
    spec.s = cr(0.7);
    match run_experiment(&spec) {
        Err(Error::Precondition(msg)) => assert!(msg.contains("\u{3c3}"), "{msg}"),
        other => panic!("expected a regime rejection, got {other:?}"),
    }
}

#[test]
fn tube_only_experiments_reject_nonzero_b() {
    for name in ["thm61_hua_eigen", "lemma84_tube"] {
        let mut spec = default_spec(name).unwrap();
        spec.b = 1;
        assert!(
            matches!(run_experiment(&spec), Err(Error::Precondition(_))),
            "{name} accepted a non-tube domain"
        );
    }
}

#[test]
fn monte_carlo_sweep_has_half_order_slope() {
    let spec = default_spec("prop83_mc").unwrap();
    let study =
        convergence_study(&spec, SweepParam::Samples, &[1000.0, 4000.0, 16000.0]).unwrap();
    let slope = study.slope.expect("slope fitted");
    assert!(
        (slope - (-0.5)).abs() <= 0.15,
        "stderr slope {slope:.3} outside -0.5 \u{b1} 0.15"
    );
    assert_eq!(study.reports.len(), 3);
    for (report, n) in study.reports.iter().zip([1000usize, 4000, 16000]) {
        assert_eq!(report.samples, n);
    }
}

#[test]
fn fd_sweep_recovers_the_stencil_order() {
    let mut spec = default_spec("thm61_hua_eigen").unwrap();
    spec.order = 2;
    let study = convergence_study(&spec, SweepParam::Step, &[1e-2, 2e-2, 4e-2]).unwrap();
    let slope = study.slope.expect("slope fitted");
    assert!(
        (slope - 2.0).abs() <= 0.5,
        "order-2 rel_err slope {slope:.3} outside 2 \u{b1} 0.5"
    );

    let mut spec = default_spec("thm61_hua_eigen").unwrap();
    spec.order = 4;
    let study = convergence_study(&spec, SweepParam::Step, &[5e-3, 1e-2, 2e-2]).unwrap();
    let slope = study.slope.expect("slope fitted");
    assert!(
        (slope - 4.0).abs() <= 0.5,
        "order-4 rel_err slope {slope:.3} outside 4 \u{b1} 0.5"
    );
}

#[test]
fn sweeps_reject_unsupported_parameters() {
    let spec = default_spec("fk_dual_cauchy").unwrap();
    let err = convergence_study(&spec, SweepParam::Step, &[1e-2, 2e-2]).unwrap_err();
    assert!(err.to_string().contains("does not support sweeping step"));

    let spec = default_spec("thm61_hua_eigen").unwrap();
    let err = convergence_study(&spec, SweepParam::Samples, &[100.0, 200.0]).unwrap_err();
    assert!(err.to_string().contains("does not support sweeping samples"));
}

#[test]
fn sample_count_sweeps_need_positive_integers() {
    let spec = default_spec("prop83_mc").unwrap();
    assert!(convergence_study(&spec, SweepParam::Samples, &[0.0, 100.0]).is_err());
    assert!(convergence_study(&spec, SweepParam::Samples, &[1000.5, 2000.0]).is_err());
}

#[test]
fn determinism_experiment_passes_at_reduced_size() {
    let mut spec = default_spec("determinism").unwrap();
    spec.samples = 2000;
    let report = run_experiment(&spec).unwrap();
    assert!(report.pass, "reduced-size determinism run failed: {report:?}");
}

#[test]
fn reports_echo_the_spec_fields() {
    let mut spec = default_spec("kernel_covariance").unwrap();
    spec.seed = 4242;
    let report = run_experiment(&spec).unwrap();
    assert_eq!(report.name, "kernel_covariance");
    assert_eq!(report.seed, 4242);
    assert_eq!(report.r, spec.r);
    assert_eq!(report.b, spec.b);
    assert_eq!(report.tol, spec.tol);
}

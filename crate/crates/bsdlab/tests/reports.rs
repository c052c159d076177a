//! Report serialization contract: canonical JSON, CSV arity, lossless float
//! round-trips, and file output.

use bsdlab::harness::{
    default_spec, reports_to_csv, reports_to_json, run_experiment, write_reports, Report,
    ReportFormat, CSV_HEADER,
};

fn sample_report() -> Report {
    let spec = default_spec("bergman_det").unwrap();
    run_experiment(&spec).unwrap()
}

#[test]
fn json_round_trips_through_serde() {
    let report = sample_report();
    let parsed: Report = serde_json::from_str(&report.to_json()).unwrap();
    assert_eq!(parsed, report);
}

#[test]
fn canonical_json_is_reproducible() {
    let spec = default_spec("bergman_det").unwrap();
    let a = run_experiment(&spec).unwrap().canonical().to_json();
    let b = run_experiment(&spec).unwrap().canonical().to_json();
    assert_eq!(a, b);
}

#[test]
fn canonical_zeroes_runtime_but_nothing_else() {
    let report = sample_report();
    let canon = report.canonical();
    assert_eq!(canon.runtime_ms, 0);
    assert_eq!(canon.name, report.name);
    assert_eq!(canon.rel_err, report.rel_err);
    assert_eq!(canon.seed, report.seed);
}

#[test]
fn csv_rows_match_header_arity() {
    let report = sample_report();
    let header_fields = CSV_HEADER.split(',').count();
    let row_fields = report.to_csv_row().split(',').count();
    assert_eq!(header_fields, row_fields);
    assert!(CSV_HEADER.starts_with("name,r,b,"));
}

#[test]
fn report_files_are_written_in_both_formats() {
    let reports = vec![sample_report()];
    let dir = std::env::temp_dir();
    let json_path = dir.join(format!("bsdlab_report_{}.json", std::process::id()));
    let csv_path = dir.join(format!("bsdlab_report_{}.csv", std::process::id()));

    write_reports(&reports, &json_path, ReportFormat::Json).unwrap();
    write_reports(&reports, &csv_path, ReportFormat::Csv).unwrap();

    let json_text = std::fs::read_to_string(&json_path).unwrap();
    let value: serde_json::Value = serde_json::from_str(&json_text).unwrap();
    assert_eq!(value.as_array().map(|a| a.len()), Some(1));
    assert_eq!(json_text, reports_to_json(&reports));

    let csv_text = std::fs::read_to_string(&csv_path).unwrap();
    let mut lines = csv_text.lines();
    assert_eq!(lines.next(), Some(CSV_HEADER));
    assert_eq!(lines.next(), Some(reports[0].to_csv_row().as_str()));
    assert_eq!(csv_text, reports_to_csv(&reports));

    std::fs::remove_file(&json_path).unwrap();
    std::fs::remove_file(&csv_path).unwrap();
}

#[test]
fn json_carries_the_version_and_provenance_vocabulary() {
    let report = sample_report();
    assert_eq!(report.version, env!("CARGO_PKG_VERSION"));
    assert!(["closed_form", "oracle", "exact"].contains(&report.provenance.as_str()));
}

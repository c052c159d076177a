//! Experiment registry, reproducible runners, and machine-readable reports.
//!
//! Every numerical claim the library certifies is packaged as a named
//! experiment: a default parameter set, a runner, and a pass criterion with
//! pinned tolerances. Runners are deterministic functions of the
//! (spec, seed) pair, including multi-shard Monte Carlo, so two runs of the
//! same experiment produce bit-identical canonical reports.
//!
//! Reports serialize to JSON (sorted keys, floats with 17 significant
//! digits) and to a fixed-schema CSV. The canonical byte form zeroes the
//! wall-clock field so that determinism checks compare only the numerics.

mod experiments;

pub use experiments::{default_spec, registry, ExperimentDef};

use std::fmt::Write as _;
use std::sync::Once;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Full parameter set of one experiment run.
#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentSpec {
    /// Registered experiment name.
    pub name: String,
    /// Rank of the domain.
    pub r: usize,
    /// Column excess of the domain.
    pub b: usize,
    /// Spectral parameter s (for the radial experiment: the exponent σ of
    /// the profile h^σ).
    pub s: Complex64,
    /// Weight ν.
    pub nu: f64,
    /// Conical degree δ.
    pub delta: usize,
    /// Finite-difference step.
    pub step: f64,
    /// Finite-difference order (2 or 4).
    pub order: u32,
    /// Monte Carlo sample count.
    pub samples: usize,
    /// Quadrature node count, or series truncation weight for expansion
    /// experiments.
    pub nodes: usize,
    /// Pass tolerance in the experiment's own error metric.
    pub tol: f64,
    /// Seed for all randomness in the run.
    pub seed: u64,
}

/// Outcome of one experiment run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    /// Experiment name.
    pub name: String,
    /// Domain rank.
    pub r: usize,
    /// Domain column excess.
    pub b: usize,
    /// Re s.
    pub s_re: f64,
    /// Im s.
    pub s_im: f64,
    /// Weight ν.
    pub nu: f64,
    /// Conical degree δ.
    pub delta: usize,
    /// Re of the headline computed value.
    pub computed_re: f64,
    /// Im of the headline computed value.
    pub computed_im: f64,
    /// Re of the expected value.
    pub expected_re: f64,
    /// Im of the expected value.
    pub expected_im: f64,
    /// Absolute error of the experiment's pass metric.
    pub abs_err: f64,
    /// Relative error of the pass metric.
    pub rel_err: f64,
    /// Standard error for stochastic experiments, 0 otherwise.
    pub stderr: f64,
    /// Whether the pass criterion held.
    pub pass: bool,
    /// How the expected value was obtained: "closed_form", "oracle", or
    /// "exact".
    pub provenance: String,
    /// Wall-clock runtime in milliseconds (zeroed in canonical bytes).
    pub runtime_ms: u64,
    /// Seed the run used.
    pub seed: u64,
    /// Finite-difference step echo.
    pub step: f64,
    /// Finite-difference order echo.
    pub order: u32,
    /// Sample count echo.
    pub samples: usize,
    /// Node/truncation echo.
    pub nodes: usize,
    /// Tolerance echo.
    pub tol: f64,
    /// Library version.
    pub version: String,
}

/// Fixed CSV schema for report tables.
pub const CSV_HEADER: &str = "name,r,b,s_re,s_im,nu,delta,computed_re,computed_im,expected_re,expected_im,abs_err,rel_err,stderr,pass,runtime_ms,seed";

fn fmt_f64(x: f64) -> String {
    if x.is_nan() {
        return "\"NaN\"".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "\"inf\"".into() } else { "\"-inf\"".into() };
    }
    // Precision-free {:e} emits the shortest digits that parse back to the
    // same f64, which keeps reports byte-deterministic and lossless.
    format!("{x:e}")
}

fn escape_json(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            ch if (ch as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", ch as u32);
            }
            ch => out.push(ch),
        }
    }
    out
}

impl Report {
    /// Copy with the wall-clock field zeroed; the form compared by
    /// determinism checks.
    pub fn canonical(&self) -> Report {
        let mut c = self.clone();
        c.runtime_ms = 0;
        c
    }

    /// Serialize to a single JSON object with alphabetically sorted keys and
    /// every float printed with 17 significant digits. Byte-stable for equal
    /// field values.
    pub fn to_json(&self) -> String {
        let mut s = String::with_capacity(640);
        s.push('{');
        let _ = write!(s, "\"abs_err\":{}", fmt_f64(self.abs_err));
        let _ = write!(s, ",\"b\":{}", self.b);
        let _ = write!(s, ",\"computed_im\":{}", fmt_f64(self.computed_im));
        let _ = write!(s, ",\"computed_re\":{}", fmt_f64(self.computed_re));
        let _ = write!(s, ",\"delta\":{}", self.delta);
        let _ = write!(s, ",\"expected_im\":{}", fmt_f64(self.expected_im));
        let _ = write!(s, ",\"expected_re\":{}", fmt_f64(self.expected_re));
        let _ = write!(s, ",\"name\":\"{}\"", escape_json(&self.name));
        let _ = write!(s, ",\"nodes\":{}", self.nodes);
        let _ = write!(s, ",\"nu\":{}", fmt_f64(self.nu));
        let _ = write!(s, ",\"order\":{}", self.order);
        let _ = write!(s, ",\"pass\":{}", self.pass);
        let _ = write!(s, ",\"provenance\":\"{}\"", escape_json(&self.provenance));
        let _ = write!(s, ",\"r\":{}", self.r);
        let _ = write!(s, ",\"rel_err\":{}", fmt_f64(self.rel_err));
        let _ = write!(s, ",\"runtime_ms\":{}", self.runtime_ms);
        let _ = write!(s, ",\"s_im\":{}", fmt_f64(self.s_im));
        let _ = write!(s, ",\"s_re\":{}", fmt_f64(self.s_re));
        let _ = write!(s, ",\"samples\":{}", self.samples);
        let _ = write!(s, ",\"seed\":{}", self.seed);
        let _ = write!(s, ",\"stderr\":{}", fmt_f64(self.stderr));
        let _ = write!(s, ",\"step\":{}", fmt_f64(self.step));
        let _ = write!(s, ",\"tol\":{}", fmt_f64(self.tol));
        let _ = write!(s, ",\"version\":\"{}\"", escape_json(&self.version));
        s.push('}');
        s
    }

    /// One CSV row matching [`CSV_HEADER`].
    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.name,
            self.r,
            self.b,
            fmt_csv(self.s_re),
            fmt_csv(self.s_im),
            fmt_csv(self.nu),
            self.delta,
            fmt_csv(self.computed_re),
            fmt_csv(self.computed_im),
            fmt_csv(self.expected_re),
            fmt_csv(self.expected_im),
            fmt_csv(self.abs_err),
            fmt_csv(self.rel_err),
            fmt_csv(self.stderr),
            self.pass,
            self.runtime_ms,
            self.seed
        )
    }

    /// One-line human summary.
    pub fn summary_line(&self) -> String {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        format!(
            "{verdict}  {name:<20} abs_err {abs:.3e}  rel_err {rel:.3e}{stderr}  [{ms} ms]",
            name = self.name,
            abs = self.abs_err,
            rel = self.rel_err,
            stderr = if self.stderr > 0.0 {
                format!("  stderr {:.3e}", self.stderr)
            } else {
                String::new()
            },
            ms = self.runtime_ms,
        )
    }
}

fn fmt_csv(x: f64) -> String {
    if x.is_nan() {
        "NaN".into()
    } else if x.is_infinite() {
        if x > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{x:.16e}")
    }
}

/// Serialize reports to a JSON array (one object per line).
pub fn reports_to_json(reports: &[Report]) -> String {
    let mut s = String::from("[\n");
    for (i, rep) in reports.iter().enumerate() {
        s.push_str(&rep.to_json());
        if i + 1 < reports.len() {
            s.push(',');
        }
        s.push('\n');
    }
    s.push(']');
    s.push('\n');
    s
}

/// Serialize reports to CSV with the pinned header.
pub fn reports_to_csv(reports: &[Report]) -> String {
    let mut s = String::from(CSV_HEADER);
    s.push('\n');
    for rep in reports {
        s.push_str(&rep.to_csv_row());
        s.push('\n');
    }
    s
}

/// Write reports to `path` in the requested format.
pub fn write_reports(reports: &[Report], path: &std::path::Path, format: ReportFormat) -> Result<()> {
    let body = match format {
        ReportFormat::Json => reports_to_json(reports),
        ReportFormat::Csv => reports_to_csv(reports),
    };
    std::fs::write(path, body)?;
    Ok(())
}

/// Report serialization format.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    /// JSON array with sorted keys.
    Json,
    /// CSV with the pinned header.
    Csv,
}

static THREAD_INIT: Once = Once::new();

/// Honor the BSDLAB_THREADS cap by configuring the global worker pool once.
/// A missing or malformed value leaves the default pool untouched. Results
/// never depend on the thread count, only throughput does.
pub fn init_threads() {
    THREAD_INIT.call_once(|| {
        if let Ok(v) = std::env::var("BSDLAB_THREADS") {
            if let Ok(n) = v.trim().parse::<usize>() {
                if n >= 1 {
                    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
                }
            }
        }
    });
}

/// Names of all registered experiments in stable registry order.
pub fn experiment_names() -> Vec<&'static str> {
    registry().iter().map(|d| d.name).collect()
}

/// Look up an experiment definition.
pub fn find_experiment(name: &str) -> Result<&'static ExperimentDef> {
    registry()
        .iter()
        .find(|d| d.name == name)
        .ok_or_else(|| Error::UnknownExperiment(name.to_string()))
}

/// Run one experiment from a full spec.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<Report> {
    init_threads();
    let def = find_experiment(&spec.name)?;
    let start = std::time::Instant::now();
    let outcome = (def.runner)(spec)?;
    let runtime_ms = start.elapsed().as_millis() as u64;
    Ok(Report {
        name: spec.name.clone(),
        r: spec.r,
        b: spec.b,
        s_re: spec.s.re,
        s_im: spec.s.im,
        nu: spec.nu,
        delta: spec.delta,
        computed_re: outcome.computed.re,
        computed_im: outcome.computed.im,
        expected_re: outcome.expected.re,
        expected_im: outcome.expected.im,
        abs_err: outcome.abs_err,
        rel_err: outcome.rel_err,
        stderr: outcome.stderr,
        pass: outcome.pass,
        provenance: outcome.provenance.to_string(),
        runtime_ms,
        seed: spec.seed,
        step: spec.step,
        order: spec.order,
        samples: spec.samples,
        nodes: spec.nodes,
        tol: spec.tol,
        version: env!("CARGO_PKG_VERSION").to_string(),
    })
}

/// Run every registered experiment with its default spec, in registry order.
pub fn run_all() -> Result<Vec<Report>> {
    registry()
        .iter()
        .map(|def| run_experiment(&default_spec(def.name).expect("registry is closed")))
        .collect()
}

/// What a runner hands back; the harness wraps it into a [`Report`].
#[derive(Clone, Debug)]
pub struct Outcome {
    /// Headline computed value.
    pub computed: Complex64,
    /// Expected value (0 for pure residual experiments).
    pub expected: Complex64,
    /// Absolute error of the pass metric.
    pub abs_err: f64,
    /// Relative error of the pass metric.
    pub rel_err: f64,
    /// Standard error when stochastic, else 0.
    pub stderr: f64,
    /// Verdict.
    pub pass: bool,
    /// "closed_form", "oracle", or "exact".
    pub provenance: &'static str,
}

/// Parameter axis a convergence study can sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepParam {
    /// Monte Carlo sample count; the error metric is the reported stderr.
    Samples,
    /// Finite-difference step; the error metric is the reported rel_err.
    Step,
}

impl SweepParam {
    /// CLI token for the axis.
    pub fn token(self) -> &'static str {
        match self {
            SweepParam::Samples => "samples",
            SweepParam::Step => "step",
        }
    }
}

/// Outcome of a convergence study across a parameter schedule.
#[derive(Clone, Debug)]
pub struct SweepResult {
    /// One report per schedule point, in schedule order.
    pub reports: Vec<Report>,
    /// Fitted log–log slope of the error metric against the parameter;
    /// absent for single-point schedules.
    pub slope: Option<f64>,
}

/// Run `spec` across a schedule of parameter values and fit the log–log
/// slope of the error metric.
pub fn convergence_study(
    spec: &ExperimentSpec,
    param: SweepParam,
    values: &[f64],
) -> Result<SweepResult> {
    let def = find_experiment(&spec.name)?;
    let supported = match param {
        SweepParam::Samples => def.sweep_samples,
        SweepParam::Step => def.sweep_step,
    };
    if !supported {
        return Err(Error::Precondition(format!(
            "experiment `{}` does not support sweeping {}",
            spec.name,
            param.token()
        )));
    }
    if values.is_empty() {
        return Err(Error::InvalidParam("sweep schedule is empty".into()));
    }
    let mut reports = Vec::with_capacity(values.len());
    for &v in values {
        let mut point = spec.clone();
        match param {
            SweepParam::Samples => {
                if v < 1.0 || v.fract() != 0.0 {
                    return Err(Error::InvalidParam(format!(
                        "sample counts must be positive integers, got {v}"
                    )));
                }
                point.samples = v as usize;
            }
            SweepParam::Step => {
                point.step = v;
            }
        }
        reports.push(run_experiment(&point)?);
    }
    let slope = if values.len() >= 2 {
        let pairs: Vec<(f64, f64)> = values
            .iter()
            .zip(reports.iter())
            .filter_map(|(&v, rep)| {
                let err = match param {
                    SweepParam::Samples => rep.stderr,
                    SweepParam::Step => rep.rel_err,
                };
                (err > 0.0 && v > 0.0).then(|| (v.ln(), err.ln()))
            })
            .collect();
        fit_slope(&pairs)
    } else {
        None
    };
    Ok(SweepResult { reports, slope })
}

fn fit_slope(pairs: &[(f64, f64)]) -> Option<f64> {
    if pairs.len() < 2 {
        return None;
    }
    let n = pairs.len() as f64;
    let sx: f64 = pairs.iter().map(|p| p.0).sum();
    let sy: f64 = pairs.iter().map(|p| p.1).sum();
    let sxx: f64 = pairs.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = pairs.iter().map(|p| p.0 * p.1).sum();
    let denom = n * sxx - sx * sx;
    (denom.abs() > 1e-12).then(|| (n * sxy - sx * sy) / denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::c;

    fn sample_report() -> Report {
        Report {
            name: "thm61_hua_eigen".into(),
            r: 2,
            b: 0,
            s_re: 0.7,
            s_im: 0.0,
            nu: 4.0,
            delta: 0,
            computed_re: 11.2,
            computed_im: -0.5,
            expected_re: 11.2,
            expected_im: -0.5,
            abs_err: 3.2e-8,
            rel_err: 2.1e-9,
            stderr: 0.0,
            pass: true,
            provenance: "closed_form".into(),
            runtime_ms: 123,
            seed: 7,
            step: 1e-3,
            order: 4,
            samples: 0,
            nodes: 0,
            tol: 1e-5,
            version: "0.1.0".into(),
        }
    }

    #[test]
    fn json_keys_are_sorted_and_floats_round_trip() {
        let rep = sample_report();
        let json = rep.to_json();
        let keys: Vec<&str> = json
            .split('"')
            .enumerate()
            .filter_map(|(i, s)| (i % 2 == 1).then_some(s))
            .filter(|s| !matches!(*s, "thm61_hua_eigen" | "closed_form" | "0.1.0"))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort_unstable();
        assert_eq!(keys, sorted, "JSON keys must be alphabetical");
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rep);
    }

    #[test]
    fn canonical_form_zeroes_only_the_clock() {
        let rep = sample_report();
        let mut twin = rep.clone();
        twin.runtime_ms = 9999;
        assert_ne!(rep.to_json(), twin.to_json());
        assert_eq!(rep.canonical().to_json(), twin.canonical().to_json());
        assert_eq!(rep.canonical().runtime_ms, 0);
    }

    #[test]
    fn csv_row_matches_header_arity() {
        let rep = sample_report();
        let cols = CSV_HEADER.split(',').count();
        assert_eq!(rep.to_csv_row().split(',').count(), cols);
        let table = reports_to_csv(&[rep.clone(), rep]);
        assert!(table.starts_with(CSV_HEADER));
        assert_eq!(table.lines().count(), 3);
    }

    #[test]
    fn unknown_experiment_is_rejected() {
        let err = find_experiment("no_such_thing").unwrap_err();
        assert!(matches!(err, Error::UnknownExperiment(_)));
        assert!(err.to_string().contains("unregistered experiment"));
    }

    #[test]
    fn registry_is_stable_and_labeled() {
        let names = experiment_names();
        assert!(names.len() >= 8);
        assert!(names.contains(&"thm61_hua_eigen"));
        assert!(names.contains(&"prop83_disk"));
        let mut unique = names.clone();
        unique.sort_unstable();
        unique.dedup();
        assert_eq!(unique.len(), names.len());
        for def in registry() {
            assert!(
                def.statement.contains("Thm")
                    || def.statement.contains("Prop")
                    || def.statement.contains("Lemma")
                    || def.statement.contains("Remark")
                    || def.statement.contains("(5.6)"),
                "statement of {} lacks a label: {}",
                def.name,
                def.statement
            );
            let spec = default_spec(def.name).unwrap();
            assert_eq!(spec.name, def.name);
        }
    }

    #[test]
    fn slope_fit_recovers_a_power_law() {
        let pairs: Vec<(f64, f64)> = [1e3, 1e4, 1e5]
            .iter()
            .map(|&n: &f64| (n.ln(), (3.0 / n.sqrt()).ln()))
            .collect();
        let slope = fit_slope(&pairs).unwrap();
        assert!((slope + 0.5).abs() < 1e-12);
    }

    #[test]
    fn complex_fields_are_echoed() {
        let mut spec = default_spec("fk_dual_cauchy").unwrap();
        spec.s = c(0.3, -0.2);
        assert_eq!(spec.s.im, -0.2);
    }
}

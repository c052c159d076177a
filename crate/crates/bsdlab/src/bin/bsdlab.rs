//! Command-line driver for the experiment registry.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use bsdlab::harness::{
    convergence_study, default_spec, registry, run_all, run_experiment, write_reports,
    ReportFormat, SweepParam,
};

#[derive(Parser)]
#[command(
    name = "bsdlab",
    version,
    about = "Numerical experiments on Hua operators and Poisson transforms for type I domains"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParamArg {
    Samples,
    Step,
}

#[derive(Subcommand)]
enum Cmd {
    /// List registered experiments with the statements they verify.
    List,
    /// Run one experiment, overriding any of its default parameters.
    Run {
        /// Registered experiment name (see `bsdlab list`).
        name: String,
        /// Rank of the domain I_{r,r+b}.
        #[arg(long)]
        r: Option<usize>,
        /// Non-tube offset b of the domain I_{r,r+b}.
        #[arg(long)]
        b: Option<usize>,
        /// Spectral parameter s as RE or RE,IM.
        #[arg(long, value_parser = parse_complex)]
        s: Option<Complex64>,
        /// Twist parameter ν.
        #[arg(long)]
        nu: Option<f64>,
        /// Conical weight δ.
        #[arg(long)]
        delta: Option<usize>,
        /// Monte Carlo sample count.
        #[arg(long)]
        samples: Option<usize>,
        /// Finite-difference step.
        #[arg(long)]
        step: Option<f64>,
        /// Finite-difference order.
        #[arg(long, value_parser = ["2", "4"])]
        order: Option<String>,
        /// Quadrature node count (also the truncation weight where noted).
        #[arg(long)]
        nodes: Option<usize>,
        /// Pass tolerance.
        #[arg(long)]
        tol: Option<f64>,
        /// RNG seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Write the report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Report format for --out.
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },
    /// Rerun one experiment over a grid of a numeric parameter and fit the
    /// convergence slope on a log-log scale.
    Sweep {
        /// Registered experiment name (see `bsdlab list`).
        name: String,
        /// Which parameter to sweep.
        #[arg(long, value_enum)]
        param: ParamArg,
        /// Grid values, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        values: Vec<f64>,
    },
    /// Run every registered experiment with its default spec.
    All {
        /// Write reports.json and reports.csv into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Print one line to stdout, tolerating a closed pipe.
///
/// `println!` panics when the reader goes away (`bsdlab list | head`); exit
/// the way a SIGPIPE-killed process would instead (128 + 13).
fn emit(line: impl std::fmt::Display) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if writeln!(out, "{line}").is_err() {
        std::process::exit(141);
    }
}

fn parse_complex(text: &str) -> Result<Complex64, String> {
    let mut it = text.splitn(2, ',');
    let re: f64 = it
        .next()
        .unwrap_or_default()
        .trim()
        .parse()
        .map_err(|e| format!("bad real part: {e}"))?;
    let im: f64 = match it.next() {
        Some(part) => part
            .trim()
            .parse()
            .map_err(|e| format!("bad imaginary part: {e}"))?,
        None => 0.0,
    };
    Ok(Complex64::new(re, im))
}

fn main() -> ExitCode {
    match Cli::parse().cmd {
        Cmd::List => {
            for def in registry() {
                emit(format_args!("{:<18} {}", def.name, def.statement));
            }
            ExitCode::SUCCESS
        }
        Cmd::Run {
            name,
            r,
            b,
            s,
            nu,
            delta,
            samples,
            step,
            order,
            nodes,
            tol,
            seed,
            out,
            format,
        } => {
            let mut spec = match default_spec(&name) {
                Ok(spec) => spec,
                Err(e) => return fail(e),
            };
            if let Some(v) = r {
                spec.r = v;
            }
            if let Some(v) = b {
                spec.b = v;
            }
            if let Some(v) = s {
                spec.s = v;
            }
            if let Some(v) = nu {
                spec.nu = v;
            }
            if let Some(v) = delta {
                spec.delta = v;
            }
            if let Some(v) = samples {
                spec.samples = v;
            }
            if let Some(v) = step {
                spec.step = v;
            }
            if let Some(v) = order {
                spec.order = v.parse().expect("validated by clap");
            }
            if let Some(v) = nodes {
                spec.nodes = v;
            }
            if let Some(v) = tol {
                spec.tol = v;
            }
            if let Some(v) = seed {
                spec.seed = v;
            }
            let report = match run_experiment(&spec) {
                Ok(report) => report,
                Err(e) => return fail(e),
            };
            emit(report.summary_line());
            if let Some(path) = out {
                let fmt = match format {
                    FormatArg::Json => ReportFormat::Json,
                    FormatArg::Csv => ReportFormat::Csv,
                };
                if let Err(e) = write_reports(std::slice::from_ref(&report), &path, fmt) {
                    return fail(e);
                }
            }
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Cmd::Sweep {
            name,
            param,
            values,
        } => {
            let spec = match default_spec(&name) {
                Ok(spec) => spec,
                Err(e) => return fail(e),
            };
            let param = match param {
                ParamArg::Samples => SweepParam::Samples,
                ParamArg::Step => SweepParam::Step,
            };
            let study = match convergence_study(&spec, param, &values) {
                Ok(study) => study,
                Err(e) => return fail(e),
            };
            for report in &study.reports {
                emit(report.summary_line());
            }
            match study.slope {
                Some(slope) if slope.is_finite() => {
                    emit(format_args!("slope({}) \u{2248} {slope:.3}", param.token()));
                    ExitCode::SUCCESS
                }
                _ => {
                    eprintln!("error: sweep produced no usable slope");
                    ExitCode::FAILURE
                }
            }
        }
        Cmd::All { out } => {
            let reports = match run_all() {
                Ok(reports) => reports,
                Err(e) => return fail(e),
            };
            for report in &reports {
                emit(report.summary_line());
            }
            let all_pass = reports.iter().all(|r| r.pass);
            if let Some(dir) = out {
                if let Err(e) = std::fs::create_dir_all(&dir) {
                    return fail(bsdlab::Error::Io(e));
                }
                if let Err(e) =
                    write_reports(&reports, &dir.join("reports.json"), ReportFormat::Json)
                {
                    return fail(e);
                }
                if let Err(e) = write_reports(&reports, &dir.join("reports.csv"), ReportFormat::Csv)
                {
                    return fail(e);
                }
            }
            let passed = reports.iter().filter(|r| r.pass).count();
            emit(format_args!("{passed}/{} experiments pass", reports.len()));
            if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
    }
}

fn fail(e: bsdlab::Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::FAILURE
}

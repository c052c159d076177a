//! Convergence studies through the harness API: Monte Carlo stderr decays
//! like N^{−1/2} and finite-difference relative error like h^order, with the
//! slopes fitted on a log-log scale.

use bsdlab::harness::{convergence_study, default_spec, SweepParam};

fn main() -> bsdlab::Result<()> {
    let spec = default_spec("prop83_mc")?;
    let study = convergence_study(&spec, SweepParam::Samples, &[1e3, 1e4, 1e5])?;
    println!("prop83_mc over samples \u{2208} {{1e3, 1e4, 1e5}}:");
    for report in &study.reports {
        println!(
            "  N = {:>7}: stderr = {:.3e}, abs_err = {:.3e}",
            report.samples, report.stderr, report.abs_err
        );
    }
    println!("  fitted slope of stderr: {:+.3} (theory: -0.5)\n", study.slope.unwrap());

    let mut spec = default_spec("thm61_hua_eigen")?;
    spec.order = 2;
    let study = convergence_study(&spec, SweepParam::Step, &[1e-2, 2e-2, 4e-2])?;
    println!("thm61_hua_eigen at FD order 2 over step \u{2208} {{0.01, 0.02, 0.04}}:");
    for report in &study.reports {
        println!("  h = {:>5}: rel_err = {:.3e}", report.step, report.rel_err);
    }
    println!("  fitted slope of rel_err: {:+.3} (theory: +2)\n", study.slope.unwrap());

    let mut spec = default_spec("thm61_hua_eigen")?;
    spec.order = 4;
    let study = convergence_study(&spec, SweepParam::Step, &[5e-3, 1e-2, 2e-2])?;
    println!("thm61_hua_eigen at FD order 4 over step \u{2208} {{0.005, 0.01, 0.02}}:");
    for report in &study.reports {
        println!("  h = {:>5}: rel_err = {:.3e}", report.step, report.rel_err);
    }
    println!("  fitted slope of rel_err: {:+.3} (theory: +4)", study.slope.unwrap());
    Ok(())
}

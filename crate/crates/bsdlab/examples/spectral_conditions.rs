//! Spectral bookkeeping around the Poisson transform: the exclusion set for
//! s (membership of 4n(1−s)/r in two arithmetic families), the Γ-product
//! denominator e_ν(λ_s) with its pole detection, and the discrete series
//! parameter tuples for integral ν.

use bsdlab::domain::DomainParams;
use bsdlab::fk::discrete_series_set;
use bsdlab::kernels::{c_denominator_e, shimeno_condition, SpectralParams};
use bsdlab::linalg::cr;

fn main() -> bsdlab::Result<()> {
    let disk = DomainParams::new(1, 0).unwrap();
    let i22 = DomainParams::new(2, 0).unwrap();

    println!("condition on s (x = 4n(1\u{2212}s)/r must avoid two lattices):");
    for (dom, label, s, nu) in [
        (&i22, "I_{2,2}", cr(0.37), 4.0),
        (&disk, "disk", cr(2.25), 4.0),
        (&disk, "disk", cr(4.0), 4.0),
        (&disk, "disk", cr(2.5), 4.0),
    ] {
        let chk = shimeno_condition(s, nu, dom);
        println!(
            "  {label:>7}, s = {s}, \u{3bd} = {nu}: ok = {:<5} x = {:>6}  \u{39b}\u{2081} hit: {:<12} \u{39b}\u{2082} hit: {:<12} boundary ambiguity: {}",
            chk.ok,
            chk.x,
            format!("{:?}", chk.lambda1_hit),
            format!("{:?}", chk.lambda2_hit),
            chk.boundary_ambiguity
        );
    }

    println!("\n\u{393}-product denominator e_\u{3bd}(\u{3bb}_s) and its poles:");
    for (s, nu) in [(cr(0.7), 4.0), (cr(2.0), 2.0), (cr(3.0), 3.0)] {
        let sp = SpectralParams::new(s, nu, 0, &disk);
        let e = c_denominator_e(&sp);
        if e.has_pole {
            println!(
                "  disk, s = {s}, \u{3bd} = {nu}: pole (\u{393} arguments at non-positive integers: {:?})",
                e.pole_arguments
            );
        } else {
            println!("  disk, s = {s}, \u{3bd} = {nu}: e_\u{3bd}(\u{3bb}_s) = {:.6}", e.value);
        }
    }

    println!("\ndiscrete-series tuples (\u{3bd} a multiple of the genus, \u{3bd} > p\u{2212}1):");
    for (dom, label, nu) in [(&disk, "disk", 6.0), (&i22, "I_{2,2}", 8.0)] {
        let ds = discrete_series_set(nu, dom)?;
        println!(
            "  {label}, \u{3bd} = {nu}: \u{2113} = {}, {} tuples: {}",
            ds.ell,
            ds.tuples.len(),
            ds.tuples
                .iter()
                .map(|t| format!("{t:?}"))
                .collect::<Vec<_>>()
                .join(" ")
        );
    }
    Ok(())
}

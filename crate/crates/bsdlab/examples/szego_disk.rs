//! Szegő-type Poisson transform of boundary monomials on the unit disk:
//! with σ = 1 + δ − ν, the transform of ū^δ has the closed form
//! ((σ)_δ/(1)_δ) · z̄^δ/(1−|z|²)^δ. Circle quadrature is spectrally accurate,
//! so a few hundred nodes reach machine precision.

use bsdlab::domain::DomainParams;
use bsdlab::kernels::{
    conical_transform_target, poisson_transform, SpectralParams, TransformMethod,
};
use bsdlab::linalg::{c, CMatrix};

fn main() -> bsdlab::Result<()> {
    let dom = DomainParams::new(1, 0).unwrap();
    let nu = 6.0;
    let method = TransformMethod::CircleQuadrature { nodes: 512 };
    let points = [c(0.3, 0.0), c(0.0, 0.5), c(0.2, -0.4)];

    for delta in 0..=2usize {
        let sp = SpectralParams::szego(nu, delta, &dom);
        println!(
            "\u{3b4} = {delta}: \u{3c3} = {} (s = {}), transform of \u{16b}^{delta}",
            sp.sigma(),
            sp.s()
        );
        for zv in points {
            let z = CMatrix::from_row_slice(1, 1, &[zv]);
            let est = poisson_transform(
                |u| u[(0, 0)].conj().powu(delta as u32),
                &sp,
                &z,
                &method,
            )?;
            let target = conical_transform_target(&sp, &z)?;
            println!(
                "  z = {zv:>10}: quadrature {est:>26} closed form {target:>26} |diff| {:.2e}",
                (est.value - target).norm(),
                est = format!("{:.12}", est.value),
                target = format!("{target:.12}"),
            );
        }
        println!();
    }
    println!("\u{3b4} = 1 reproduces \u{2212}4z\u{304}/(1\u{2212}|z|\u{b2}) and \u{3b4} = 2 reproduces 3z\u{304}\u{b2}/(1\u{2212}|z|\u{b2})\u{b2},");
    println!("the rank-one instances of the conical-function transform identity.");
    Ok(())
}

//! Szegő-type Poisson transform of a conical function on I_{2,2} by sharded
//! Monte Carlo over the Shilov boundary: with σ = n/r + δ − ν the transform
//! of conj(Δ_δ(u)) equals ((σ)_δ/(n/r)_δ)·Δ_δ(q(z)), here with ratio 15.

use bsdlab::domain::{sample_interior, DomainParams};
use bsdlab::fk::{conical, gen_pochhammer, Signature};
use bsdlab::kernels::{
    conical_transform_target, poisson_transform, SpectralParams, TransformMethod,
};
use bsdlab::linalg::cr;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> bsdlab::Result<()> {
    let dom = DomainParams::new(2, 0).unwrap();
    let delta = 1usize;
    let nu = 8.0;
    let sp = SpectralParams::szego(nu, delta, &dom);
    let rect = Signature::rectangular(delta, dom.r());

    let ratio = gen_pochhammer(sp.sigma(), &rect) / gen_pochhammer(cr(dom.q() as f64), &rect);
    println!(
        "I_{{2,2}}, \u{3b4} = {delta}, \u{3bd} = {nu}: \u{3c3} = {}, Pochhammer ratio (\u{3c3})_\u{3b4}/(n/r)_\u{3b4} = {}",
        sp.sigma(),
        ratio.re
    );
    println!();

    let mut rng = ChaCha8Rng::seed_from_u64(83);
    for samples in [100_000usize, 1_000_000] {
        println!("N = {samples}:");
        for i in 0..2u64 {
            let z = sample_interior(&mut rng, 0.35, &dom);
            let method = TransformMethod::MonteCarlo {
                samples,
                shards: 64,
                seed: 1000 + i,
            };
            let est = poisson_transform(|u| conical(&rect, u).conj(), &sp, &z, &method)?;
            let target = conical_transform_target(&sp, &z)?;
            let err = (est.value - target).norm();
            println!(
                "  point #{i}: estimate {:>24} target {:>24} |err| {err:.3e} ({:.1}\u{3c3}, stderr {:.2e})",
                format!("{:.7}", est.value),
                format!("{target:.7}"),
                err / est.stderr,
                est.stderr,
            );
        }
    }
    println!();
    println!("errors shrink like N^{{-1/2}} and stay within a few stderr of zero;");
    println!("shard streams make every estimate bit-reproducible for a fixed seed.");
    Ok(())
}

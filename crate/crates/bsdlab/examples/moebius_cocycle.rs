//! Möbius action of SU(r, r+b) on I_{r,r+b}: pseudo-unitarity of sampled
//! group elements, the transformation law of h(z,w), and the Jacobian
//! cocycle j(z) = det(Cz + D).

use bsdlab::domain::{h_poly, sample_interior, DomainParams};
use bsdlab::group::{moebius_apply, sample_group_element};
use bsdlab::kernels::moebius_denominator_det;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> bsdlab::Result<()> {
    let dom = DomainParams::new(2, 1).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(23);

    let g = sample_group_element(&mut rng, 0.3, &dom);
    println!(
        "sampled g \u{2208} SU(2,3): pseudo-unitarity residual {:.3e}",
        g.pseudo_unitarity_residual()
    );

    let z = sample_interior(&mut rng, 0.5, &dom);
    let w = sample_interior(&mut rng, 0.6, &dom);
    let gz = moebius_apply(&g, &z)?;
    let gw = moebius_apply(&g, &w)?;

    // h(gz, gw) = h(z,w) / (j(z) conj(j(w))) with j(y) = det(Cy + D).
    let jz = moebius_denominator_det(&g, &z)?;
    let jw = moebius_denominator_det(&g, &w)?;
    let lhs = h_poly(&gz, &gw);
    let rhs = h_poly(&z, &w) / (jz * jw.conj());
    println!("h(gz,gw)                  = {lhs:.12}");
    println!("h(z,w)/(j(z) conj(j(w))) = {rhs:.12}");
    println!("transformation residual   : {:.3e}", (lhs - rhs).norm());

    // Composition is again in the group and acts compatibly.
    let g2 = sample_group_element(&mut rng, 0.2, &dom);
    let composed = g2.compose(&g);
    let via_composed = moebius_apply(&composed, &z)?;
    let via_steps = moebius_apply(&g2, &gz)?;
    println!(
        "action of g2\u{2218}g vs g2(g(z)) : {:.3e}",
        bsdlab::linalg::max_abs(&(via_composed - via_steps))
    );

    // Inverse undoes the action.
    let back = moebius_apply(&g.inverse(), &gz)?;
    println!(
        "g\u{207b}\u{b9}(g(z)) round trip       : {:.3e}",
        bsdlab::linalg::max_abs(&(back - z))
    );
    Ok(())
}

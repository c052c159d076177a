//! The shift identity for Fock–Fischer kernels on tube domains:
//! Δ(z)^δ conj(Δ(w))^δ K^m(z,w) = c(m,δ) K^{m+δ}(z,w), where c(m,δ) is a
//! ratio of hook products and equals the cell product Π_j ((a/2)(r−j)+1+m_j)_δ.

use bsdlab::domain::{sample_interior, DomainParams};
use bsdlab::fk::{c_constant_exact, conical, fock_kernel, signatures_up_to, Signature};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let dom = DomainParams::new(2, 0).unwrap();
    let r = dom.r();
    let mut rng = ChaCha8Rng::seed_from_u64(85);
    let z = sample_interior(&mut rng, 0.45, &dom);
    let w = sample_interior(&mut rng, 0.45, &dom);

    println!("I_{{2,2}}: \u{394}(z)^\u{3b4} conj(\u{394}(w))^\u{3b4} K^m = c(m,\u{3b4}) K^{{m+\u{3b4}}}\n");
    println!(
        "{:>8} {:>3} {:>10} {:>14} {:>14} {:>10}",
        "m", "\u{3b4}", "c(m,\u{3b4})", "lhs", "rhs", "rel err"
    );
    for m in signatures_up_to(4, r) {
        for delta in 1..=2usize {
            let c_exact = c_constant_exact(&m, delta, &dom);
            let shifted = m.plus_rectangular(delta, r);
            let rect = Signature::rectangular(delta, r);
            let lhs = conical(&rect, &z) * conical(&rect, &w).conj() * fock_kernel(&m, &z, &w);
            let rhs = bsdlab::linalg::cr(c_exact as f64) * fock_kernel(&shifted, &z, &w);
            let rel = (lhs - rhs).norm() / rhs.norm().max(1e-30);
            println!(
                "{:>8} {delta:>3} {c_exact:>10} {:>14.6e} {:>14.6e} {rel:>10.2e}",
                format!("{m}"),
                lhs.norm(),
                rhs.norm()
            );
        }
    }

    println!();
    let m = Signature::new(vec![3, 1]).unwrap();
    let shifted = m.plus_rectangular(2, r);
    println!(
        "hook products: hooks({m}) = {}, hooks({shifted}) = {}, ratio = {} = c({m},2)",
        m.hook_product_exact(),
        shifted.hook_product_exact(),
        shifted.hook_product_exact() / m.hook_product_exact()
    );
}

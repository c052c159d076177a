//! Tour of the Jordan-triple toolkit for I_{r,r+b}: structure constants,
//! the triple product, Bergman operators, and the determinant identity
//! det B(z,w̄) = h(z,w)^p that ties them together.

use bsdlab::domain::{
    bergman_action_matrix, h_poly, polar, sample_interior, triple_product, DomainParams,
};
use bsdlab::linalg::max_abs;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    for (r, b) in [(1usize, 0usize), (2, 0), (2, 1), (3, 2)] {
        let dom = DomainParams::new(r, b).unwrap();
        println!(
            "I_{{{},{}}}: rank r = {}, a = {}, n = {}, genus p = {}, q = n/r = {}, tube = {}",
            r,
            r + b,
            dom.r(),
            dom.a(),
            dom.n(),
            dom.p(),
            dom.q(),
            dom.is_tube()
        );
    }
    println!();

    let dom = DomainParams::new(2, 1).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let z = sample_interior(&mut rng, 0.5, &dom);
    let w = sample_interior(&mut rng, 0.6, &dom);
    let v = sample_interior(&mut rng, 0.7, &dom);

    // {z w̄ v} = z w* v + v w* z is symmetric in its outer arguments.
    let sym = max_abs(&(triple_product(&z, &w, &v) - triple_product(&v, &w, &z)));
    println!("triple product outer symmetry residual: {sym:.3e}");

    // det of the n×n action of B(z,w̄) against the genus power of h.
    let det = bergman_action_matrix(&dom, &z, &w).determinant();
    let h = h_poly(&z, &w);
    let target = h.powi(dom.p() as i32);
    println!("det B(z,w̄)      = {det:.12}");
    println!("h(z,w)^p        = {target:.12}");
    println!("identity residual: {:.3e}", (det - target).norm());

    // Polar data of an interior point: singular values strictly below 1.
    let decomp = polar(&z);
    println!(
        "singular values of z: {:?}",
        decomp
            .singular_values
            .iter()
            .map(|t| (t * 1e6).round() / 1e6)
            .collect::<Vec<_>>()
    );
    println!("h(z,z) = {:.6} (positive inside the domain)", h_poly(&z, &z).re);
}

//! Small shared layer over `nalgebra` for dense complex matrices.
//!
//! Everything in the crate works with dynamically sized matrices over
//! `Complex64` ([`CMatrix`]). This module adds the handful of utilities the
//! rest of the code keeps reaching for: matrix units, complex Gaussian
//! sampling (hand-rolled Box–Muller so the draw count per sample is fixed
//! and explicit), eigenvalues with a Schur fallback, a complex log-gamma,
//! and entrywise norms.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;

/// Dense dynamically-sized complex matrix, the working type of the crate.
pub type CMatrix = DMatrix<Complex64>;

/// Shorthand for a complex scalar.
#[inline]
pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Shorthand for a real scalar as a complex number.
#[inline]
pub fn cr(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// The matrix unit E_{ij} of the given shape: 1 in entry (i, j), 0 elsewhere.
pub fn unit_matrix(rows: usize, cols: usize, i: usize, j: usize) -> CMatrix {
    assert!(i < rows && j < cols, "matrix unit index out of range");
    let mut m = CMatrix::zeros(rows, cols);
    m[(i, j)] = cr(1.0);
    m
}

/// Largest entry modulus, max_{ij} |m_{ij}|.
pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().fold(0.0_f64, |acc, z| acc.max(z.norm()))
}

/// Largest singular value.
pub fn spectral_norm(m: &CMatrix) -> f64 {
    let sv = m.clone().svd(false, false).singular_values;
    sv.iter().fold(0.0_f64, |acc, &s| acc.max(s))
}

/// Singular values in non-increasing order.
pub fn singular_values(m: &CMatrix) -> Vec<f64> {
    let sv = m.clone().svd(false, false).singular_values;
    let mut v: Vec<f64> = sv.iter().copied().collect();
    v.sort_by(|a, b| b.partial_cmp(a).expect("NaN singular value"));
    v
}

/// Eigenvalues of a square complex matrix, with a Schur-form fallback for
/// inputs where the direct solver declines. Order is not specified.
pub fn eigenvalues(m: &CMatrix) -> Vec<Complex64> {
    assert!(m.is_square(), "eigenvalues of a non-square matrix");
    if let Some(v) = m.eigenvalues() {
        return v.iter().copied().collect();
    }
    let (_, t) = m.clone().schur().unpack();
    (0..t.nrows()).map(|i| t[(i, i)]).collect()
}

/// One standard normal draw via Box–Muller (two uniforms per call).
pub fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    let u1: f64 = 1.0 - rng.gen::<f64>();
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

/// A complex Gaussian entry with independent standard normal parts.
pub fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re = standard_normal(rng);
    let im = standard_normal(rng);
    Complex64::new(re, im)
}

/// Matrix with i.i.d. complex Gaussian entries (Ginibre ensemble up to scale).
pub fn gaussian_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> CMatrix {
    CMatrix::from_fn(rows, cols, |_, _| complex_gaussian(rng))
}

#[allow(clippy::excessive_precision)]
const LANCZOS_G0: f64 = 0.999_999_999_999_809_93;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEF: [f64; 8] = [
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Principal-branch-agnostic complex log-gamma (Lanczos, g = 7, 9 terms).
///
/// Accurate to roughly machine precision away from the poles at the
/// non-positive integers. The imaginary part may differ from the principal
/// branch by multiples of 2π, which is harmless for consumers that
/// exponentiate the result; callers that care about poles must detect them
/// before calling (the value near a pole is a large finite number, not NaN).
pub fn ln_gamma(z: Complex64) -> Complex64 {
    let pi = std::f64::consts::PI;
    if z.re < 0.5 {
        // Reflection: ln Γ(z) = ln π − ln sin(πz) − ln Γ(1 − z).
        return cr(pi.ln()) - (z * pi).sin().ln() - ln_gamma(cr(1.0) - z);
    }
    let zm = z - cr(1.0);
    let mut x = cr(LANCZOS_G0);
    for (i, &coef) in LANCZOS_COEF.iter().enumerate() {
        x += cr(coef) / (zm + cr((i + 1) as f64));
    }
    let t = zm + cr(7.5);
    cr(0.5 * (2.0 * pi).ln()) + (zm + cr(0.5)) * t.ln() - t + x.ln()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn matrix_unit_has_single_entry() {
        let e = unit_matrix(2, 3, 1, 2);
        assert_eq!(e[(1, 2)], cr(1.0));
        assert_eq!(e.iter().map(|z| z.norm()).sum::<f64>(), 1.0);
    }

    #[test]
    fn spectral_norm_of_diagonal_is_max_modulus() {
        let mut m = CMatrix::zeros(2, 2);
        m[(0, 0)] = c(0.0, 0.7);
        m[(1, 1)] = cr(-0.3);
        assert!((spectral_norm(&m) - 0.7).abs() < 1e-12);
        let sv = singular_values(&m);
        assert!((sv[0] - 0.7).abs() < 1e-12 && (sv[1] - 0.3).abs() < 1e-12);
    }

    #[test]
    fn eigenvalues_match_trace_and_determinant() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let m = gaussian_matrix(&mut rng, 3, 3);
        let eig = eigenvalues(&m);
        let sum: Complex64 = eig.iter().sum();
        let prod: Complex64 = eig.iter().product();
        assert!((sum - m.trace()).norm() < 1e-10);
        assert!((prod - m.determinant()).norm() < 1e-10);
    }

    #[test]
    fn gaussian_moments_are_sane() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let n = 20_000;
        let mut mean = Complex64::default();
        let mut var = 0.0;
        for _ in 0..n {
            let z = complex_gaussian(&mut rng);
            mean += z;
            var += z.norm_sqr();
        }
        mean /= cr(n as f64);
        var /= n as f64;
        assert!(mean.norm() < 0.05, "mean {mean}");
        assert!((var - 2.0).abs() < 0.1, "var {var}");
    }

    #[test]
    fn ln_gamma_matches_known_values() {
        // Γ(1) = Γ(2) = 1, Γ(5) = 24, Γ(1/2) = √π.
        assert!(ln_gamma(cr(1.0)).norm() < 1e-13);
        assert!(ln_gamma(cr(2.0)).norm() < 1e-13);
        assert!((ln_gamma(cr(5.0)).exp() - cr(24.0)).norm() < 1e-10);
        let sqrt_pi = std::f64::consts::PI.sqrt();
        assert!((ln_gamma(cr(0.5)).exp() - cr(sqrt_pi)).norm() < 1e-13);
    }

    #[test]
    fn ln_gamma_satisfies_recurrence() {
        // Γ(z+1) = z Γ(z), compared after exponentiation so branches cancel.
        for &z in &[c(0.3, 1.2), c(-1.4, 0.5), c(2.5, -3.0), c(-0.2, -0.1)] {
            let lhs = ln_gamma(z + cr(1.0)).exp();
            let rhs = z * ln_gamma(z).exp();
            assert!((lhs - rhs).norm() / rhs.norm() < 1e-11, "z = {z}");
        }
    }
}

//! Generalized Poisson kernels on the Shilov boundary, their transforms,
//! spectral parameters, and the Gamma-product denominator of the associated
//! c-function.
//!
//! The Shilov boundary S of I_{r,r+b} consists of the maximal tripotents,
//! realized here as r×(r+b) matrices u with u u* = I_r. For a spectral
//! parameter s ∈ ℂ and a weight ν the twisted Poisson kernel is
//!
//! ```text
//!   P_{s,ν}(z, u) = ( h(z,z) / |h(z,u)|² )^σ · h(z,u)^{−ν} ,   σ = s·n/r ,
//! ```
//!
//! a positive-base power times an integer power when ν ∈ ℤ (the only case
//! where h^{−ν} is single-valued; other ν use the principal branch). The
//! Poisson transform integrates P_{s,ν}(z, ·)·f over S against the
//! K-invariant probability measure, by sharded Monte Carlo in general and by
//! trapezoid quadrature on the circle when r = 1, b = 0.
//!
//! Under the Möbius action the kernel obeys the exact covariance law
//!
//! ```text
//!   P_{s,ν}(gz, gu) = P_{s,ν}(z, u) · j_g(z)^ν · conj(j_g(u))^ν · |j_g(u)|^{2σ}
//! ```
//!
//! with j_g(z) = det(Cz + D), verified numerically to machine precision
//! (see [`poisson_covariance_factor`]).
//!
//! In the regime σ = n/r + δ − ν the transform of the conjugate conical
//! function u ↦ conj(Δ_δ(u)) has the closed form
//! ((σ)_δ / (n/r)_δ) · Δ_δ(q(z)) with rectangular Pochhammer symbols and
//! q(z) the conjugate quasi-inverse; [`conical_transform_target`] evaluates
//! it. On the disk this reads ((σ)_δ/δ!) · z̄^δ/(1−|z|²)^δ.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::domain::{h_poly, is_interior, q_map, DomainParams};
use crate::error::{Error, Result};
use crate::fk::{conical, gen_pochhammer, Signature};
use crate::group::GroupElement;
use crate::linalg::{c, cr, gaussian_matrix, ln_gamma, max_abs, CMatrix};

/// Tolerance on the Gram residual ‖u u* − I_r‖_∞ for accepting a Shilov point.
pub const SHILOV_TOL: f64 = 1e-8;

/// Tolerance for recognizing an integer (branch decisions, regime checks,
/// pole detection).
pub const INTEGER_TOL: f64 = 1e-9;

/// Scalar spectral data (s, ν, δ) attached to a domain, with the derived
/// quantities σ = s·n/r, the half sum ρ, and the weight vector λ_s.
#[derive(Clone, Debug)]
pub struct SpectralParams {
    s: Complex64,
    nu: f64,
    delta: usize,
    dom: DomainParams,
}

impl SpectralParams {
    /// Bundle the raw parameters.
    pub fn new(s: Complex64, nu: f64, delta: usize, dom: &DomainParams) -> Self {
        SpectralParams {
            s,
            nu,
            delta,
            dom: *dom,
        }
    }

    /// Parameters in the conical-transform regime: σ = n/r + δ − ν exactly,
    /// i.e. s = (n/r + δ − ν)/(n/r).
    pub fn szego(nu: f64, delta: usize, dom: &DomainParams) -> Self {
        let q = dom.q() as f64;
        let s = cr((q + delta as f64 - nu) / q);
        SpectralParams {
            s,
            nu,
            delta,
            dom: *dom,
        }
    }

    /// The parameter s.
    pub fn s(&self) -> Complex64 {
        self.s
    }

    /// The weight ν.
    pub fn nu(&self) -> f64 {
        self.nu
    }

    /// The conical degree δ.
    pub fn delta(&self) -> usize {
        self.delta
    }

    /// The underlying domain.
    pub fn domain(&self) -> &DomainParams {
        &self.dom
    }

    /// σ = s · n/r.
    pub fn sigma(&self) -> Complex64 {
        self.s * cr(self.dom.q() as f64)
    }

    /// True when σ = n/r + δ − ν holds to within [`INTEGER_TOL`].
    pub fn is_szego_regime(&self) -> bool {
        let q = self.dom.q() as f64;
        let target = cr(q + self.delta as f64 - self.nu);
        (self.sigma() - target).norm() <= INTEGER_TOL
    }

    /// Half sum of positive roots: ρ_j = (b + 1 + a(j−1))/2, j = 1..r.
    pub fn rho(&self) -> Vec<f64> {
        let b = self.dom.b() as f64;
        let a = self.dom.a() as f64;
        (0..self.dom.r()).map(|j| (b + 1.0 + a * j as f64) / 2.0).collect()
    }

    /// Weight vector λ_s with coordinates
    /// λ_j = ρ_j + (2n(s−1) − νr)/(2r).
    pub fn lambda(&self) -> Vec<Complex64> {
        let n = self.dom.n() as f64;
        let r = self.dom.r() as f64;
        let shift = (cr(2.0 * n) * (self.s - cr(1.0)) - cr(self.nu * r)) / cr(2.0 * r);
        self.rho().iter().map(|&rho_j| cr(rho_j) + shift).collect()
    }
}

/// A point of the Shilov boundary: an r×(r+b) matrix with u u* = I_r.
#[derive(Clone, Debug)]
pub struct ShilovPoint {
    mat: CMatrix,
}

impl ShilovPoint {
    /// Validate and wrap a boundary point; rejects matrices whose Gram
    /// residual exceeds [`SHILOV_TOL`].
    pub fn new(mat: CMatrix) -> Result<Self> {
        if mat.nrows() > mat.ncols() {
            return Err(Error::InvalidParam(format!(
                "Shilov points are r×(r+b): got {}×{}",
                mat.nrows(),
                mat.ncols()
            )));
        }
        let residual = gram_residual(&mat);
        if residual > SHILOV_TOL {
            return Err(Error::NotShilov(residual));
        }
        Ok(ShilovPoint { mat })
    }

    /// Wrap without validation (for points constructed to be exact).
    pub fn new_unchecked(mat: CMatrix) -> Self {
        ShilovPoint { mat }
    }

    /// The underlying matrix.
    pub fn matrix(&self) -> &CMatrix {
        &self.mat
    }
}

/// Gram residual ‖u u* − I_r‖_∞ measuring the failure of u to be a maximal
/// tripotent.
pub fn gram_residual(u: &CMatrix) -> f64 {
    let r = u.nrows();
    let gram = u * u.adjoint();
    max_abs(&(gram - CMatrix::identity(r, r)))
}

/// Draw a Shilov point from the K-invariant probability measure: orthonormal
/// columns of an (r+b)×r complex Gaussian via the Gram factorization with
/// positive-diagonal triangular factor, conjugate-transposed into the
/// r×(r+b) convention.
pub fn sample_shilov<R: rand::Rng>(rng: &mut R, dom: &DomainParams) -> ShilovPoint {
    loop {
        let g = gaussian_matrix(rng, dom.cols(), dom.rows());
        let qr = g.qr();
        let rfac = qr.r();
        if (0..dom.rows()).any(|j| rfac[(j, j)].norm() < 1e-12) {
            continue;
        }
        let mut q = qr.q();
        for j in 0..dom.rows() {
            let phase = rfac[(j, j)] / cr(rfac[(j, j)].norm());
            for i in 0..dom.cols() {
                q[(i, j)] *= phase;
            }
        }
        return ShilovPoint {
            mat: q.adjoint(),
        };
    }
}

fn integer_power(base: Complex64, exponent: f64) -> Complex64 {
    let rounded = exponent.round();
    if (exponent - rounded).abs() <= INTEGER_TOL && rounded.abs() < i32::MAX as f64 {
        base.powi(rounded as i32)
    } else {
        base.powf(exponent)
    }
}

/// Twisted Poisson kernel P_{s,ν}(z, u) = (h(z,z)/|h(z,u)|²)^σ · h(z,u)^{−ν}.
///
/// The first factor has a positive real base, so its complex power is
/// unambiguous; the second is an exact integer power when ν ∈ ℤ and the
/// principal branch otherwise.
pub fn poisson_kernel(sp: &SpectralParams, z: &CMatrix, u: &ShilovPoint) -> Result<Complex64> {
    if !is_interior(z) {
        return Err(Error::Precondition(
            "Poisson kernel requires an interior point".into(),
        ));
    }
    let hzz = h_poly(z, z).re;
    let hzu = h_poly(z, u.matrix());
    let ratio = hzz / hzu.norm_sqr();
    let first = Complex64::from(ratio).powc(sp.sigma());
    let second = integer_power(hzu, -sp.nu());
    Ok(first * second)
}

/// Exact covariance factor of the Poisson kernel under g:
/// P(gz, gu) = P(z, u) · j(z)^ν · conj(j(u))^ν · |j(u)|^{2σ}
/// with j(w) = det(Cw + D). Integer ν uses exact integer powers.
pub fn poisson_covariance_factor(
    sp: &SpectralParams,
    g: &GroupElement,
    z: &CMatrix,
    u: &ShilovPoint,
) -> Result<Complex64> {
    let jz = moebius_denominator_det(g, z)?;
    let ju = moebius_denominator_det(g, u.matrix())?;
    let nu_factor = integer_power(jz, sp.nu()) * integer_power(ju.conj(), sp.nu());
    let modulus_factor = Complex64::from(ju.norm_sqr()).powc(sp.sigma());
    Ok(nu_factor * modulus_factor)
}

/// Determinant j_g(w) = det(Cw + D) of the Möbius denominator, the cocycle
/// entering both the covariance law and the line-bundle twist j_g^{−ν}.
pub fn moebius_denominator_det(g: &GroupElement, w: &CMatrix) -> Result<Complex64> {
    let den = g.block_c() * w + g.block_d();
    let det = den.determinant();
    if det.norm() < 1e-14 {
        return Err(Error::Singular(
            "Möbius denominator det(Cw + D) vanished".into(),
        ));
    }
    Ok(det)
}

/// Integration scheme for Poisson transforms over the Shilov boundary.
#[derive(Clone, Debug)]
pub enum TransformMethod {
    /// Sharded Monte Carlo: `samples` draws split over `shards` independent
    /// generator streams derived from `seed`. Deterministic for fixed
    /// (samples, shards, seed) regardless of thread count.
    MonteCarlo {
        samples: usize,
        shards: usize,
        seed: u64,
    },
    /// Uniform trapezoid rule on the unit circle; only valid for r = 1,
    /// b = 0, where it is spectrally accurate for analytic integrands.
    CircleQuadrature { nodes: usize },
}

impl TransformMethod {
    /// Monte Carlo with the default shard count.
    pub fn monte_carlo(samples: usize, seed: u64) -> Self {
        TransformMethod::MonteCarlo {
            samples,
            shards: 64,
            seed,
        }
    }
}

/// Result of a boundary integral: value, standard error of the mean
/// (zero for quadrature), and the number of evaluation points.
#[derive(Clone, Copy, Debug)]
pub struct Estimate {
    /// Estimated integral.
    pub value: Complex64,
    /// Standard error of the complex mean; 0 for deterministic quadrature.
    pub stderr: f64,
    /// Number of integrand evaluations.
    pub samples: usize,
}

/// Poisson transform ∫_S P_{s,ν}(z, u) f(u) du against the K-invariant
/// probability measure on the Shilov boundary.
pub fn poisson_transform<F>(
    f: F,
    sp: &SpectralParams,
    z: &CMatrix,
    method: &TransformMethod,
) -> Result<Estimate>
where
    F: Fn(&CMatrix) -> Complex64 + Sync,
{
    if !is_interior(z) {
        return Err(Error::Precondition(
            "Poisson transform requires an interior point".into(),
        ));
    }
    match *method {
        TransformMethod::MonteCarlo {
            samples,
            shards,
            seed,
        } => {
            if samples == 0 || shards == 0 {
                return Err(Error::InvalidParam(
                    "Monte Carlo needs samples ≥ 1 and shards ≥ 1".into(),
                ));
            }
            let dom = *sp.domain();
            let base = samples / shards;
            let rem = samples % shards;
            let partials: Vec<(Complex64, f64, usize)> = (0..shards)
                .into_par_iter()
                .map(|shard| -> Result<(Complex64, f64, usize)> {
                    let count = base + usize::from(shard < rem);
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    rng.set_stream(shard as u64 + 1);
                    let mut sum = Complex64::default();
                    let mut sumsq = 0.0_f64;
                    for _ in 0..count {
                        let u = sample_shilov(&mut rng, &dom);
                        let v = poisson_kernel(sp, z, &u)? * f(u.matrix());
                        sum += v;
                        sumsq += v.norm_sqr();
                    }
                    Ok((sum, sumsq, count))
                })
                .collect::<Result<Vec<_>>>()?;
            let mut sum = Complex64::default();
            let mut sumsq = 0.0;
            let mut n = 0usize;
            for (s, sq, count) in partials {
                sum += s;
                sumsq += sq;
                n += count;
            }
            let mean = sum / cr(n as f64);
            let stderr = if n > 1 {
                let var_num = (sumsq - n as f64 * mean.norm_sqr()).max(0.0);
                (var_num / ((n - 1) as f64 * n as f64)).sqrt()
            } else {
                0.0
            };
            Ok(Estimate {
                value: mean,
                stderr,
                samples: n,
            })
        }
        TransformMethod::CircleQuadrature { nodes } => {
            if sp.domain().r() != 1 || sp.domain().b() != 0 {
                return Err(Error::Precondition(
                    "circle quadrature applies only to the disk r = 1, b = 0".into(),
                ));
            }
            if nodes == 0 {
                return Err(Error::InvalidParam("quadrature needs at least one node".into()));
            }
            let mut sum = Complex64::default();
            for k in 0..nodes {
                let theta = std::f64::consts::TAU * k as f64 / nodes as f64;
                let u = ShilovPoint::new_unchecked(CMatrix::from_row_slice(
                    1,
                    1,
                    &[c(theta.cos(), theta.sin())],
                ));
                sum += poisson_kernel(sp, z, &u)? * f(u.matrix());
            }
            Ok(Estimate {
                value: sum / cr(nodes as f64),
                stderr: 0.0,
                samples: nodes,
            })
        }
    }
}

/// Elementary spherical function φ_{s,ν}(z): the Poisson transform of the
/// constant function 1. K-invariant in z.
pub fn spherical_phi(
    sp: &SpectralParams,
    z: &CMatrix,
    method: &TransformMethod,
) -> Result<Estimate> {
    poisson_transform(|_| cr(1.0), sp, z, method)
}

/// Closed-form value of the Poisson transform of u ↦ conj(Δ_δ(u)) in the
/// regime σ = n/r + δ − ν:
///
/// ```text
///   ((σ)_δ / (n/r)_δ) · Δ_δ(q(z)) ,
/// ```
///
/// where (x)_δ is the generalized Pochhammer symbol of the rectangular
/// signature (δ,…,δ) with r parts and q(z) = (I − z̄ zᵀ)^{−1} z̄ is the
/// conjugate quasi-inverse. On the disk: ((σ)_δ/δ!) · z̄^δ/(1−|z|²)^δ.
pub fn conical_transform_target(sp: &SpectralParams, z: &CMatrix) -> Result<Complex64> {
    if !sp.is_szego_regime() {
        return Err(Error::Precondition(format!(
            "conical transform closed form needs σ = n/r + δ − ν; got σ = {}, n/r + δ − ν = {}",
            sp.sigma(),
            sp.domain().q() as f64 + sp.delta() as f64 - sp.nu()
        )));
    }
    let rect = Signature::rectangular(sp.delta(), sp.domain().r());
    let num = gen_pochhammer(sp.sigma(), &rect);
    let den = gen_pochhammer(cr(sp.domain().q() as f64), &rect);
    Ok(num / den * conical(&rect, &q_map(z)?))
}

/// Verdict of the spectral-regularity test for the eigenspace isomorphism:
/// the value x = 4n(1−s)/r must avoid Λ₁ = {k − 2ν + 2 : k ≥ 1} and
/// Λ₂ = {2k − 4ν + 4 : k ≥ 0}.
#[derive(Clone, Debug)]
pub struct ShimenoCheck {
    /// True when x avoids both exceptional sets.
    pub ok: bool,
    /// The tested value x = 4n(1−s)/r.
    pub x: Complex64,
    /// Index k ≥ 1 with |x − (k − 2ν + 2)| ≤ 1e−9, if any.
    pub lambda1_hit: Option<i64>,
    /// Index k ≥ 0 with |x − (2k − 4ν + 4)| ≤ 1e−9, if any.
    pub lambda2_hit: Option<i64>,
    /// True when x sits within 1e−9 of 2 − 2ν, the k = 0 element excluded
    /// from Λ₁ by the convention k ≥ 1; flagged because the alternative
    /// convention k ≥ 0 would include it.
    pub boundary_ambiguity: bool,
}

/// Test the spectral-regularity condition 4n(1−s)/r ∉ Λ₁ ∪ Λ₂.
///
/// Non-real x trivially passes (both sets are real). Membership is decided
/// within 1e−9.
pub fn shimeno_condition(s: Complex64, nu: f64, dom: &DomainParams) -> ShimenoCheck {
    let n = dom.n() as f64;
    let r = dom.r() as f64;
    let x = cr(4.0 * n / r) * (cr(1.0) - s);
    if x.im.abs() > INTEGER_TOL {
        return ShimenoCheck {
            ok: true,
            x,
            lambda1_hit: None,
            lambda2_hit: None,
            boundary_ambiguity: false,
        };
    }
    let xr = x.re;
    let lambda1_hit = {
        let k = (xr + 2.0 * nu - 2.0).round();
        if (xr - (k - 2.0 * nu + 2.0)).abs() <= INTEGER_TOL && k >= 1.0 {
            Some(k as i64)
        } else {
            None
        }
    };
    let lambda2_hit = {
        let k = ((xr + 4.0 * nu - 4.0) / 2.0).round();
        if (xr - (2.0 * k - 4.0 * nu + 4.0)).abs() <= INTEGER_TOL && k >= 0.0 {
            Some(k as i64)
        } else {
            None
        }
    };
    let boundary_ambiguity = (xr - (2.0 - 2.0 * nu)).abs() <= INTEGER_TOL;
    ShimenoCheck {
        ok: lambda1_hit.is_none() && lambda2_hit.is_none(),
        x,
        lambda1_hit,
        lambda2_hit,
        boundary_ambiguity,
    }
}

/// The Gamma-product denominator e_ν(λ) of the Harish-Chandra-type
/// c-function, with pole bookkeeping.
#[derive(Clone, Debug)]
pub struct EDenominator {
    /// Π_{j>k} Γ(a/2 + λ_j + λ_k) Γ(a/2 + λ_j − λ_k)
    /// · Π_j Γ((b+1+2λ_j+ν)/2) Γ((b+1+2λ_j−ν)/2); infinite when a Γ factor
    /// sits at a pole.
    pub value: Complex64,
    /// True when some Γ argument is a non-positive integer.
    pub has_pole: bool,
    /// The offending Γ arguments.
    pub pole_arguments: Vec<Complex64>,
}

fn is_gamma_pole(arg: Complex64) -> bool {
    arg.im.abs() <= INTEGER_TOL
        && (arg.re - arg.re.round()).abs() <= INTEGER_TOL
        && arg.re.round() <= 0.0
}

/// Evaluate e_ν(λ) for an explicit weight vector λ (β-coordinates).
pub fn c_denominator_e_at(lambda: &[Complex64], nu: f64, dom: &DomainParams) -> EDenominator {
    let half_a = dom.a() as f64 / 2.0;
    let b = dom.b() as f64;
    let mut args = Vec::new();
    for j in 0..lambda.len() {
        for k in 0..j {
            args.push(cr(half_a) + lambda[j] + lambda[k]);
            args.push(cr(half_a) + lambda[j] - lambda[k]);
        }
        args.push((cr(b + 1.0) + cr(2.0) * lambda[j] + cr(nu)) / cr(2.0));
        args.push((cr(b + 1.0) + cr(2.0) * lambda[j] - cr(nu)) / cr(2.0));
    }
    let pole_arguments: Vec<Complex64> = args.iter().copied().filter(|&a| is_gamma_pole(a)).collect();
    if !pole_arguments.is_empty() {
        return EDenominator {
            value: c(f64::INFINITY, 0.0),
            has_pole: true,
            pole_arguments,
        };
    }
    let log_sum: Complex64 = args.iter().map(|&a| ln_gamma(a)).sum();
    EDenominator {
        value: log_sum.exp(),
        has_pole: false,
        pole_arguments,
    }
}

/// Evaluate e_ν(λ_s) at the weight vector derived from the spectral
/// parameters.
pub fn c_denominator_e(sp: &SpectralParams) -> EDenominator {
    c_denominator_e_at(&sp.lambda(), sp.nu(), sp.domain())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{sample_interior, triple_product};
    use crate::group::{moebius_apply, sample_group_element};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn disk() -> DomainParams {
        DomainParams::new(1, 0).unwrap()
    }

    fn d22() -> DomainParams {
        DomainParams::new(2, 0).unwrap()
    }

    fn d23() -> DomainParams {
        DomainParams::new(2, 1).unwrap()
    }

    #[test]
    fn spectral_params_derived_quantities() {
        let dom = d23();
        let sp = SpectralParams::new(c(0.7, 0.1), 4.0, 0, &dom);
        assert!((sp.sigma() - c(2.1, 0.3)).norm() < 1e-13);
        // ρ for I_{2,3}: ((1+1)/2, (1+1+2)/2) = (1, 2).
        assert_eq!(sp.rho(), vec![1.0, 2.0]);
        // s = 1, ν = 0 → λ = ρ.
        let neutral = SpectralParams::new(cr(1.0), 0.0, 0, &dom);
        for (l, r) in neutral.lambda().iter().zip(neutral.rho()) {
            assert!((l - cr(r)).norm() < 1e-13);
        }
        // λ_j − ρ_j = (2n(s−1) − νr)/(2r) = (12(s−1) − 2ν)/4.
        let shift = (cr(12.0) * (sp.s() - cr(1.0)) - cr(8.0)) / cr(4.0);
        for (l, r) in sp.lambda().iter().zip(sp.rho()) {
            assert!((l - cr(r) - shift).norm() < 1e-13);
        }
    }

    #[test]
    fn szego_regime_constructor_and_predicate() {
        let dom = d22();
        let sp = SpectralParams::szego(8.0, 1, &dom);
        // σ = n/r + δ − ν = 2 + 1 − 8 = −5, so s = −5/2.
        assert!((sp.s() - cr(-2.5)).norm() < 1e-13);
        assert!((sp.sigma() - cr(-5.0)).norm() < 1e-13);
        assert!(sp.is_szego_regime());
        let generic = SpectralParams::new(cr(0.7), 4.0, 1, &dom);
        assert!(!generic.is_szego_regime());
    }

    #[test]
    fn sampled_shilov_points_are_maximal_tripotents() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for dom in [disk(), d22(), d23()] {
            for _ in 0..200 {
                let u = sample_shilov(&mut rng, &dom);
                assert!(gram_residual(u.matrix()) <= 1e-12);
                // Maximal tripotent: {u ū u} = 2 u u* u = 2 u.
                let t = triple_product(u.matrix(), u.matrix(), u.matrix());
                assert!(max_abs(&(t - u.matrix() * cr(2.0))) <= 1e-12);
            }
        }
    }

    #[test]
    fn shilov_sphere_moment_matches_uniform_measure() {
        // r = 1, b = 2: u is a uniform point on the unit sphere of ℂ³ and
        // E|u_1|² = 1/3 with Var = 1/18.
        let dom = DomainParams::new(1, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let n = 100_000;
        let mut sum = 0.0;
        let mut sumsq = 0.0;
        let mut cross = Complex64::default();
        for _ in 0..n {
            let u = sample_shilov(&mut rng, &dom);
            let x = u.matrix()[(0, 0)].norm_sqr();
            sum += x;
            sumsq += x * x;
            cross += u.matrix()[(0, 0)] * u.matrix()[(0, 1)].conj();
        }
        let mean = sum / n as f64;
        let stderr = ((sumsq / n as f64 - mean * mean) / n as f64).sqrt();
        assert!(
            (mean - 1.0 / 3.0).abs() <= 3.0 * stderr,
            "mean {mean}, stderr {stderr}"
        );
        // Rotation invariance kills the off-diagonal second moment.
        let cross_mean = (cross / cr(n as f64)).norm();
        assert!(cross_mean <= 3.0 / (18f64.sqrt() * (n as f64).sqrt()) + 3e-3);
    }

    #[test]
    fn shilov_validation_rejects_interior_matrices() {
        let dom = d22();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let z = sample_interior(&mut rng, 0.5, &dom);
        match ShilovPoint::new(z) {
            Err(Error::NotShilov(res)) => assert!(res > 0.1),
            other => panic!("expected NotShilov, got {other:?}"),
        }
        let tall = CMatrix::zeros(3, 2);
        assert!(matches!(ShilovPoint::new(tall), Err(Error::InvalidParam(_))));
    }

    #[test]
    fn kernel_is_one_at_origin_and_obeys_modulus_identity() {
        let dom = d23();
        let sp = SpectralParams::new(c(0.8, -0.3), 3.0, 0, &dom);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let zero = dom.zero();
        for _ in 0..20 {
            let u = sample_shilov(&mut rng, &dom);
            let p0 = poisson_kernel(&sp, &zero, &u).unwrap();
            assert!((p0 - cr(1.0)).norm() < 1e-13);
            let z = sample_interior(&mut rng, 0.55, &dom);
            let p = poisson_kernel(&sp, &z, &u).unwrap();
            let hzz = h_poly(&z, &z).re;
            let hzu = h_poly(&z, u.matrix());
            let expected_mod = (hzz / hzu.norm_sqr()).powf(sp.sigma().re)
                * hzu.norm().powf(-sp.nu());
            assert!((p.norm() - expected_mod).abs() <= 1e-12 * expected_mod);
        }
    }

    #[test]
    fn kernel_rejects_exterior_points() {
        let dom = d22();
        let sp = SpectralParams::new(cr(0.7), 4.0, 0, &dom);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let u = sample_shilov(&mut rng, &dom);
        let z = CMatrix::identity(2, 2) * cr(1.1);
        assert!(matches!(
            poisson_kernel(&sp, &z, &u),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn covariance_law_is_exact_for_integer_weight() {
        let dom = d22();
        let sp = SpectralParams::new(c(0.7, 0.2), 4.0, 0, &dom);
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..5 {
            let g = sample_group_element(&mut rng, 0.25, &dom);
            let z = sample_interior(&mut rng, 0.4, &dom);
            let u = sample_shilov(&mut rng, &dom);
            let gz = moebius_apply(&g, &z).unwrap();
            let gu_mat = moebius_apply(&g, u.matrix()).unwrap();
            // The Möbius action preserves the Shilov boundary.
            let gu = ShilovPoint::new(gu_mat).unwrap();
            let lhs = poisson_kernel(&sp, &gz, &gu).unwrap();
            let factor = poisson_covariance_factor(&sp, &g, &z, &u).unwrap();
            let rhs = poisson_kernel(&sp, &z, &u).unwrap() * factor;
            assert!(
                (lhs - rhs).norm() <= 1e-10 * rhs.norm().max(1.0),
                "lhs {lhs}, rhs {rhs}"
            );
        }
    }

    #[test]
    fn transform_of_one_at_origin_is_exactly_one() {
        let dom = d22();
        let sp = SpectralParams::new(c(0.9, 0.4), 6.0, 0, &dom);
        let est = spherical_phi(
            &sp,
            &dom.zero(),
            &TransformMethod::monte_carlo(4096, 17),
        )
        .unwrap();
        assert_eq!(est.value, cr(1.0));
        assert_eq!(est.stderr, 0.0);
        assert_eq!(est.samples, 4096);
        let disk_sp = SpectralParams::new(cr(0.6), 2.0, 0, &disk());
        let est_q = spherical_phi(
            &disk_sp,
            &disk().zero(),
            &TransformMethod::CircleQuadrature { nodes: 64 },
        )
        .unwrap();
        assert!((est_q.value - cr(1.0)).norm() < 1e-15);
    }

    #[test]
    fn monte_carlo_is_deterministic() {
        let dom = d22();
        let sp = SpectralParams::new(cr(0.7), 4.0, 0, &dom);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let z = sample_interior(&mut rng, 0.3, &dom);
        let method = TransformMethod::MonteCarlo {
            samples: 2000,
            shards: 8,
            seed: 42,
        };
        let a = spherical_phi(&sp, &z, &method).unwrap();
        let b = spherical_phi(&sp, &z, &method).unwrap();
        assert_eq!(a.value, b.value);
        assert_eq!(a.stderr, b.stderr);
    }

    #[test]
    fn quadrature_and_monte_carlo_agree_on_the_disk() {
        let dom = disk();
        let sp = SpectralParams::new(cr(0.63), 2.0, 0, &dom);
        let z = CMatrix::from_row_slice(1, 1, &[c(0.3, 0.2)]);
        let quad = spherical_phi(&sp, &z, &TransformMethod::CircleQuadrature { nodes: 256 })
            .unwrap();
        let mc = spherical_phi(&sp, &z, &TransformMethod::monte_carlo(40_000, 5)).unwrap();
        assert!(
            (quad.value - mc.value).norm() <= 4.0 * mc.stderr + 1e-12,
            "quad {}, mc {} ± {}",
            quad.value,
            mc.value,
            mc.stderr
        );
    }

    #[test]
    fn conical_transform_disk_closed_form() {
        // ν = 6, δ = 1, σ = 1 + 1 − 6 = −4: the transform of ū equals
        // (σ)_1/(1)_1 · z̄/(1−|z|²) = −4 z̄/(1−|z|²).
        let dom = disk();
        let sp = SpectralParams::szego(6.0, 1, &dom);
        let z = CMatrix::from_row_slice(1, 1, &[c(0.2, -0.4)]);
        let est = poisson_transform(
            |u| u[(0, 0)].conj(),
            &sp,
            &z,
            &TransformMethod::CircleQuadrature { nodes: 512 },
        )
        .unwrap();
        let zc = z[(0, 0)];
        let expect = cr(-4.0) * zc.conj() / cr(1.0 - zc.norm_sqr());
        assert!((est.value - expect).norm() < 1e-10, "{} vs {expect}", est.value);
        let target = conical_transform_target(&sp, &z).unwrap();
        assert!((target - expect).norm() < 1e-13);
    }

    #[test]
    fn conical_target_needs_the_szego_regime() {
        let dom = d22();
        let sp = SpectralParams::new(cr(0.7), 8.0, 1, &dom);
        let z = dom.zero();
        assert!(matches!(
            conical_transform_target(&sp, &z),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn conical_target_matrix_fixture() {
        // I_{2,2}, ν = 8, δ = 1: σ = −5, ratio (σ)_(1,1)/(q)_(1,1)
        // = (−5)(−6)/((2)(1)) = 15.
        let dom = d22();
        let sp = SpectralParams::szego(8.0, 1, &dom);
        let rect = Signature::rectangular(1, 2);
        let num = gen_pochhammer(sp.sigma(), &rect);
        let den = gen_pochhammer(cr(2.0), &rect);
        assert!((num / den - cr(15.0)).norm() < 1e-13);
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let z = sample_interior(&mut rng, 0.3, &dom);
        let target = conical_transform_target(&sp, &z).unwrap();
        let direct = cr(15.0) * conical(&rect, &q_map(&z).unwrap());
        assert!((target - direct).norm() < 1e-13);
    }

    #[test]
    fn circle_quadrature_rejects_matrix_domains() {
        let dom = d22();
        let sp = SpectralParams::new(cr(0.7), 4.0, 0, &dom);
        let err = spherical_phi(
            &sp,
            &dom.zero(),
            &TransformMethod::CircleQuadrature { nodes: 16 },
        );
        assert!(matches!(err, Err(Error::Precondition(_))));
    }

    #[test]
    fn shimeno_condition_fixtures() {
        // I_{2,2}, s = 0.37, ν = 4: x = 8·0.63 = 5.04 avoids both sets.
        let check = shimeno_condition(cr(0.37), 4.0, &d22());
        assert!(check.ok);
        assert!(check.lambda1_hit.is_none() && check.lambda2_hit.is_none());
        // Disk, ν = 4: x = 4(1−s). s = 9/4 → x = −5 = 1 − 8 + 2 ∈ Λ₁.
        let hit1 = shimeno_condition(cr(2.25), 4.0, &disk());
        assert!(!hit1.ok);
        assert_eq!(hit1.lambda1_hit, Some(1));
        // s = 4 → x = −12 = 2·0 − 16 + 4 ∈ Λ₂.
        let hit2 = shimeno_condition(cr(4.0), 4.0, &disk());
        assert!(!hit2.ok);
        assert_eq!(hit2.lambda2_hit, Some(0));
        // s = 2.5 → x = −6 = 2 − 2ν: the excluded k = 0 element of Λ₁;
        // flagged ambiguous, and caught by Λ₂ (k = 3) anyway.
        let amb = shimeno_condition(cr(2.5), 4.0, &disk());
        assert!(amb.boundary_ambiguity);
        assert!(!amb.ok);
        assert_eq!(amb.lambda2_hit, Some(3));
        // Non-real s passes trivially.
        let complex_s = shimeno_condition(c(0.5, 0.3), 4.0, &d22());
        assert!(complex_s.ok);
    }

    #[test]
    fn e_denominator_generic_value_and_conjugation() {
        let dom = d22();
        let sp = SpectralParams::new(c(0.7, 0.15), 4.0, 0, &dom);
        let e = c_denominator_e(&sp);
        assert!(!e.has_pole);
        assert!(e.value.norm() > 0.0 && e.value.is_finite());
        // Conjugating λ conjugates the product.
        let lambda = sp.lambda();
        let lambda_conj: Vec<Complex64> = lambda.iter().map(|l| l.conj()).collect();
        let e_conj = c_denominator_e_at(&lambda_conj, 4.0, &dom);
        assert!((e_conj.value - e.value.conj()).norm() <= 1e-10 * e.value.norm());
    }

    #[test]
    fn e_denominator_flags_gamma_poles() {
        // Disk: λ_1 = s − 1/2 − ν/2, so (b+1+2λ_1−ν)/2 = s − ν. At s = ν
        // the last Γ factor sits at 0.
        let dom = disk();
        let sp = SpectralParams::new(cr(2.0), 2.0, 0, &dom);
        let lambda = sp.lambda();
        assert!((lambda[0] - cr(2.0 - 0.5 - 1.0)).norm() < 1e-13);
        let e = c_denominator_e(&sp);
        assert!(e.has_pole);
        assert!(!e.pole_arguments.is_empty());
        assert!(e.value.re.is_infinite());
    }
}

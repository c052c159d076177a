//! Signatures, Schur polynomials, generalized Pochhammer symbols, and the
//! kernel expansion of h(z, w)^{−ν}.
//!
//! A signature m = (m_1 ≥ m_2 ≥ … ≥ 0) labels both an irreducible
//! polynomial representation (through its Schur polynomial s_m) and a
//! component of the Fischer–Fock decomposition of polynomials on V. The
//! reproducing kernel of the m-component is
//!
//! ```text
//!   K^m(z, w) = s_m(eig(z w*)) / Π_{cells c of m} hook(c) ,
//! ```
//!
//! and the Faraut–Koranyi binomial expansion
//!
//! ```text
//!   h(z, w)^{−ν} = Σ_m (ν)_m · K^m(z, w)
//! ```
//!
//! converges for spectral radius of z w* below 1, with the generalized
//! Pochhammer symbol (a = 2)
//!
//! ```text
//!   (x)_m = Π_j (x − j + 1)_{m_j} = Π_{cells (i,j) of m} (x + j − i) .
//! ```
//!
//! The two product formulas are used as mutual integer oracles in the test
//! suite. Also here: conical polynomials Δ_m (products of powers of leading
//! minors), the shift constants c(m, δ) with their hook-ratio form, and the
//! signature sets of the ν-discrete series.

use num_complex::Complex64;

use crate::domain::{leading_minor, DomainParams};
use crate::error::{Error, Result};
use crate::linalg::{cr, eigenvalues, CMatrix};

/// Eigenvalue degeneracy threshold (relative) below which Schur evaluation
/// switches from the bialternant ratio to the Jacobi–Trudi determinant.
const SCHUR_DEGENERACY_TOL: f64 = 1e-4;

/// A partition m_1 ≥ m_2 ≥ … ≥ m_k ≥ 0, stored with trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    parts: Vec<usize>,
}

impl Signature {
    /// Build from non-increasing parts; trailing zeros are trimmed away.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParam(format!(
                "signature parts must be non-increasing, got {parts:?}"
            )));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Signature { parts })
    }

    /// The empty signature (all parts zero).
    pub fn zero() -> Self {
        Signature { parts: Vec::new() }
    }

    /// The rectangular signature (δ, …, δ) with `len` parts.
    pub fn rectangular(delta: usize, len: usize) -> Self {
        if delta == 0 {
            return Signature::zero();
        }
        Signature {
            parts: vec![delta; len],
        }
    }

    /// Build from a non-decreasing tuple (as enumerated by the discrete
    /// series sets) by reversing it.
    pub fn from_nondecreasing(tuple: &[usize]) -> Result<Self> {
        let mut parts: Vec<usize> = tuple.to_vec();
        parts.reverse();
        Signature::new(parts)
    }

    /// Nonzero parts, largest first.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// True for the zero signature.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Weight |m| = Σ m_j.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part m_j (1-indexed), zero beyond the stored length.
    pub fn part(&self, j: usize) -> usize {
        assert!(j >= 1, "parts are 1-indexed");
        self.parts.get(j - 1).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to the given length.
    pub fn padded(&self, len: usize) -> Vec<usize> {
        assert!(
            self.parts.len() <= len,
            "signature has more than {len} nonzero parts"
        );
        let mut v = self.parts.clone();
        v.resize(len, 0);
        v
    }

    /// The signature (m_1 + δ, …, m_len + δ) on `len` parts.
    pub fn plus_rectangular(&self, delta: usize, len: usize) -> Signature {
        let mut parts = self.padded(len);
        for p in parts.iter_mut() {
            *p += delta;
        }
        Signature::new(parts).expect("shift preserves monotonicity")
    }

    /// Young-diagram cells (i, j), both 1-indexed, row by row.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.weight());
        for (i, &mi) in self.parts.iter().enumerate() {
            for j in 1..=mi {
                out.push((i + 1, j));
            }
        }
        out
    }

    /// Conjugate partition (column lengths).
    pub fn conjugate(&self) -> Signature {
        let max = self.parts.first().copied().unwrap_or(0);
        let parts: Vec<usize> = (1..=max)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Signature { parts }
    }

    /// Hook length of the cell (i, j): arm + leg + 1.
    pub fn hook_length(&self, i: usize, j: usize) -> usize {
        let arm = self.part(i) - j;
        let leg = self.conjugate().part(j) - i;
        arm + leg + 1
    }

    /// Product of all hook lengths, exact.
    pub fn hook_product_exact(&self) -> u128 {
        let conj = self.conjugate();
        let mut prod: u128 = 1;
        for (i, j) in self.cells() {
            let arm = (self.part(i) - j) as u128;
            let leg = (conj.part(j) - i) as u128;
            prod = prod
                .checked_mul(arm + leg + 1)
                .expect("hook product overflows u128");
        }
        prod
    }

    /// Product of all hook lengths as a float; unlike the exact form it
    /// tolerates weights whose product exceeds u128.
    pub fn hook_product(&self) -> f64 {
        let conj = self.conjugate();
        let mut prod = 1.0_f64;
        for (i, j) in self.cells() {
            let arm = (self.part(i) - j) as f64;
            let leg = (conj.part(j) - i) as f64;
            prod *= arm + leg + 1.0;
        }
        prod
    }
}

impl std::fmt::Display for Signature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Generalized Pochhammer symbol (x)_m = Π_j (x − j + 1)_{m_j}, the row-wise
/// product of classical rising factorials shifted by half the multiplicity
/// a = 2 per row.
pub fn gen_pochhammer(x: Complex64, m: &Signature) -> Complex64 {
    let mut prod = cr(1.0);
    for (j, &mj) in m.parts().iter().enumerate() {
        let base = x - cr(j as f64);
        for i in 0..mj {
            prod *= base + cr(i as f64);
        }
    }
    prod
}

/// Exact integer generalized Pochhammer for integer arguments.
pub fn gen_pochhammer_exact(x: i64, m: &Signature) -> i128 {
    let mut prod: i128 = 1;
    for (j, &mj) in m.parts().iter().enumerate() {
        let base = x as i128 - j as i128;
        for i in 0..mj {
            prod = prod
                .checked_mul(base + i as i128)
                .expect("Pochhammer overflows i128");
        }
    }
    prod
}

/// The same product organized over Young cells: (x)_m = Π_{(i,j)} (x + j − i).
/// Used as an independent oracle for [`gen_pochhammer_exact`].
pub fn young_cell_product_exact(x: i64, m: &Signature) -> i128 {
    let mut prod: i128 = 1;
    for (i, j) in m.cells() {
        prod = prod
            .checked_mul(x as i128 + j as i128 - i as i128)
            .expect("Young cell product overflows i128");
    }
    prod
}

fn complete_homogeneous(xs: &[Complex64], kmax: usize) -> Vec<Complex64> {
    let mut h = vec![Complex64::default(); kmax + 1];
    h[0] = cr(1.0);
    for &x in xs {
        for k in 1..=kmax {
            let prev = h[k - 1];
            h[k] += x * prev;
        }
    }
    h
}

fn schur_jacobi_trudi(m: &Signature, xs: &[Complex64]) -> Complex64 {
    let ell = m.len();
    if ell == 0 {
        return cr(1.0);
    }
    let kmax = m.part(1) + ell - 1;
    let h = complete_homogeneous(xs, kmax);
    let get = |d: i64| -> Complex64 {
        if d < 0 {
            Complex64::default()
        } else {
            h[d as usize]
        }
    };
    let mat = CMatrix::from_fn(ell, ell, |i, j| {
        get(m.part(i + 1) as i64 - (i as i64 + 1) + (j as i64 + 1))
    });
    mat.determinant()
}

fn schur_bialternant(m: &Signature, xs: &[Complex64]) -> Complex64 {
    let k = xs.len();
    let parts = m.padded(k);
    let num = CMatrix::from_fn(k, k, |i, j| {
        let e = (parts[j] + k - 1 - j) as i32;
        xs[i].powi(e)
    });
    let mut den = cr(1.0);
    for i in 0..k {
        for j in (i + 1)..k {
            den *= xs[i] - xs[j];
        }
    }
    num.determinant() / den
}

/// Schur polynomial s_m(x_1, …, x_k). Uses the bialternant ratio, falling
/// back to the Jacobi–Trudi determinant in complete homogeneous polynomials
/// when two arguments nearly coincide.
pub fn schur(m: &Signature, xs: &[Complex64]) -> Complex64 {
    assert!(
        m.len() <= xs.len(),
        "signature {m} has more parts than there are variables"
    );
    if xs.is_empty() {
        return cr(1.0);
    }
    let scale = xs.iter().map(|x| x.norm()).fold(1.0_f64, f64::max);
    let mut min_sep = f64::INFINITY;
    for i in 0..xs.len() {
        for j in (i + 1)..xs.len() {
            min_sep = min_sep.min((xs[i] - xs[j]).norm());
        }
    }
    if min_sep < SCHUR_DEGENERACY_TOL * scale {
        schur_jacobi_trudi(m, xs)
    } else {
        schur_bialternant(m, xs)
    }
}

/// Fischer–Fock reproducing kernel component
/// K^m(z, w) = s_m(eig(z w*)) / Π hooks(m).
pub fn fock_kernel(m: &Signature, z: &CMatrix, w: &CMatrix) -> Complex64 {
    let eig = eigenvalues(&(z * w.adjoint()));
    schur(m, &eig) / cr(m.hook_product())
}

/// All signatures of weight ≤ `max_weight` with at most `max_parts` parts,
/// enumerated by weight, then lexicographically.
pub fn signatures_up_to(max_weight: usize, max_parts: usize) -> Vec<Signature> {
    fn extend(
        out: &mut Vec<Vec<usize>>,
        prefix: &mut Vec<usize>,
        budget: usize,
        cap: usize,
        slots: usize,
    ) {
        out.push(prefix.clone());
        if slots == 0 {
            return;
        }
        let limit = budget.min(cap);
        for next in (1..=limit).rev() {
            prefix.push(next);
            extend(out, prefix, budget - next, next, slots - 1);
            prefix.pop();
        }
    }
    let mut raw = Vec::new();
    let mut prefix = Vec::new();
    extend(
        &mut raw,
        &mut prefix,
        max_weight,
        max_weight,
        max_parts,
    );
    let mut sigs: Vec<Signature> = raw
        .into_iter()
        .map(|p| Signature::new(p).expect("enumeration is monotone"))
        .collect();
    sigs.sort_by(|a, b| (a.weight(), b.parts()).cmp(&(b.weight(), a.parts())));
    sigs.dedup();
    sigs
}

/// Partial sum of the kernel expansion Σ_{|m| ≤ max_weight} (ν)_m K^m(z, w),
/// which converges to h(z, w)^{−ν} inside the domain.
#[derive(Clone, Debug)]
pub struct FkSum {
    /// Value of the truncated series.
    pub value: Complex64,
    /// Spectral radius of z w*; the series diverges when it reaches 1.
    pub spectral_radius: f64,
    /// Number of signatures summed.
    pub terms: usize,
}

/// Evaluate the truncated Faraut–Koranyi expansion of h(z, w)^{−ν}.
///
/// Emits all signatures with at most r parts and weight up to `max_weight`.
/// When the spectral radius of z w* is ≥ 1 the series cannot converge and
/// the returned struct flags it (the partial sum is still computed).
pub fn fk_partial_sum(
    nu: f64,
    z: &CMatrix,
    w: &CMatrix,
    max_weight: usize,
    dom: &DomainParams,
) -> FkSum {
    let eig = eigenvalues(&(z * w.adjoint()));
    let spectral_radius = eig.iter().map(|x| x.norm()).fold(0.0_f64, f64::max);
    let x = cr(nu);
    let mut value = Complex64::default();
    let mut terms = 0;
    for m in signatures_up_to(max_weight, dom.r()) {
        let coeff = gen_pochhammer(x, &m);
        if coeff.norm() == 0.0 {
            terms += 1;
            continue;
        }
        value += coeff * schur(&m, &eig) / cr(m.hook_product());
        terms += 1;
    }
    FkSum {
        value,
        spectral_radius,
        terms,
    }
}

/// Conical polynomial Δ_m(z) = Π_j Δ_j(z)^{m_j − m_{j+1}} built from the
/// leading principal minors Δ_j.
pub fn conical(m: &Signature, z: &CMatrix) -> Complex64 {
    let r = z.nrows();
    assert!(
        m.len() <= r,
        "signature {m} has more parts than the matrix has rows"
    );
    let parts = m.padded(r);
    let mut prod = cr(1.0);
    for j in 1..=r {
        let e = parts[j - 1] - if j < r { parts[j] } else { 0 };
        if e > 0 {
            prod *= leading_minor(z, j).powi(e as i32);
        }
    }
    prod
}

/// Shift constant c(m, δ) of the conical multiplication law
/// Δ^δ Δ̄^δ K^m = c(m, δ) K^{m+δ} on tube domains:
/// c(m, δ) = Π_{j=1}^r ((a/2)(r−j) + 1 + m_j)_δ, exactly.
pub fn c_constant_exact(m: &Signature, delta: usize, dom: &DomainParams) -> i128 {
    let r = dom.r();
    assert!(m.len() <= r, "signature {m} exceeds rank {r}");
    let half_a = (dom.a() / 2) as i128;
    let parts = m.padded(r);
    let mut prod: i128 = 1;
    for j in 1..=r {
        let base = half_a * (r as i128 - j as i128) + 1 + parts[j - 1] as i128;
        for i in 0..delta {
            prod = prod
                .checked_mul(base + i as i128)
                .expect("shift constant overflows i128");
        }
    }
    prod
}

/// Floating-point shift constant c(m, δ).
pub fn c_constant(m: &Signature, delta: usize, dom: &DomainParams) -> f64 {
    c_constant_exact(m, delta, dom) as f64
}

/// The signature set of the ν-discrete series.
#[derive(Clone, Debug)]
pub struct DiscreteSeries {
    /// Cutoff ℓ: tuples range over 0 ≤ m_1 ≤ … ≤ m_r ≤ ℓ.
    pub ell: usize,
    /// The weight parameter the set was built for.
    pub nu: f64,
    /// Non-decreasing tuples (m_1, …, m_r), enumerated lexicographically.
    pub tuples: Vec<Vec<usize>>,
}

impl DiscreteSeries {
    /// The tuples converted to ordinary (non-increasing) signatures.
    pub fn signatures(&self) -> Vec<Signature> {
        self.tuples
            .iter()
            .map(|t| Signature::from_nondecreasing(t).expect("tuples are monotone"))
            .collect()
    }
}

/// Enumerate the ν-discrete series signature set for I_{r,r+b}.
///
/// Requires ν ∈ pℤ with ν > p − 1. With α = ν − p, the cutoff is
/// ℓ = (α−1)/2 for odd α and α/2 for even α, and the set consists of all
/// non-decreasing integer tuples 0 ≤ m_1 ≤ … ≤ m_r ≤ ℓ.
pub fn discrete_series_set(nu: f64, dom: &DomainParams) -> Result<DiscreteSeries> {
    let p = dom.p() as f64;
    let ratio = nu / p;
    if (ratio - ratio.round()).abs() > 1e-9 {
        return Err(Error::Precondition(format!(
            "ν = {nu} is not an integer multiple of the genus p = {p}"
        )));
    }
    if nu <= p - 1.0 {
        return Err(Error::Precondition(format!(
            "ν = {nu} must exceed p − 1 = {}",
            p - 1.0
        )));
    }
    let alpha = (nu - p).round() as i64;
    let ell = if alpha % 2 == 1 {
        ((alpha - 1) / 2) as usize
    } else {
        (alpha / 2) as usize
    };
    let r = dom.r();
    let mut tuples = Vec::new();
    let mut current = vec![0usize; r];
    loop {
        tuples.push(current.clone());
        // Advance to the next non-decreasing tuple bounded by ell.
        let mut pos = r;
        loop {
            if pos == 0 {
                return Ok(DiscreteSeries { ell, nu, tuples });
            }
            pos -= 1;
            if current[pos] < ell {
                current[pos] += 1;
                let v = current[pos];
                for slot in current.iter_mut().skip(pos + 1) {
                    *slot = v;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{h_poly, sample_interior};
    use crate::linalg::{c, gaussian_matrix, spectral_norm};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sig(parts: &[usize]) -> Signature {
        Signature::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn signature_basics() {
        let m = sig(&[3, 1, 0]);
        assert_eq!(m.parts(), &[3, 1]);
        assert_eq!(m.weight(), 4);
        assert_eq!(m.len(), 2);
        assert_eq!(m.part(1), 3);
        assert_eq!(m.part(5), 0);
        assert!(Signature::new(vec![1, 2]).is_err());
        assert_eq!(Signature::rectangular(2, 3).parts(), &[2, 2, 2]);
        assert_eq!(Signature::rectangular(0, 3), Signature::zero());
        assert_eq!(sig(&[3, 1]).plus_rectangular(2, 3).parts(), &[5, 3, 2]);
        assert_eq!(
            Signature::from_nondecreasing(&[0, 1, 2]).unwrap().parts(),
            &[2, 1]
        );
    }

    #[test]
    fn conjugate_and_hooks_of_two_one() {
        let m = sig(&[2, 1]);
        assert_eq!(m.conjugate().parts(), &[2, 1]);
        // Hooks of (2,1): cell (1,1) has 3, cells (1,2) and (2,1) have 1.
        assert_eq!(m.hook_length(1, 1), 3);
        assert_eq!(m.hook_length(1, 2), 1);
        assert_eq!(m.hook_length(2, 1), 1);
        assert_eq!(m.hook_product_exact(), 3);
        // Dimension formula: 3! / 3 = 2 standard Young tableaux.
        assert_eq!(6 / m.hook_product_exact(), 2);
    }

    #[test]
    fn pochhammer_scalar_case_is_rising_factorial() {
        // Single part: (x)_m = x(x+1)…(x+m−1).
        let m = sig(&[4]);
        assert_eq!(gen_pochhammer_exact(3, &m), 3 * 4 * 5 * 6);
        let x = c(0.3, -1.1);
        let expect = x * (x + cr(1.0)) * (x + cr(2.0)) * (x + cr(3.0));
        assert!((gen_pochhammer(x, &m) - expect).norm() < 1e-13);
    }

    #[test]
    fn pochhammer_vanishes_for_small_integers() {
        // (x)_m = 0 when the row products hit zero, e.g. x = 1, m = (2,2):
        // second row contributes (1 − 1)_2 = 0.
        assert_eq!(gen_pochhammer_exact(1, &sig(&[2, 2])), 0);
        assert!(gen_pochhammer(cr(1.0), &sig(&[2, 2])).norm() == 0.0);
    }

    #[test]
    fn schur_routes_agree_and_match_known_polynomials() {
        let xs = [c(0.4, 0.1), c(-0.3, 0.25), c(0.05, -0.6)];
        let e1: Complex64 = xs.iter().sum();
        let e2 = xs[0] * xs[1] + xs[0] * xs[2] + xs[1] * xs[2];
        let e3 = xs[0] * xs[1] * xs[2];
        // s_(1) = e1, s_(1,1) = e2, s_(1,1,1) = e3, s_(2) = e1² − e2.
        assert!((schur_bialternant(&sig(&[1]), &xs) - e1).norm() < 1e-12);
        assert!((schur_bialternant(&sig(&[1, 1]), &xs) - e2).norm() < 1e-12);
        assert!((schur_bialternant(&sig(&[1, 1, 1]), &xs) - e3).norm() < 1e-12);
        assert!((schur_bialternant(&sig(&[2]), &xs) - (e1 * e1 - e2)).norm() < 1e-12);
        for m in [sig(&[1]), sig(&[2, 1]), sig(&[3, 1, 1]), sig(&[2, 2])] {
            let a = schur_bialternant(&m, &xs);
            let b = schur_jacobi_trudi(&m, &xs);
            assert!((a - b).norm() < 1e-11, "m = {m}");
        }
    }

    #[test]
    fn schur_handles_degenerate_eigenvalues() {
        // Repeated arguments break the bialternant; the dispatcher must
        // switch to Jacobi–Trudi and still produce the right value.
        let xs = [cr(0.5), cr(0.5)];
        let m = sig(&[2, 1]);
        // s_(2,1)(x, y) = x y (x + y) = 0.25 at x = y = 0.5.
        let got = schur(&m, &xs);
        assert!((got - cr(0.25)).norm() < 1e-12, "got {got}");
    }

    #[test]
    fn fock_kernel_sums_to_exponential_of_trace() {
        // Σ_m K^m(z, w) truncated at high weight approximates e^{tr z w*}
        // (the ν-independent Fock expansion of the flat kernel).
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let dom = DomainParams::new(2, 1).unwrap();
        let z = sample_interior(&mut rng, 0.4, &dom);
        let w = sample_interior(&mut rng, 0.5, &dom);
        let mut total = Complex64::default();
        for m in signatures_up_to(18, 2) {
            total += fock_kernel(&m, &z, &w);
        }
        let expect = (&z * w.adjoint()).trace().exp();
        assert!((total - expect).norm() < 1e-12, "{total} vs {expect}");
    }

    #[test]
    fn fk_expansion_on_the_disk_is_binomial_series() {
        // r = 1: h(z,w)^{−ν} = (1 − z w̄)^{−ν} = Σ (ν)_k (z w̄)^k / k!.
        let dom = DomainParams::new(1, 0).unwrap();
        let z = CMatrix::from_row_slice(1, 1, &[c(0.31, -0.12)]);
        let w = CMatrix::from_row_slice(1, 1, &[c(-0.2, 0.4)]);
        let nu = 2.7;
        let sum = fk_partial_sum(nu, &z, &w, 40, &dom);
        let t = z[(0, 0)] * w[(0, 0)].conj();
        let expect = (cr(1.0) - t).powf(-nu);
        assert!((sum.value - expect).norm() < 1e-13);
        assert!(sum.spectral_radius < 1.0);
        assert_eq!(sum.terms, 41);
    }

    #[test]
    fn fk_expansion_matches_h_power_on_matrix_domain() {
        let dom = DomainParams::new(2, 0).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let z = sample_interior(&mut rng, 0.35, &dom);
        let w = sample_interior(&mut rng, 0.4, &dom);
        let nu = 3.2;
        let sum = fk_partial_sum(nu, &z, &w, 26, &dom);
        let expect = h_poly(&z, &w).powf(-nu);
        assert!(
            (sum.value - expect).norm() < 1e-10,
            "{} vs {expect}",
            sum.value
        );
    }

    #[test]
    fn fk_flags_divergent_geometry() {
        let dom = DomainParams::new(2, 0).unwrap();
        let z = CMatrix::identity(2, 2) * cr(1.2);
        let sum = fk_partial_sum(1.0, &z, &z, 4, &dom);
        assert!(sum.spectral_radius >= 1.0);
    }

    #[test]
    fn fk_truncation_error_decreases_on_the_diagonal() {
        // On z = w all expansion terms are nonnegative multiples of (ν)_m, so
        // raising the truncation weight can only shrink |partial − h^{−ν}|.
        let dom = DomainParams::new(2, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let z = sample_interior(&mut rng, 0.5, &dom);
        let nu = 2.4;
        let target = h_poly(&z, &z).powf(-nu);
        let mut last = f64::INFINITY;
        for max_weight in 0..=14 {
            let err = (fk_partial_sum(nu, &z, &z, max_weight, &dom).value - target).norm();
            assert!(
                err <= last * (1.0 + 1e-12),
                "error grew at M = {max_weight}: {err:.3e} after {last:.3e}"
            );
            last = err;
        }
        assert!(last < 1e-6);
    }

    #[test]
    fn signature_enumeration_counts() {
        // Signatures of weight ≤ M with ≤ 2 parts: Σ_{w≤M} ⌈(w+2)/2⌉ ... just
        // pin a few exact counts instead.
        assert_eq!(signatures_up_to(0, 2).len(), 1);
        assert_eq!(signatures_up_to(1, 2).len(), 2);
        // weight 2: (2), (1,1); plus weight ≤ 1: 2 more.
        assert_eq!(signatures_up_to(2, 2).len(), 4);
        // weight 3: (3), (2,1); running total 6.
        assert_eq!(signatures_up_to(3, 2).len(), 6);
        // One part only: M + 1 of them.
        assert_eq!(signatures_up_to(7, 1).len(), 8);
        // All distinct.
        let sigs = signatures_up_to(10, 3);
        let mut seen = std::collections::HashSet::new();
        for s in &sigs {
            assert!(seen.insert(s.clone()), "duplicate {s}");
        }
    }

    #[test]
    fn conical_on_diagonal_matrices() {
        let dom = DomainParams::new(2, 1).unwrap();
        let mut z = dom.zero();
        z[(0, 0)] = c(0.5, 0.1);
        z[(1, 1)] = c(-0.2, 0.3);
        let m = sig(&[3, 1]);
        let expect = z[(0, 0)].powi(2) * (z[(0, 0)] * z[(1, 1)]).powi(1);
        assert!((conical(&m, &z) - expect).norm() < 1e-13);
        // Rectangular signature is a pure power of the full minor.
        let rect = Signature::rectangular(2, 2);
        let det = z[(0, 0)] * z[(1, 1)];
        assert!((conical(&rect, &z) - det.powi(2)).norm() < 1e-13);
    }

    #[test]
    fn shift_constant_fixtures_and_hook_ratio() {
        let dom = DomainParams::new(2, 0).unwrap();
        // m = 0, δ = 1: c = (2)(1) = 2.
        assert_eq!(c_constant_exact(&Signature::zero(), 1, &dom), 2);
        // m = (1,0), δ = 1: c = (3)(1) = 3.
        assert_eq!(c_constant_exact(&sig(&[1]), 1, &dom), 3);
        // Hook-ratio form: c(m, δ) = Πhooks(m + δ·rect) / Πhooks(m).
        for (m, delta) in [
            (Signature::zero(), 1usize),
            (sig(&[1]), 1),
            (sig(&[2, 1]), 2),
            (sig(&[3]), 2),
        ] {
            let shifted = m.plus_rectangular(delta, dom.r());
            let num = shifted.hook_product_exact();
            let den = m.hook_product_exact();
            assert_eq!(num % den, 0, "hook ratio not integral for {m}, δ={delta}");
            assert_eq!(
                (num / den) as i128,
                c_constant_exact(&m, delta, &dom),
                "m = {m}, δ = {delta}"
            );
        }
    }

    #[test]
    fn discrete_series_fixtures() {
        // Disk, ν = 6: p = 2, α = 4, ℓ = 2, tuples {0, 1, 2}.
        let disk = DomainParams::new(1, 0).unwrap();
        let ds = discrete_series_set(6.0, &disk).unwrap();
        assert_eq!(ds.ell, 2);
        assert_eq!(ds.tuples, vec![vec![0], vec![1], vec![2]]);
        // I_{2,2}: p = 4, ν = 8 gives α = 4, ℓ = 2; tuples are the
        // non-decreasing pairs bounded by 2: C(2+2, 2) = 6 of them.
        let d22 = DomainParams::new(2, 0).unwrap();
        let ds2 = discrete_series_set(8.0, &d22).unwrap();
        assert_eq!(ds2.ell, 2);
        assert_eq!(ds2.tuples.len(), 6);
        assert_eq!(ds2.tuples.first().unwrap(), &vec![0, 0]);
        assert_eq!(ds2.tuples.last().unwrap(), &vec![2, 2]);
        // Signatures come out non-increasing.
        for s in ds2.signatures() {
            assert!(s.parts().windows(2).all(|w| w[0] >= w[1]));
        }
        // Preconditions: ν must be a multiple of p exceeding p − 1.
        assert!(matches!(
            discrete_series_set(5.0, &d22),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            discrete_series_set(0.0, &d22),
            Err(Error::Precondition(_))
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn pochhammer_cell_oracle(
            x in -10i64..=10,
            raw in proptest::collection::vec(0usize..=4, 1..=3),
        ) {
            let mut parts = raw;
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let m = Signature::new(parts).unwrap();
            prop_assert!(m.weight() <= 12);
            prop_assert_eq!(
                gen_pochhammer_exact(x, &m),
                young_cell_product_exact(x, &m)
            );
        }

        #[test]
        fn schur_is_symmetric_in_its_arguments(
            res in proptest::collection::vec(-1.0f64..1.0, 6),
        ) {
            let xs = [c(res[0], res[1]), c(res[2], res[3]), c(res[4], res[5])];
            let mut ys = xs;
            ys.swap(0, 2);
            let m = sig(&[2, 1]);
            let a = schur(&m, &xs);
            let b = schur(&m, &ys);
            prop_assert!((a - b).norm() < 1e-9 * (1.0 + a.norm()));
        }

        #[test]
        fn fock_kernel_is_hermitian(
            seed in 0u64..1000,
        ) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let z = gaussian_matrix(&mut rng, 2, 3);
            let w = gaussian_matrix(&mut rng, 2, 3);
            prop_assume!(spectral_norm(&z) > 1e-3 && spectral_norm(&w) > 1e-3);
            let m = sig(&[2, 1]);
            let a = fock_kernel(&m, &z, &w);
            let b = fock_kernel(&m, &w, &z).conj();
            prop_assert!((a - b).norm() < 1e-9 * (1.0 + a.norm()));
        }
    }
}

//! The biholomorphism group SU(r, r+b) and its Möbius action.
//!
//! Elements are (2r+b)×(2r+b) block matrices g = [[A, B], [C, D]] with
//! A ∈ M_r, D ∈ M_{r+b}, satisfying g* J g = J for J = diag(I_r, −I_{r+b})
//! and det g = 1. They act on the domain by
//!
//! ```text
//!   g·z = (A z + B)(C z + D)^{-1} ,
//! ```
//!
//! with holomorphic differential dg(z): v ↦ P v Q^{-1}, where Q = C z + D
//! and P = A − (g·z) C, and complex Jacobian
//!
//! ```text
//!   J_g(z) = det(C z + D)^{-p} ,   p = 2r + b .
//! ```
//!
//! The kernel polynomial transforms by
//! h(g·z, g·w) = h(z, w) · det(Cz+D)^{-1} · conj(det(Cw+D))^{-1}, which is
//! the root of every covariance law verified by the experiments.
//!
//! Group elements are sampled by exponentiating pseudo-anti-Hermitian
//! matrices (the Lie algebra su(r, r+b)), so sampled elements satisfy the
//! defining identities to machine precision.

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{complex_gaussian, cr, max_abs, CMatrix};

/// Validation tolerance for [`GroupElement::from_matrix`].
pub const PSEUDO_UNITARY_TOL: f64 = 1e-8;

/// The signature matrix J = diag(I_r, −I_{r+b}).
pub fn j_matrix(dom: &crate::domain::DomainParams) -> CMatrix {
    let r = dom.rows();
    let m = r + dom.cols();
    CMatrix::from_fn(m, m, |i, j| {
        if i != j {
            Complex64::default()
        } else if i < r {
            cr(1.0)
        } else {
            cr(-1.0)
        }
    })
}

/// An element of SU(r, r+b) in block form.
#[derive(Clone, Debug)]
pub struct GroupElement {
    mat: CMatrix,
    dom: crate::domain::DomainParams,
}

impl GroupElement {
    /// The identity element.
    pub fn identity(dom: &crate::domain::DomainParams) -> Self {
        let m = dom.rows() + dom.cols();
        GroupElement {
            mat: CMatrix::identity(m, m),
            dom: *dom,
        }
    }

    /// Wrap a matrix, checking the shape and the pseudo-unitarity identity
    /// g* J g = J (entrywise, tolerance [`PSEUDO_UNITARY_TOL`]).
    pub fn from_matrix(mat: CMatrix, dom: &crate::domain::DomainParams) -> Result<Self> {
        let m = dom.rows() + dom.cols();
        if mat.nrows() != m || mat.ncols() != m {
            return Err(Error::InvalidParam(format!(
                "group element must be {m}x{m} for I_{{{},{}}}",
                dom.r(),
                dom.q()
            )));
        }
        let g = GroupElement { mat, dom: *dom };
        let res = g.pseudo_unitarity_residual();
        if res > PSEUDO_UNITARY_TOL {
            return Err(Error::NotPseudoUnitary(res));
        }
        Ok(g)
    }

    /// The underlying (2r+b)×(2r+b) matrix.
    pub fn matrix(&self) -> &CMatrix {
        &self.mat
    }

    /// Domain this element acts on.
    pub fn domain(&self) -> &crate::domain::DomainParams {
        &self.dom
    }

    /// Block A (r×r).
    pub fn block_a(&self) -> CMatrix {
        let r = self.dom.rows();
        self.mat.view((0, 0), (r, r)).clone_owned()
    }

    /// Block B (r×(r+b)).
    pub fn block_b(&self) -> CMatrix {
        let r = self.dom.rows();
        let q = self.dom.cols();
        self.mat.view((0, r), (r, q)).clone_owned()
    }

    /// Block C ((r+b)×r).
    pub fn block_c(&self) -> CMatrix {
        let r = self.dom.rows();
        let q = self.dom.cols();
        self.mat.view((r, 0), (q, r)).clone_owned()
    }

    /// Block D ((r+b)×(r+b)).
    pub fn block_d(&self) -> CMatrix {
        let r = self.dom.rows();
        let q = self.dom.cols();
        self.mat.view((r, r), (q, q)).clone_owned()
    }

    /// Entrywise residual of g* J g − J.
    pub fn pseudo_unitarity_residual(&self) -> f64 {
        let j = j_matrix(&self.dom);
        max_abs(&(self.mat.adjoint() * &j * &self.mat - &j))
    }

    /// Group multiplication (self ∘ other as maps, i.e. matrix product).
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        assert_eq!(self.dom, other.dom, "composition across domains");
        GroupElement {
            mat: &self.mat * &other.mat,
            dom: self.dom,
        }
    }

    /// Inverse element, J g* J (exact for pseudo-unitary g).
    pub fn inverse(&self) -> GroupElement {
        let j = j_matrix(&self.dom);
        GroupElement {
            mat: &j * self.mat.adjoint() * &j,
            dom: self.dom,
        }
    }
}

/// Möbius action g·z = (Az + B)(Cz + D)^{-1}.
pub fn moebius_apply(g: &GroupElement, z: &CMatrix) -> Result<CMatrix> {
    let num = g.block_a() * z + g.block_b();
    let den = g.block_c() * z + g.block_d();
    let inv = den
        .try_inverse()
        .ok_or_else(|| Error::Singular("C z + D is not invertible".into()))?;
    Ok(num * inv)
}

/// Complex Jacobian determinant J_g(z) = det(Cz + D)^{-p}.
pub fn jacobian_factor(g: &GroupElement, z: &CMatrix) -> Result<Complex64> {
    let det = (g.block_c() * z + g.block_d()).determinant();
    if det.norm() < 1e-14 {
        return Err(Error::Singular("det(C z + D) vanishes".into()));
    }
    Ok(det.powi(-(g.domain().p() as i32)))
}

/// The pair (P, Q) of the holomorphic differential dg(z): v ↦ P v Q^{-1},
/// with Q = Cz + D and P = A − (g·z) C.
pub fn moebius_differential(g: &GroupElement, z: &CMatrix) -> Result<(CMatrix, CMatrix)> {
    let q = g.block_c() * z + g.block_d();
    if q.determinant().norm() < 1e-14 {
        return Err(Error::Singular("det(C z + D) vanishes".into()));
    }
    let gz = moebius_apply(g, z)?;
    let p = g.block_a() - gz * g.block_c();
    Ok((p, q))
}

/// The differential dg(z) as an n×n matrix in the matrix-unit basis.
pub fn differential_action_matrix(g: &GroupElement, z: &CMatrix) -> Result<CMatrix> {
    let dom = *g.domain();
    let (p, q) = moebius_differential(g, z)?;
    let qinv = q
        .try_inverse()
        .ok_or_else(|| Error::Singular("C z + D is not invertible".into()))?;
    let n = dom.n();
    let mut m = CMatrix::zeros(n, n);
    for beta in 0..n {
        let col = &p * dom.unit(beta) * &qinv;
        let flat = dom.flatten(&col);
        for alpha in 0..n {
            m[(alpha, beta)] = flat[alpha];
        }
    }
    Ok(m)
}

/// A random element of the Lie algebra su(r, r+b): block form
/// [[α, β], [β*, δ]] with α, δ anti-Hermitian and tr α + tr δ = 0, scaled
/// entrywise by `scale`.
pub fn sample_algebra_element<R: Rng + ?Sized>(
    rng: &mut R,
    scale: f64,
    dom: &crate::domain::DomainParams,
) -> CMatrix {
    let r = dom.rows();
    let q = dom.cols();
    let m = r + q;
    let mut x = CMatrix::zeros(m, m);
    // Anti-Hermitian diagonal blocks.
    for (off, sz) in [(0usize, r), (r, q)] {
        for i in 0..sz {
            for j in 0..i {
                let z = complex_gaussian(rng) * cr(scale);
                x[(off + i, off + j)] = z;
                x[(off + j, off + i)] = -z.conj();
            }
            x[(off + i, off + i)] = Complex64::new(0.0, crate::linalg::standard_normal(rng) * scale);
        }
    }
    // Balance the trace: subtract the mean imaginary part.
    let tr = x.trace();
    let shift = Complex64::new(0.0, tr.im / m as f64);
    for i in 0..m {
        x[(i, i)] -= shift;
    }
    // Off-diagonal blocks: β free, lower-left block equals β*.
    for i in 0..r {
        for l in 0..q {
            let z = complex_gaussian(rng) * cr(scale);
            x[(i, r + l)] = z;
            x[(r + l, i)] = z.conj();
        }
    }
    x
}

/// A random group element exp(X) for X a random su(r, r+b) element of the
/// given scale. Satisfies g* J g = J and det g = 1 to machine precision.
pub fn sample_group_element<R: Rng + ?Sized>(
    rng: &mut R,
    scale: f64,
    dom: &crate::domain::DomainParams,
) -> GroupElement {
    let x = sample_algebra_element(rng, scale, dom);
    let g = GroupElement {
        mat: x.exp(),
        dom: *dom,
    };
    debug_assert!(g.pseudo_unitarity_residual() < 1e-10);
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{h_poly, sample_interior, DomainParams};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn dom(r: usize, b: usize) -> DomainParams {
        DomainParams::new(r, b).unwrap()
    }

    #[test]
    fn algebra_elements_satisfy_lie_algebra_identities() {
        let d = dom(2, 1);
        let j = j_matrix(&d);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..5 {
            let x = sample_algebra_element(&mut rng, 0.4, &d);
            // X* J + J X = 0 and tr X = 0.
            assert!(max_abs(&(x.adjoint() * &j + &j * &x)) < 1e-13);
            assert!(x.trace().norm() < 1e-13);
        }
    }

    #[test]
    fn sampled_elements_are_pseudo_unitary_with_unit_determinant() {
        for (r, b) in [(1usize, 0usize), (2, 0), (2, 3)] {
            let d = dom(r, b);
            let mut rng = ChaCha8Rng::seed_from_u64(2);
            for _ in 0..5 {
                let g = sample_group_element(&mut rng, 0.5, &d);
                assert!(g.pseudo_unitarity_residual() < 1e-10);
                let det = g.matrix().determinant();
                assert!((det.norm() - 1.0).abs() < 1e-12);
                assert!((det - cr(1.0)).norm() < 1e-11, "det {det}");
            }
        }
    }

    #[test]
    fn inverse_and_compose_are_consistent() {
        let d = dom(2, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = sample_group_element(&mut rng, 0.6, &d);
        let gi = g.inverse();
        let prod = g.compose(&gi);
        let m = d.rows() + d.cols();
        assert!(max_abs(&(prod.matrix() - CMatrix::identity(m, m))) < 1e-11);
    }

    #[test]
    fn moebius_action_is_a_group_action() {
        let d = dom(2, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let g = sample_group_element(&mut rng, 0.4, &d);
        let h = sample_group_element(&mut rng, 0.4, &d);
        let z = sample_interior(&mut rng, 0.5, &d);
        let lhs = moebius_apply(&g, &moebius_apply(&h, &z).unwrap()).unwrap();
        let rhs = moebius_apply(&g.compose(&h), &z).unwrap();
        assert!(max_abs(&(lhs - rhs)) < 1e-11);
    }

    #[test]
    fn moebius_preserves_the_domain() {
        let d = dom(2, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..5 {
            let g = sample_group_element(&mut rng, 0.7, &d);
            let z = sample_interior(&mut rng, 0.8, &d);
            let gz = moebius_apply(&g, &z).unwrap();
            assert!(crate::domain::is_interior(&gz));
        }
    }

    #[test]
    fn identity_fixes_everything() {
        let d = dom(2, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let g = GroupElement::identity(&d);
        let z = sample_interior(&mut rng, 0.9, &d);
        assert!(max_abs(&(moebius_apply(&g, &z).unwrap() - &z)) < 1e-15);
        assert!((jacobian_factor(&g, &z).unwrap() - cr(1.0)).norm() < 1e-15);
    }

    #[test]
    fn kernel_transformation_law() {
        // h(gz, gw) = h(z,w) · det(Cz+D)^{-1} · conj(det(Cw+D))^{-1}.
        let d = dom(2, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let g = sample_group_element(&mut rng, 0.5, &d);
            let z = sample_interior(&mut rng, 0.6, &d);
            let w = sample_interior(&mut rng, 0.7, &d);
            let gz = moebius_apply(&g, &z).unwrap();
            let gw = moebius_apply(&g, &w).unwrap();
            let dz = (g.block_c() * &z + g.block_d()).determinant();
            let dw = (g.block_c() * &w + g.block_d()).determinant();
            let lhs = h_poly(&gz, &gw);
            let rhs = h_poly(&z, &w) / (dz * dw.conj());
            assert!((lhs - rhs).norm() / rhs.norm() < 1e-11);
        }
    }

    #[test]
    fn jacobian_cocycle() {
        // J_{gh}(z) = J_g(h·z) · J_h(z).
        let d = dom(2, 0);
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let g = sample_group_element(&mut rng, 0.5, &d);
        let h = sample_group_element(&mut rng, 0.5, &d);
        let z = sample_interior(&mut rng, 0.5, &d);
        let hz = moebius_apply(&h, &z).unwrap();
        let lhs = jacobian_factor(&g.compose(&h), &z).unwrap();
        let rhs = jacobian_factor(&g, &hz).unwrap() * jacobian_factor(&h, &z).unwrap();
        assert!((lhs - rhs).norm() / rhs.norm() < 1e-10);
    }

    #[test]
    fn differential_determinant_matches_jacobian() {
        // det of the n×n differential equals det(g)^{q} det(Cz+D)^{-p} = J_g(z).
        let d = dom(2, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let g = sample_group_element(&mut rng, 0.4, &d);
        let z = sample_interior(&mut rng, 0.5, &d);
        let dg = differential_action_matrix(&g, &z).unwrap();
        let lhs = dg.determinant();
        let rhs = jacobian_factor(&g, &z).unwrap();
        assert!((lhs - rhs).norm() / rhs.norm() < 1e-10);
    }

    #[test]
    fn block_unitary_elements_act_linearly() {
        // g = diag(U, W) with U, W unitary acts linearly by z ↦ U z W^{-1},
        // and its Jacobian has modulus 1.
        let d = dom(2, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        // Build a block-diagonal special pseudo-unitary element by zeroing
        // the off-diagonal blocks of an algebra element before exponentiating.
        let mut x = sample_algebra_element(&mut rng, 0.5, &d);
        let r = d.rows();
        let q = d.cols();
        for i in 0..r {
            for l in 0..q {
                x[(i, r + l)] = Complex64::default();
                x[(r + l, i)] = Complex64::default();
            }
        }
        let g = GroupElement::from_matrix(x.exp(), &d).unwrap();
        let z = sample_interior(&mut rng, 0.6, &d);
        let gz = moebius_apply(&g, &z).unwrap();
        let lin = g.block_a() * &z * g.block_d().try_inverse().unwrap();
        assert!(max_abs(&(gz - lin)) < 1e-12);
        let jac = jacobian_factor(&g, &z).unwrap();
        assert!((jac.norm() - 1.0).abs() < 1e-11);
    }

    #[test]
    fn from_matrix_rejects_garbage() {
        let d = dom(2, 0);
        let m = CMatrix::identity(4, 4) * cr(1.5);
        match GroupElement::from_matrix(m, &d) {
            Err(Error::NotPseudoUnitary(res)) => assert!(res > 1.0),
            other => panic!("expected pseudo-unitarity rejection, got {other:?}"),
        }
        let wrong_shape = CMatrix::identity(3, 3);
        assert!(matches!(
            GroupElement::from_matrix(wrong_shape, &d),
            Err(Error::InvalidParam(_))
        ));
    }
}

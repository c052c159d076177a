//! Jordan-triple structure of the matrix ball domains I_{r,r+b}.
//!
//! The ambient space is V = M_{r,r+b}(ℂ), complex r×(r+b) matrices with the
//! Hermitian inner product ⟨z, w⟩ = tr(z w*). The domain is the open unit
//! ball of the spectral norm (largest singular value < 1). Its geometry is
//! encoded in the Jordan triple product
//!
//! ```text
//!   {x ȳ z} = x y* z + z y* x ,
//! ```
//!
//! from which everything else is built by exact matrix arithmetic:
//!
//! * `D(z, v̄) w = {z v̄ w}`, realized as the pair (z v*, −v* z) acting by
//!   w ↦ a·w − w·d ([`KEndo`]);
//! * the quadratic map `Q(z) v̄ = z v* z`;
//! * the Bergman operator `B(z, w̄) v = (I − z w*) v (I − w* z)`;
//! * the kernel polynomial `h(z, w) = det(I_r − z w*)`, whose p-th power is
//!   the determinant of B(z, w̄) on V (p = 2r + b);
//! * quasi-inverses `w^{z̄} = (I − w z*)^{-1} w` and the boundary-to-interior
//!   map [`q_map`].
//!
//! Structure constants of I_{r,r+b}: rank r, characteristic multiplicities
//! a = 2 (for r ≥ 2; a = 0 when r = 1) and b, dimension n = r(r+b),
//! genus p = 2r + b, and q = n/r = r + b. The domain is of tube type
//! exactly when b = 0 (square matrices).
//!
//! Numbers here are exact up to rounding: no derivatives, no randomness
//! except the explicit sampling helpers.

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{cr, gaussian_matrix, singular_values, spectral_norm, unit_matrix, CMatrix};

/// Structure constants of the domain I_{r,r+b}.
///
/// Matrices in V have r rows and r + b columns; `r` is the rank and `b ≥ 0`
/// the excess of columns over rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DomainParams {
    r: usize,
    b: usize,
}

impl DomainParams {
    /// Domain I_{r,r+b}. The rank must be at least 1.
    pub fn new(r: usize, b: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidParam("rank r must be at least 1".into()));
        }
        Ok(DomainParams { r, b })
    }

    /// Rank of the domain (number of matrix rows).
    pub fn r(&self) -> usize {
        self.r
    }

    /// Column excess b; the domain is of tube type iff b = 0.
    pub fn b(&self) -> usize {
        self.b
    }

    /// Multiplicity a of the restricted root system: 2 for r ≥ 2, else 0.
    pub fn a(&self) -> usize {
        if self.r >= 2 {
            2
        } else {
            0
        }
    }

    /// Complex dimension n = r(r+b) of V.
    pub fn n(&self) -> usize {
        self.r * (self.r + self.b)
    }

    /// Genus p = (r−1)a + b + 2 = 2r + b.
    pub fn p(&self) -> usize {
        2 * self.r + self.b
    }

    /// q = n/r = r + b, the number of matrix columns.
    pub fn q(&self) -> usize {
        self.r + self.b
    }

    /// Number of matrix rows (alias of the rank).
    pub fn rows(&self) -> usize {
        self.r
    }

    /// Number of matrix columns, r + b.
    pub fn cols(&self) -> usize {
        self.r + self.b
    }

    /// True when the domain is of tube type (b = 0).
    pub fn is_tube(&self) -> bool {
        self.b == 0
    }

    /// The zero matrix of V.
    pub fn zero(&self) -> CMatrix {
        CMatrix::zeros(self.rows(), self.cols())
    }

    /// The matrix unit e_α = E_{il} for the flat index α = i·cols + l.
    pub fn unit(&self, alpha: usize) -> CMatrix {
        let (i, l) = self.unravel(alpha);
        unit_matrix(self.rows(), self.cols(), i, l)
    }

    /// All n matrix units in flat (row-major) order.
    pub fn matrix_units(&self) -> Vec<CMatrix> {
        (0..self.n()).map(|alpha| self.unit(alpha)).collect()
    }

    /// Flat index α = i·cols + l of the unit E_{il}.
    pub fn ravel(&self, i: usize, l: usize) -> usize {
        assert!(i < self.rows() && l < self.cols(), "unit index out of range");
        i * self.cols() + l
    }

    /// Inverse of [`ravel`](Self::ravel).
    pub fn unravel(&self, alpha: usize) -> (usize, usize) {
        assert!(alpha < self.n(), "flat index out of range");
        (alpha / self.cols(), alpha % self.cols())
    }

    /// Flatten a matrix of V to coordinates in the matrix-unit basis.
    pub fn flatten(&self, z: &CMatrix) -> Vec<Complex64> {
        assert_shape(self, z);
        (0..self.n())
            .map(|alpha| {
                let (i, l) = self.unravel(alpha);
                z[(i, l)]
            })
            .collect()
    }

    /// The standard frame of diagonal tripotents e_j = E_{jj}.
    pub fn frame(&self) -> Frame {
        let units: Vec<CMatrix> = (0..self.r)
            .map(|j| unit_matrix(self.rows(), self.cols(), j, j))
            .collect();
        let mut maximal = self.zero();
        for e in &units {
            maximal += e;
        }
        Frame { units, maximal }
    }
}

/// The standard frame e_1, …, e_r of mutually orthogonal minimal tripotents
/// (diagonal matrix units), together with their sum, a maximal tripotent.
#[derive(Clone, Debug)]
pub struct Frame {
    /// The minimal tripotents e_j = E_{jj}, j = 1..r.
    pub units: Vec<CMatrix>,
    /// The maximal tripotent e = e_1 + … + e_r.
    pub maximal: CMatrix,
}

fn assert_shape(dom: &DomainParams, z: &CMatrix) {
    assert!(
        z.nrows() == dom.rows() && z.ncols() == dom.cols(),
        "matrix shape {}x{} does not match domain I_{{{},{}}}",
        z.nrows(),
        z.ncols(),
        dom.r(),
        dom.q()
    );
}

/// Jordan triple product {x ȳ z} = x y* z + z y* x.
pub fn triple_product(x: &CMatrix, y: &CMatrix, z: &CMatrix) -> CMatrix {
    let ya = y.adjoint();
    x * &ya * z + z * &ya * x
}

/// The operator D(z, v̄) = {z v̄ ·} as an element of the complexified
/// structure algebra, i.e. the pair (z v*, −v* z) of [`KEndo`].
pub fn d_endo(z: &CMatrix, v: &CMatrix) -> KEndo {
    let va = v.adjoint();
    KEndo {
        a: z * &va,
        d: -(&va * z),
    }
}

/// Quadratic map Q(z) v̄ = z v* z.
pub fn quadratic_map(z: &CMatrix, v: &CMatrix) -> CMatrix {
    z * v.adjoint() * z
}

/// Bergman operator B(z, w̄) applied to v: (I − z w*) v (I − w* z).
pub fn bergman_apply(z: &CMatrix, w: &CMatrix, v: &CMatrix) -> CMatrix {
    let r = z.nrows();
    let q = z.ncols();
    let left = CMatrix::identity(r, r) - z * w.adjoint();
    let right = CMatrix::identity(q, q) - w.adjoint() * z;
    left * v * right
}

/// The Bergman operator B(z, w̄) as an n×n matrix in the matrix-unit basis.
pub fn bergman_action_matrix(dom: &DomainParams, z: &CMatrix, w: &CMatrix) -> CMatrix {
    assert_shape(dom, z);
    assert_shape(dom, w);
    let n = dom.n();
    let mut m = CMatrix::zeros(n, n);
    for beta in 0..n {
        let col = bergman_apply(z, w, &dom.unit(beta));
        let flat = dom.flatten(&col);
        for alpha in 0..n {
            m[(alpha, beta)] = flat[alpha];
        }
    }
    m
}

/// Kernel polynomial h(z, w) = det(I_r − z w*), holomorphic in z and
/// antiholomorphic in w. On the diagonal h(z, z) = Π_j (1 − s_j(z)²) > 0
/// for interior z.
pub fn h_poly(z: &CMatrix, w: &CMatrix) -> Complex64 {
    let r = z.nrows();
    (CMatrix::identity(r, r) - z * w.adjoint()).determinant()
}

/// Hermitian inner product ⟨z, w⟩ = tr(z w*).
pub fn inner_product(z: &CMatrix, w: &CMatrix) -> Complex64 {
    assert_eq!(z.shape(), w.shape(), "inner product of mismatched shapes");
    z.iter().zip(w.iter()).map(|(a, b)| a * b.conj()).sum()
}

/// Quasi-inverse w^{z̄} = (I − w z*)^{-1} w, defined whenever I − w z* is
/// invertible (in particular for any interior pair).
pub fn quasi_inverse(w: &CMatrix, z: &CMatrix) -> Result<CMatrix> {
    let r = w.nrows();
    let m = CMatrix::identity(r, r) - w * z.adjoint();
    let inv = m
        .try_inverse()
        .ok_or_else(|| Error::Singular("I - w z* is not invertible".into()))?;
    Ok(inv * w)
}

/// The map q(z) = (I − z̄ zᵀ)^{-1} z̄ = conj(z^{z̄}).
///
/// For interior z it satisfies conj(Δ(z)) / h(z, z) = Δ(q(z)) for the full
/// leading minor Δ = Δ_r, which is what makes it appear in the eigenvalue
/// identities of the Szegő-type transforms.
pub fn q_map(z: &CMatrix) -> Result<CMatrix> {
    let r = z.nrows();
    let zc = z.conjugate();
    let m = CMatrix::identity(r, r) - &zc * z.transpose();
    let inv = m
        .try_inverse()
        .ok_or_else(|| Error::Singular("I - z̄ zᵀ is not invertible".into()))?;
    Ok(inv * zc)
}

/// Leading principal minor Δ_j(z) = det(z[0..j, 0..j]), 1 ≤ j ≤ r.
pub fn leading_minor(z: &CMatrix, j: usize) -> Complex64 {
    assert!(j >= 1 && j <= z.nrows(), "minor order out of range");
    z.view((0, 0), (j, j)).clone_owned().determinant()
}

/// Singular-value data of a point of V.
#[derive(Clone, Debug)]
pub struct Polar {
    /// Singular values in non-increasing order.
    pub singular_values: Vec<f64>,
    /// True when the largest singular value is strictly below 1.
    pub interior: bool,
}

/// Singular values of z and the interiority flag.
pub fn polar(z: &CMatrix) -> Polar {
    let sv = singular_values(z);
    let interior = sv.first().map(|&s| s < 1.0).unwrap_or(true);
    Polar {
        singular_values: sv,
        interior,
    }
}

/// True when z lies in the open domain (spectral norm < 1).
pub fn is_interior(z: &CMatrix) -> bool {
    spectral_norm(z) < 1.0
}

/// A random interior point with the prescribed spectral norm: a complex
/// Gaussian matrix rescaled so its largest singular value equals `radius`.
pub fn sample_interior<R: Rng + ?Sized>(rng: &mut R, radius: f64, dom: &DomainParams) -> CMatrix {
    assert!(radius > 0.0 && radius < 1.0, "radius must lie in (0, 1)");
    loop {
        let g = gaussian_matrix(rng, dom.rows(), dom.cols());
        let s = spectral_norm(&g);
        if s > 1e-8 {
            return g * cr(radius / s);
        }
    }
}

/// An element of the complexified structure algebra k_C of the domain,
/// stored as the pair (a, d) with a ∈ M_r(ℂ), d ∈ M_{r+b}(ℂ), acting on V by
///
/// ```text
///   w  ↦  a·w − w·d .
/// ```
///
/// The pair representation is unique once normalized; sums and scalar
/// multiples act blockwise. `D(z, v̄)` corresponds to (z v*, −v* z).
#[derive(Clone, Debug)]
pub struct KEndo {
    /// Left (row-side) block, r×r.
    pub a: CMatrix,
    /// Right (column-side) block, (r+b)×(r+b); acts by right multiplication
    /// with a minus sign.
    pub d: CMatrix,
}

impl KEndo {
    /// The zero endomorphism.
    pub fn zero(dom: &DomainParams) -> Self {
        KEndo {
            a: CMatrix::zeros(dom.rows(), dom.rows()),
            d: CMatrix::zeros(dom.cols(), dom.cols()),
        }
    }

    /// The identity of V in normalized pair form: ((q/p) I_r, −(r/p) I_{r+b}).
    ///
    /// This is the trace-normalized representative (tr a + tr d = 0), which
    /// is the one lying in the structure algebra of the group.
    pub fn identity(dom: &DomainParams) -> Self {
        let p = dom.p() as f64;
        let qf = dom.q() as f64;
        let rf = dom.r() as f64;
        KEndo {
            a: CMatrix::identity(dom.rows(), dom.rows()) * cr(qf / p),
            d: CMatrix::identity(dom.cols(), dom.cols()) * cr(-rf / p),
        }
    }

    /// Apply to a point of V: w ↦ a·w − w·d.
    pub fn apply(&self, w: &CMatrix) -> CMatrix {
        &self.a * w - w * &self.d
    }

    /// The action on V as an n×n matrix in the matrix-unit basis.
    pub fn action_matrix(&self, dom: &DomainParams) -> CMatrix {
        assert_eq!(self.a.nrows(), dom.rows(), "pair shape mismatch");
        assert_eq!(self.d.nrows(), dom.cols(), "pair shape mismatch");
        let n = dom.n();
        let mut m = CMatrix::zeros(n, n);
        for beta in 0..n {
            let col = self.apply(&dom.unit(beta));
            let flat = dom.flatten(&col);
            for alpha in 0..n {
                m[(alpha, beta)] = flat[alpha];
            }
        }
        m
    }

    /// Split into the two ideals of k_C: the part k^(1) generated by scalar
    /// right blocks and the complement k^(2) with traceless-normalized left
    /// block. Concretely
    ///
    /// ```text
    ///   k1 = (a, −(tr a / (r+b)) I),   k2 = (0, d + (tr a / (r+b)) I),
    /// ```
    ///
    /// so that k1 + k2 acts identically to the original pair.
    pub fn split(&self) -> (KEndo, KEndo) {
        let q = self.d.nrows();
        let t = self.a.trace() / cr(q as f64);
        let eye = CMatrix::identity(q, q);
        let k1 = KEndo {
            a: self.a.clone(),
            d: &eye * (-t),
        };
        let k2 = KEndo {
            a: CMatrix::zeros(self.a.nrows(), self.a.ncols()),
            d: &self.d + &eye * t,
        };
        (k1, k2)
    }

    /// In-place update self += c · other.
    pub fn add_scaled(&mut self, c: Complex64, other: &KEndo) {
        self.a += &other.a * c;
        self.d += &other.d * c;
    }

    /// Scalar multiple.
    pub fn scaled(&self, c: Complex64) -> KEndo {
        KEndo {
            a: &self.a * c,
            d: &self.d * c,
        }
    }

    /// Blockwise difference.
    pub fn sub(&self, other: &KEndo) -> KEndo {
        KEndo {
            a: &self.a - &other.a,
            d: &self.d - &other.d,
        }
    }

    /// Frobenius norm over both blocks.
    pub fn norm(&self) -> f64 {
        (self.a.norm_squared() + self.d.norm_squared()).sqrt()
    }

    /// Largest entry modulus over both blocks.
    pub fn max_abs(&self) -> f64 {
        crate::linalg::max_abs(&self.a).max(crate::linalg::max_abs(&self.d))
    }

    /// Trace of the action on V: q·tr(a) − r·tr(d).
    pub fn action_trace(&self, dom: &DomainParams) -> Complex64 {
        self.a.trace() * cr(dom.q() as f64) - self.d.trace() * cr(dom.r() as f64)
    }
}

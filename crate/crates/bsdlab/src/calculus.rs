//! Finite-difference Wirtinger calculus and the twisted Hua operators.
//!
//! Complex partial derivatives are assembled from real central differences:
//! for a direction v,
//!
//! ```text
//!   ∂_v  f = ½ (D_v f − i D_{iv} f) ,    ∂̄_v f = ½ (D_v f + i D_{iv} f) ,
//! ```
//!
//! where D_v is the derivative of t ↦ f(z + t v) at t = 0, discretized by a
//! 2-point (order 2) or 4-point (order 4) central stencil, optionally with
//! one Richardson extrapolation step (raising the order by 2).
//!
//! On top of this sit the second-order operators of interest. Writing
//! v_1, …, v_n for the matrix-unit basis, h = h(z, z), and B = B(z, z̄),
//! the twisted Hua operator and its order-swapped companion are
//!
//! ```text
//!   H  F = Σ_{k,l} h^{−ν} ∂_k ( h^ν ∂̄_l F ) · D(B v_l, v̄_k) ,
//!   H' F = Σ_{k,l} ∂̄_l ( h^{−ν} ∂_k ( h^ν F ) ) · D(B v_l, v̄_k) ,
//! ```
//!
//! both valued in the structure algebra ([`KEndo`]). At ν = 0 the two
//! coincide; at the origin H reduces to the untwisted [`hua_origin`]. On
//! K-invariant functions H decomposes along the frame into the scalar
//! radial operators [`radial_hua_j`] acting on the singular-value
//! coordinates; [`radial_consistency`] checks 4·H F = Σ_j H_j F · D(e_j, ē_j)
//! at a frame point (restricted to the first structure-algebra component on
//! non-tube domains, where only that part is determined by the radial data).

use num_complex::Complex64;

use crate::domain::{bergman_apply, d_endo, h_poly, DomainParams, KEndo};
use crate::error::{Error, Result};
use crate::group::{moebius_apply, GroupElement};
use crate::linalg::{cr, CMatrix};

/// Smallest h(z, z) at which the second-order stencils are trusted; points
/// closer to the boundary are rejected.
pub const BOUNDARY_MARGIN: f64 = 1e-3;

/// Coordinates closer than this to a radial singularity (t_j = 0 or
/// |t_j| = |t_k|) are rejected.
pub const RADIAL_SINGULARITY_MARGIN: f64 = 1e-8;

/// Stencil order of the central differences.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FdOrder {
    /// 2-point stencil, error O(h²).
    Two,
    /// 4-point stencil, error O(h⁴).
    Four,
}

impl FdOrder {
    /// Numeric order of accuracy.
    pub fn value(self) -> u32 {
        match self {
            FdOrder::Two => 2,
            FdOrder::Four => 4,
        }
    }

    /// Parse from the numeric order (2 or 4).
    pub fn from_value(v: u32) -> Result<Self> {
        match v {
            2 => Ok(FdOrder::Two),
            4 => Ok(FdOrder::Four),
            other => Err(Error::InvalidParam(format!(
                "finite-difference order must be 2 or 4, got {other}"
            ))),
        }
    }
}

/// A finite-difference scheme: step size, stencil order, and whether to
/// apply one Richardson extrapolation step (halving the step and raising
/// the effective order by 2).
#[derive(Clone, Copy, Debug)]
pub struct FdScheme {
    /// Base step size h.
    pub step: f64,
    /// Stencil order.
    pub order: FdOrder,
    /// One Richardson extrapolation pass.
    pub richardson: bool,
}

impl Default for FdScheme {
    fn default() -> Self {
        FdScheme {
            step: 1e-3,
            order: FdOrder::Four,
            richardson: false,
        }
    }
}

impl FdScheme {
    /// Validated constructor; the step must lie in [1e−7, 1e−1].
    pub fn new(step: f64, order: FdOrder, richardson: bool) -> Result<Self> {
        if !(1e-7..=1e-1).contains(&step) {
            return Err(Error::InvalidParam(format!(
                "finite-difference step {step:e} outside [1e-7, 1e-1]"
            )));
        }
        Ok(FdScheme {
            step,
            order,
            richardson,
        })
    }

    /// Effective order of accuracy, counting Richardson extrapolation.
    pub fn effective_order(&self) -> u32 {
        self.order.value() + if self.richardson { 2 } else { 0 }
    }
}

/// Values a central difference can combine: complex scalars, matrices, and
/// coordinate vectors.
trait FdValue: Sized {
    fn lin2(a: Self, ca: f64, b: Self, cb: f64) -> Self;
    fn cmul(self, c: Complex64) -> Self;
}

impl FdValue for Complex64 {
    fn lin2(a: Self, ca: f64, b: Self, cb: f64) -> Self {
        a * ca + b * cb
    }
    fn cmul(self, c: Complex64) -> Self {
        self * c
    }
}

impl FdValue for CMatrix {
    fn lin2(a: Self, ca: f64, b: Self, cb: f64) -> Self {
        a * cr(ca) + b * cr(cb)
    }
    fn cmul(self, c: Complex64) -> Self {
        self * c
    }
}

impl FdValue for Vec<Complex64> {
    fn lin2(a: Self, ca: f64, b: Self, cb: f64) -> Self {
        a.iter()
            .zip(b.iter())
            .map(|(x, y)| x * ca + y * cb)
            .collect()
    }
    fn cmul(self, c: Complex64) -> Self {
        self.into_iter().map(|x| x * c).collect()
    }
}

/// Central difference of t ↦ f(z + t·dir) at t = 0 with a fixed step.
fn central_once<T: FdValue, F: Fn(&CMatrix) -> T>(
    f: &F,
    z: &CMatrix,
    dir: &CMatrix,
    h: f64,
    order: FdOrder,
) -> T {
    let at = |t: f64| f(&(z + dir * cr(t)));
    match order {
        FdOrder::Two => T::lin2(at(h), 0.5 / h, at(-h), -0.5 / h),
        FdOrder::Four => {
            let inner = T::lin2(at(h), 8.0, at(-h), -8.0);
            let outer = T::lin2(at(2.0 * h), -1.0, at(-2.0 * h), 1.0);
            T::lin2(inner, 1.0 / (12.0 * h), outer, 1.0 / (12.0 * h))
        }
    }
}

/// Central difference with optional Richardson extrapolation.
fn real_dir_derivative<T: FdValue, F: Fn(&CMatrix) -> T>(
    f: &F,
    z: &CMatrix,
    dir: &CMatrix,
    scheme: &FdScheme,
) -> T {
    let h = scheme.step;
    if !scheme.richardson {
        return central_once(f, z, dir, h, scheme.order);
    }
    let factor = (2.0_f64).powi(scheme.order.value() as i32);
    let fine = central_once(f, z, dir, 0.5 * h, scheme.order);
    let coarse = central_once(f, z, dir, h, scheme.order);
    T::lin2(
        fine,
        factor / (factor - 1.0),
        coarse,
        -1.0 / (factor - 1.0),
    )
}

fn wirtinger<T: FdValue + Clone, F: Fn(&CMatrix) -> T>(
    f: &F,
    z: &CMatrix,
    dir: &CMatrix,
    scheme: &FdScheme,
    anti: bool,
) -> T {
    let d_re = real_dir_derivative(f, z, dir, scheme);
    let idir = dir * Complex64::new(0.0, 1.0);
    let d_im = real_dir_derivative(f, z, &idir, scheme);
    let sign = if anti { 1.0 } else { -1.0 };
    T::lin2(d_re, 0.5, d_im.cmul(Complex64::new(0.0, 0.5 * sign)), 1.0)
}

/// Holomorphic Wirtinger derivative ∂_dir f(z).
pub fn holo_partial<F: Fn(&CMatrix) -> Complex64>(
    f: &F,
    z: &CMatrix,
    dir: &CMatrix,
    scheme: &FdScheme,
) -> Complex64 {
    wirtinger(f, z, dir, scheme, false)
}

/// Antiholomorphic Wirtinger derivative ∂̄_dir f(z).
pub fn antiholo_partial<F: Fn(&CMatrix) -> Complex64>(
    f: &F,
    z: &CMatrix,
    dir: &CMatrix,
    scheme: &FdScheme,
) -> Complex64 {
    wirtinger(f, z, dir, scheme, true)
}

/// ∂_dir of a matrix-valued function, entrywise.
pub fn holo_partial_matrix<F: Fn(&CMatrix) -> CMatrix>(
    f: &F,
    z: &CMatrix,
    dir: &CMatrix,
    scheme: &FdScheme,
) -> CMatrix {
    wirtinger(f, z, dir, scheme, false)
}

/// ∂̄_dir of a matrix-valued function, entrywise.
pub fn antiholo_partial_matrix<F: Fn(&CMatrix) -> CMatrix>(
    f: &F,
    z: &CMatrix,
    dir: &CMatrix,
    scheme: &FdScheme,
) -> CMatrix {
    wirtinger(f, z, dir, scheme, true)
}

fn antiholo_partial_vec<F: Fn(&CMatrix) -> Vec<Complex64>>(
    f: &F,
    z: &CMatrix,
    dir: &CMatrix,
    scheme: &FdScheme,
) -> Vec<Complex64> {
    wirtinger(f, z, dir, scheme, true)
}

/// Gradient matrix of holomorphic partials, G_{il} = ∂_{E_il} f(z).
pub fn holo_gradient<F: Fn(&CMatrix) -> Complex64>(
    f: &F,
    z: &CMatrix,
    dom: &DomainParams,
    scheme: &FdScheme,
) -> CMatrix {
    CMatrix::from_fn(dom.rows(), dom.cols(), |i, l| {
        let dir = crate::linalg::unit_matrix(dom.rows(), dom.cols(), i, l);
        holo_partial(f, z, &dir, scheme)
    })
}

/// Gradient matrix of antiholomorphic partials, G_{il} = ∂̄_{E_il} f(z).
pub fn antiholo_gradient<F: Fn(&CMatrix) -> Complex64>(
    f: &F,
    z: &CMatrix,
    dom: &DomainParams,
    scheme: &FdScheme,
) -> CMatrix {
    CMatrix::from_fn(dom.rows(), dom.cols(), |i, l| {
        let dir = crate::linalg::unit_matrix(dom.rows(), dom.cols(), i, l);
        antiholo_partial(f, z, &dir, scheme)
    })
}

/// Mixed complex Hessian H_{αβ} = ∂_α ∂̄_β f(z) in the flat matrix-unit
/// indexing (n×n).
pub fn mixed_hessian<F: Fn(&CMatrix) -> Complex64>(
    f: &F,
    z: &CMatrix,
    dom: &DomainParams,
    scheme: &FdScheme,
) -> CMatrix {
    let n = dom.n();
    let units = dom.matrix_units();
    let mut hess = CMatrix::zeros(n, n);
    for (beta, eb) in units.iter().enumerate() {
        let inner = |y: &CMatrix| antiholo_partial(f, y, eb, scheme);
        for (alpha, ea) in units.iter().enumerate() {
            hess[(alpha, beta)] = holo_partial(&inner, z, ea, scheme);
        }
    }
    hess
}

/// Residual of the closed-form holomorphic gradient of z ↦ h(z, w)^s
/// against the finite-difference gradient:
///
/// ```text
///   ∂ h(·, w)^s (z) = −s · h(z, w)^s · conj( w^{z̄} ) ,
/// ```
///
/// returned as max-abs difference over max(1, max-abs closed form).
pub fn holo_derivative_check(
    s: Complex64,
    z: &CMatrix,
    w: &CMatrix,
    dom: &DomainParams,
    scheme: &FdScheme,
) -> Result<f64> {
    let hzw = h_poly(z, w);
    if hzw.norm() < 1e-12 {
        return Err(Error::Singular("h(z, w) vanishes".into()));
    }
    let f = move |y: &CMatrix| (h_poly(y, w).ln() * s).exp();
    let numeric = holo_gradient(&f, z, dom, scheme);
    let closed = crate::domain::quasi_inverse(w, z)?.conjugate() * (-s * (hzw.ln() * s).exp());
    let diff = crate::linalg::max_abs(&(numeric - &closed));
    Ok(diff / crate::linalg::max_abs(&closed).max(1.0))
}

/// Untwisted Hua operator at the origin:
/// Σ_{α,β} ∂_α ∂̄_β f(0) · D(e_α, ē_β).
pub fn hua_origin<F: Fn(&CMatrix) -> Complex64>(
    f: &F,
    dom: &DomainParams,
    scheme: &FdScheme,
) -> KEndo {
    let zero = dom.zero();
    let hess = mixed_hessian(f, &zero, dom, scheme);
    let units = dom.matrix_units();
    let mut out = KEndo::zero(dom);
    for (alpha, ea) in units.iter().enumerate() {
        for (beta, eb) in units.iter().enumerate() {
            out.add_scaled(hess[(alpha, beta)], &d_endo(ea, eb));
        }
    }
    out
}

fn ensure_interior_margin(z: &CMatrix) -> Result<f64> {
    let h = h_poly(z, z).re;
    if h < BOUNDARY_MARGIN {
        return Err(Error::BoundaryProximity {
            h,
            min: BOUNDARY_MARGIN,
        });
    }
    Ok(h)
}

/// Twisted Hua operator
/// H F(z) = Σ_{k,l} h^{−ν} ∂_k ( h^ν ∂̄_l F ) (z) · D(B(z, z̄) v_l, v̄_k).
pub fn hua_general<F: Fn(&CMatrix) -> Complex64>(
    f: &F,
    z: &CMatrix,
    nu: f64,
    dom: &DomainParams,
    scheme: &FdScheme,
) -> Result<KEndo> {
    let hz = ensure_interior_margin(z)?;
    let units = dom.matrix_units();
    let bv: Vec<CMatrix> = units.iter().map(|v| bergman_apply(z, z, v)).collect();
    // W(y) = h(y,y)^ν · ∂̄F(y), as a matrix-valued field.
    let w_field = |y: &CMatrix| {
        let weight = h_poly(y, y).re.powf(nu);
        antiholo_gradient(f, y, dom, scheme) * cr(weight)
    };
    let mut out = KEndo::zero(dom);
    for vk in units.iter() {
        let dk_w = holo_partial_matrix(&w_field, z, vk, scheme);
        for (l, bvl) in bv.iter().enumerate() {
            let (i, col) = dom.unravel(l);
            out.add_scaled(dk_w[(i, col)], &d_endo(bvl, vk));
        }
    }
    out = out.scaled(cr(hz.powf(-nu)));
    Ok(out)
}

/// Order-swapped twisted Hua operator
/// H' F(z) = Σ_{k,l} ∂̄_l ( h^{−ν} ∂_k ( h^ν F ) ) (z) · D(B(z, z̄) v_l, v̄_k).
pub fn hua_prime<F: Fn(&CMatrix) -> Complex64>(
    f: &F,
    z: &CMatrix,
    nu: f64,
    dom: &DomainParams,
    scheme: &FdScheme,
) -> Result<KEndo> {
    ensure_interior_margin(z)?;
    let units = dom.matrix_units();
    let weighted = |y: &CMatrix| cr(h_poly(y, y).re.powf(nu)) * f(y);
    // Ψ(y) = vector of ψ_k(y) = h(y,y)^{−ν} ∂_k (h^ν F)(y).
    let psi = |y: &CMatrix| -> Vec<Complex64> {
        let unweight = h_poly(y, y).re.powf(-nu);
        units
            .iter()
            .map(|vk| holo_partial(&weighted, y, vk, scheme) * unweight)
            .collect()
    };
    let mut out = KEndo::zero(dom);
    for vl in units.iter() {
        let col = antiholo_partial_vec(&psi, z, vl, scheme);
        let bvl = bergman_apply(z, z, vl);
        for (k, vk) in units.iter().enumerate() {
            out.add_scaled(col[k], &d_endo(&bvl, vk));
        }
    }
    Ok(out)
}

/// Holomorphic Jacobian of the Möbius map w ↦ g·w at z, as an n×n matrix in
/// the flat basis, computed by finite differences.
pub fn moebius_jacobian_fd(
    g: &GroupElement,
    z: &CMatrix,
    scheme: &FdScheme,
) -> Result<CMatrix> {
    let dom = *g.domain();
    moebius_apply(g, z)?;
    let map = |y: &CMatrix| {
        moebius_apply(g, y).expect("Möbius denominator became singular inside the FD stencil")
    };
    let n = dom.n();
    let mut jac = CMatrix::zeros(n, n);
    for beta in 0..n {
        let dir = dom.unit(beta);
        let col = holo_partial_matrix(&map, z, &dir, scheme);
        let flat = dom.flatten(&col);
        for alpha in 0..n {
            jac[(alpha, beta)] = flat[alpha];
        }
    }
    Ok(jac)
}

fn radial_checks(t: &[f64], j: usize, dom: &DomainParams) -> Result<()> {
    if t.len() != dom.r() {
        return Err(Error::InvalidParam(format!(
            "expected {} radial coordinates, got {}",
            dom.r(),
            t.len()
        )));
    }
    if j >= dom.r() {
        return Err(Error::InvalidParam(format!(
            "radial index {j} out of range for rank {}",
            dom.r()
        )));
    }
    if t.iter().any(|tk| tk.abs() >= 1.0) {
        return Err(Error::InvalidParam(
            "radial coordinates must lie in (-1, 1)".into(),
        ));
    }
    if t[j].abs() < RADIAL_SINGULARITY_MARGIN {
        return Err(Error::SingularRadialConfig(format!("t_{} = 0", j + 1)));
    }
    for k in 0..t.len() {
        if k != j && (t[j].abs() - t[k].abs()).abs() < RADIAL_SINGULARITY_MARGIN {
            return Err(Error::SingularRadialConfig(format!(
                "|t_{}| = |t_{}|",
                j + 1,
                k + 1
            )));
        }
    }
    Ok(())
}

fn radial_d1<F: Fn(&[f64]) -> Complex64>(
    f: &F,
    t: &[f64],
    k: usize,
    scheme: &FdScheme,
) -> Complex64 {
    let eval = |h: f64| {
        let mut tt = t.to_vec();
        tt[k] += h;
        f(&tt)
    };
    let once = |h: f64| match scheme.order {
        FdOrder::Two => (eval(h) - eval(-h)) / (2.0 * h),
        FdOrder::Four => {
            (eval(-2.0 * h) - eval(2.0 * h) + (eval(h) - eval(-h)) * 8.0) / (12.0 * h)
        }
    };
    if !scheme.richardson {
        once(scheme.step)
    } else {
        let factor = (2.0_f64).powi(scheme.order.value() as i32);
        (once(0.5 * scheme.step) * factor - once(scheme.step)) / (factor - 1.0)
    }
}

fn radial_d2<F: Fn(&[f64]) -> Complex64>(
    f: &F,
    t: &[f64],
    k: usize,
    scheme: &FdScheme,
) -> Complex64 {
    let eval = |h: f64| {
        let mut tt = t.to_vec();
        tt[k] += h;
        f(&tt)
    };
    let once = |h: f64| match scheme.order {
        FdOrder::Two => (eval(h) - eval(0.0) * 2.0 + eval(-h)) / (h * h),
        FdOrder::Four => {
            ((eval(h) + eval(-h)) * 16.0
                - (eval(2.0 * h) + eval(-2.0 * h))
                - eval(0.0) * 30.0)
                / (12.0 * h * h)
        }
    };
    if !scheme.richardson {
        once(scheme.step)
    } else {
        let factor = (2.0_f64).powi(scheme.order.value() as i32);
        (once(0.5 * scheme.step) * factor - once(scheme.step)) / (factor - 1.0)
    }
}

/// The j-th radial part of the twisted Hua operator on the singular-value
/// coordinates t = (t_1, …, t_r):
///
/// ```text
///   H_j F = (1−t_j²)² ( ∂_j² + (1+2ν)/t_j ∂_j )
///         + (a/2) Σ_{k≠j} (1−t_j²)(1−t_k²) [ (∂_j−∂_k)/(t_j−t_k) + (∂_j+∂_k)/(t_j+t_k) ]
///         + (2b−2ν) (1−t_j²) (1/t_j) ∂_j ,
/// ```
///
/// evaluated by central differences on the profile. Fails on singular
/// configurations (t_j = 0 or |t_j| = |t_k|).
pub fn radial_hua_j<F: Fn(&[f64]) -> Complex64>(
    profile: &F,
    t: &[f64],
    j: usize,
    nu: f64,
    dom: &DomainParams,
    scheme: &FdScheme,
) -> Result<Complex64> {
    radial_checks(t, j, dom)?;
    let tj = t[j];
    let wj = 1.0 - tj * tj;
    let d1: Vec<Complex64> = (0..t.len())
        .map(|k| radial_d1(profile, t, k, scheme))
        .collect();
    let d2j = radial_d2(profile, t, j, scheme);
    let mut total = (d2j + d1[j] * ((1.0 + 2.0 * nu) / tj)) * (wj * wj);
    let half_a = dom.a() as f64 / 2.0;
    if half_a != 0.0 {
        for k in 0..t.len() {
            if k == j {
                continue;
            }
            let wk = 1.0 - t[k] * t[k];
            let term = (d1[j] - d1[k]) / (tj - t[k]) + (d1[j] + d1[k]) / (tj + t[k]);
            total += term * (half_a * wj * wk);
        }
    }
    total += d1[j] * ((2.0 * (dom.b() as f64) - 2.0 * nu) * wj / tj);
    Ok(total)
}

/// Result of the radial-reduction comparison at a frame point.
#[derive(Clone, Debug)]
pub struct RadialComparison {
    /// 4·H F (or its first-component part on non-tube domains).
    pub lhs: KEndo,
    /// Σ_j H_j F · D(e_j, ē_j) (or its first-component part).
    pub rhs: KEndo,
    /// Largest entry of the blockwise difference.
    pub max_abs_diff: f64,
    /// True when only the k^(1) components were compared (non-tube domains).
    pub k1_only: bool,
}

/// Compare the ambient twisted Hua operator with its radial decomposition at
/// the frame point z = Σ_j t_j e_j:
///
/// ```text
///   4 · H F (z)  =  Σ_j (H_j F̃)(t) · D(e_j, ē_j) ,
/// ```
///
/// where F̃ is the radial profile of F (the caller supplies both, and they
/// must agree near the frame orbit). On tube domains the full pairs are
/// compared; otherwise only the k^(1) parts, which is the component the
/// radial data determines.
pub fn radial_consistency<F, P>(
    f: &F,
    profile: &P,
    t: &[f64],
    nu: f64,
    dom: &DomainParams,
    scheme: &FdScheme,
) -> Result<RadialComparison>
where
    F: Fn(&CMatrix) -> Complex64,
    P: Fn(&[f64]) -> Complex64,
{
    if t.len() != dom.r() {
        return Err(Error::InvalidParam(format!(
            "expected {} radial coordinates, got {}",
            dom.r(),
            t.len()
        )));
    }
    let frame = dom.frame();
    let mut z = dom.zero();
    for (j, e) in frame.units.iter().enumerate() {
        z += e * cr(t[j]);
    }
    let full_lhs = hua_general(f, &z, nu, dom, scheme)?.scaled(cr(4.0));
    let mut full_rhs = KEndo::zero(dom);
    for (j, e) in frame.units.iter().enumerate() {
        let hj = radial_hua_j(profile, t, j, nu, dom, scheme)?;
        full_rhs.add_scaled(hj, &d_endo(e, e));
    }
    let (lhs, rhs, k1_only) = if dom.is_tube() {
        (full_lhs, full_rhs, false)
    } else {
        (full_lhs.split().0, full_rhs.split().0, true)
    };
    let max_abs_diff = lhs.sub(&rhs).max_abs();
    Ok(RadialComparison {
        lhs,
        rhs,
        max_abs_diff,
        k1_only,
    })
}

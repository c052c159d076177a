//! # bsdlab
//!
//! A numerical laboratory for the Jordan-triple analysis of the matrix ball
//! domains I_{r,r+b} = {z ∈ M_{r,r+b}(ℂ) : ‖z‖ < 1} (spectral norm), the
//! type I bounded symmetric domains.
//!
//! The crate verifies, at machine precision or controlled statistical error,
//! a family of computational identities tying together:
//!
//! * the Jordan triple product, Bergman operator, and kernel polynomial
//!   h(z, w) = det(I − z w*) ([`domain`]);
//! * the biholomorphism group SU(r, r+b) acting by matrix Möbius maps, its
//!   Jacobian cocycle, and covariance laws ([`group`]);
//! * twisted second-order Hua operators built from finite-difference
//!   Wirtinger calculus, their eigen-equations on Poisson kernels, and their
//!   radial parts on frame orbits ([`calculus`]);
//! * weighted Poisson kernels on the Shilov boundary, their Szegő-type
//!   transforms by deterministic Monte Carlo or circle quadrature, spherical
//!   functions, and the Gamma-product normalization constants ([`kernels`]);
//! * the Faraut–Koranyi expansion of h^{−ν} in Schur polynomials with
//!   generalized Pochhammer coefficients, conical polynomials, and the
//!   discrete-series signature sets ([`fk`]);
//! * a registry of named, reproducible experiments with canonical JSON/CSV
//!   reports and convergence sweeps ([`harness`]).
//!
//! ## Quick start
//!
//! ```
//! use bsdlab::domain::{DomainParams, h_poly, sample_interior};
//! use rand::SeedableRng;
//! use rand_chacha::ChaCha8Rng;
//!
//! let dom = DomainParams::new(2, 1).unwrap();   // I_{2,3}
//! assert_eq!((dom.n(), dom.p(), dom.q()), (6, 5, 3));
//!
//! let mut rng = ChaCha8Rng::seed_from_u64(1);
//! let z = sample_interior(&mut rng, 0.5, &dom);
//! let h = h_poly(&z, &z);
//! assert!(h.re > 0.0 && h.im.abs() < 1e-12);
//! ```
//!
//! Runnable walkthroughs of each capability live in `examples/`; the
//! `bsdlab` binary exposes the experiment registry (`bsdlab list`,
//! `bsdlab run <name>`, `bsdlab sweep <name> --param …`, `bsdlab all`).
//!
//! ## Conventions
//!
//! Points of V are `nalgebra` dense complex matrices with r rows and r+b
//! columns. Flat indices α enumerate the matrix-unit basis row-major,
//! α = i·(r+b) + l. Derivatives are Wirtinger: ∂ and ∂̄ in a direction v are
//! assembled from real central differences along v and iv. Elements of the
//! complexified structure algebra are pairs (a, d) acting by w ↦ a·w − w·d.
//! All randomness flows through explicitly seeded ChaCha8 generators, and
//! the Monte Carlo integrators shard deterministically, so every number the
//! crate produces is reproducible bit for bit.

pub mod calculus;
pub mod domain;
pub mod error;
pub mod fk;
pub mod group;
pub mod harness;
pub mod kernels;
pub mod linalg;

pub use error::{Error, Result};

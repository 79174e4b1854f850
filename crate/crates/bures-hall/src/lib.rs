//! Exact spectral statistics of the Bures–Hall random-matrix ensemble.
//!
//! The crate computes the mean von Neumann entropy, the mean purity, and
//! arbitrary integer spectral moments of the unconstrained Bures–Hall
//! ensemble exactly, via three-term recurrences over big-rational
//! arithmetic. Supporting layers expose the ensemble's biorthogonal
//! polynomial system, its correlation kernels, and independent numerical
//! oracles (direct quadrature and Monte Carlo sampling) used to verify
//! every identity the recurrences rest on.
//!
//! Layering, bottom up:
//!
//! - [`exact`] — big-rational substrate: half-integers, digamma values in
//!   the exact space Q ⊕ Qγ ⊕ Q·ln2, Gamma quotients as
//!   `rational · √π^a · √2^b`, dense rational polynomials.
//! - [`params`] — validated ensemble parameters (m, n) and derived α, d.
//! - [`biorth`] — the biorthogonal polynomial pairs, their leading
//!   coefficients, structure relations and summation identities, all with
//!   exact coefficients.
//! - [`quad`] — Gaussian quadrature rules (generalized Laguerre, Jacobi,
//!   composite Legendre) and a two-variable integrator for kernels with a
//!   `1/(x+y)^r` singularity.
//! - [`kernels`] — correlation-kernel evaluation, including the exponential
//!   integral family J(s, x) and the one-point density.
//! - [`moments`] — recurrence coefficients, exact moment and log-weighted
//!   moment chains, and the entropy/purity endpoints.
//! - [`oracle`] — independent verification: direct quadrature of the joint
//!   density (m ≤ 3) and a seeded Metropolis sampler for any (m, n).

pub mod biorth;
pub mod error;
pub mod exact;
pub mod kernels;
pub mod moments;
pub mod oracle;
pub mod params;
pub mod quad;

pub use error::{Error, Result};
pub use params::EnsembleParams;
